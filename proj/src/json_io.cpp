#include "unitonlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace unitonlab {

Json to_json(const GaussRational& v) {
  return Json{{"re", v.re_string()}, {"im", v.im_string()}};
}

Json to_json(const BiPoly& v) {
  Json terms = Json::array();
  for (const auto& [m, c] : v.terms())
    terms.push_back(Json{{"i", m.i}, {"j", m.j}, {"c", to_json(c)}});
  return terms;
}

Json to_json(const RatFunc& v) {
  return Json{{"num", to_json(v.num())}, {"den", to_json(v.den())}};
}

Json to_json(const MatRF& v) {
  Json rows = Json::array();
  for (int i = 0; i < v.n(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < v.n(); ++j) row.push_back(to_json(v.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", v.n()}, {"rows", std::move(rows)}};
}

Json to_json(const LoopMat& v) {
  Json terms = Json::array();
  for (const auto& [k, m] : v.coeffs())
    terms.push_back(Json{{"k", k}, {"matrix", to_json(m)}});
  return Json{{"n", v.n()}, {"terms", std::move(terms)}};
}

Json to_json(const CircleSamples& v) {
  Json vals = Json::array();
  for (const auto& M : v.values) {
    Json mat = Json::array();
    for (int r = 0; r < v.n; ++r) {
      Json row = Json::array();
      for (int c = 0; c < v.n; ++c)
        row.push_back(Json::array({M(r, c).real(), M(r, c).imag()}));
      mat.push_back(std::move(row));
    }
    vals.push_back(std::move(mat));
  }
  return Json{{"n", v.n}, {"m", v.m}, {"values", std::move(vals)}};
}

namespace {
void require(bool ok, const std::string& what) {
  if (!ok) throw ParseError(what);
}
}  // namespace

GaussRational gauss_rational_from_json(const Json& j) {
  require(j.is_object() && j.contains("re") && j.contains("im"),
          "GaussRational needs {re, im}");
  return GaussRational::from_strings(j["re"].get<std::string>(),
                                     j["im"].get<std::string>());
}

BiPoly bipoly_from_json(const Json& j) {
  require(j.is_array(), "BiPoly must be an array of terms");
  BiPoly p;
  for (const auto& t : j) {
    require(t.contains("i") && t.contains("j") && t.contains("c"),
            "BiPoly term needs {i, j, c}");
    int i = t["i"].get<int>(), jj = t["j"].get<int>();
    require(i >= 0 && jj >= 0, "BiPoly exponents must be nonnegative");
    p.add_term(i, jj, gauss_rational_from_json(t["c"]));
  }
  return p;
}

RatFunc ratfunc_from_json(const Json& j) {
  require(j.is_object() && j.contains("num") && j.contains("den"),
          "RatFunc needs {num, den}");
  return RatFunc(bipoly_from_json(j["num"]), bipoly_from_json(j["den"]));
}

MatRF matrf_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("rows"), "MatRF needs {n, rows}");
  int n = j["n"].get<int>();
  require(n >= 1, "MatRF dimension must be >= 1");
  const auto& rows = j["rows"];
  require(rows.is_array() && static_cast<int>(rows.size()) == n, "MatRF rows size");
  MatRF m(n);
  for (int r = 0; r < n; ++r) {
    require(rows[r].is_array() && static_cast<int>(rows[r].size()) == n,
            "MatRF row " + std::to_string(r) + " size");
    for (int c = 0; c < n; ++c) {
      try {
        m.at(r, c) = ratfunc_from_json(rows[r][c]);
      } catch (const Error& e) {
        throw ParseError("entry (" + std::to_string(r) + "," + std::to_string(c) +
                         "): " + e.what());
      }
    }
  }
  return m;
}

LoopMat loopmat_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("terms"),
          "LoopMat needs {n, terms}");
  int n = j["n"].get<int>();
  LoopMat l(n);
  for (const auto& t : j["terms"]) {
    require(t.contains("k") && t.contains("matrix"), "LoopMat term needs {k, matrix}");
    l.set_coeff(t["k"].get<int>(), matrf_from_json(t["matrix"]));
  }
  return l;
}

CircleSamples circle_samples_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("m") && j.contains("values"),
          "CircleSamples needs {n, m, values}");
  CircleSamples s;
  s.n = j["n"].get<int>();
  s.m = j["m"].get<int>();
  require(s.n >= 1 && s.m >= 1, "CircleSamples dimensions");
  const auto& vals = j["values"];
  require(vals.is_array() && static_cast<int>(vals.size()) == (1 << s.m),
          "CircleSamples values length must be 2^m");
  for (const auto& mat : vals) {
    require(mat.is_array() && static_cast<int>(mat.size()) == s.n, "sample matrix rows");
    Eigen::MatrixXcd M(s.n, s.n);
    for (int r = 0; r < s.n; ++r) {
      require(mat[r].is_array() && static_cast<int>(mat[r].size()) == s.n,
              "sample matrix cols");
      for (int c = 0; c < s.n; ++c) {
        const auto& p = mat[r][c];
        require(p.is_array() && p.size() == 2, "sample entry must be [re, im]");
        M(r, c) = std::complex<double>(p[0].get<double>(), p[1].get<double>());
      }
    }
    s.values.push_back(std::move(M));
  }
  return s;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(1) << "\n";
}

std::string string_digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return string_digest(ss.str());
}

}  // namespace unitonlab

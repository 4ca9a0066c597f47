// unitonlab command line: verify maps and extended solutions, measure
// energies, factorize circle symbols, detect jump types, reconstruct
// rational entries and dump the built-in U(3) example.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "unitonlab/birkhoff.hpp"
#include "unitonlab/golden.hpp"
#include "unitonlab/json_io.hpp"
#include "unitonlab/report.hpp"

using namespace unitonlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitError = 1;
constexpr int kExitCheckFail = 2;

struct CliState {
  RunConfig cfg;
  std::string config_path;
};

void apply_config(CliState& st) {
  if (!st.config_path.empty()) st.cfg.merge_json(load_json_file(st.config_path));
  st.cfg.validate();
  set_default_threads(st.cfg.threads);
}

Json report_header(const RunConfig& cfg, const std::string& input_path) {
  Json j;
  j["config"] = cfg.to_json();
  if (!input_path.empty()) j["input_digest"] = file_digest(input_path);
  return j;
}

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(1) << "\n";
  } else {
    write_json_file(out_path, j);
  }
}

/// parse "p/q+r/si" or plain decimal forms into an exact rational complex
GaussRational parse_rational_complex(const std::string& text) {
  std::string s = text;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  std::string re = s, im = "0";
  if (!s.empty() && s.back() == 'i') {
    std::size_t split = std::string::npos;
    for (std::size_t p = 1; p < s.size(); ++p)
      if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/' && s[p - 1] != 'e') split = p;
    if (split == std::string::npos) {
      re = "0";
      im = s.substr(0, s.size() - 1);
    } else {
      re = s.substr(0, split);
      im = s.substr(split, s.size() - split - 1);
    }
    if (im == "+" || im.empty()) im = "1";
    if (im == "-") im = "-1";
  }
  auto to_q = [](std::string part) {
    if (!part.empty() && part.front() == '+') part.erase(part.begin());
    if (part.find('.') == std::string::npos)
      return GaussRational::from_strings(part, "0").re();
    return mpq_class(GaussRational::from_double(std::stod(part)).re());
  };
  return GaussRational(to_q(re), to_q(im));
}

int run_verify(CliState& st, const std::string& input) {
  Json j = load_json_file(input);
  VerifyBundleReport rep;
  try {
    if (j.contains("terms")) {
      rep = verify_loop(loopmat_from_json(j), st.cfg);
    } else if (j.contains("rows")) {
      rep = verify_map(matrf_from_json(j), st.cfg);
    } else {
      throw ParseError("input is neither a MatRF nor a LoopMat document");
    }
  } catch (const SingularMatrixFunction& e) {
    throw SingularMatrixFunction(std::string(e.what()) + " (input " + input + ")");
  }
  Json out = report_header(st.cfg, input);
  out["report"] = to_json(rep);
  emit(out, st.cfg.out_path);
  return rep.overall_pass ? kExitPass : kExitCheckFail;
}

MatRF load_map_or_loop_s(const std::string& input) {
  Json j = load_json_file(input);
  if (j.contains("terms")) return loopmat_from_json(j).eval_lambda(GaussRational(1));
  return matrf_from_json(j);
}

int run_energy(CliState& st, const std::string& input, const std::string& density_csv) {
  MatRF S = load_map_or_loop_s(input);
  DensityDump dump;
  EnergyReport rep = energy_quadrature(S, st.cfg.grid(), density_csv.empty() ? nullptr : &dump);
  if (!density_csv.empty()) {
    std::ofstream csv(density_csv);
    csv << "x,y,re,im\n";
    for (const auto* chart : {&dump.chart1, &dump.chart2})
      for (const auto& row : *chart)
        csv << row[0] << "," << row[1] << "," << row[2] << ",0\n";
  }
  Json out = report_header(st.cfg, input);
  out["report"] = to_json(rep);
  emit(out, st.cfg.out_path);
  return rep.deviation <= st.cfg.c2_tol ? kExitPass : kExitCheckFail;
}

int run_number(CliState& st, const std::string& input) {
  Json j = load_json_file(input);
  if (!j.contains("terms")) throw ParseError("number requires a LoopMat document");
  auto [supp, verdict] = uniton_number_bound(loopmat_from_json(j));
  Json out = report_header(st.cfg, input);
  out["report"] = Json{{"support_min", supp.min_deg},
                       {"support_max", supp.max_deg},
                       {"verdict", verdict_name(verdict)}};
  emit(out, st.cfg.out_path);
  return kExitPass;
}

Json birkhoff_to_json(const BirkhoffResult& f) {
  auto mat_json = [](const Eigen::MatrixXcd& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (int c = 0; c < m.cols(); ++c)
        row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  Json h = Json::array(), hh = Json::array();
  for (std::size_t p = 0; p < f.h_coeffs.size(); ++p)
    h.push_back(Json{{"k", static_cast<int>(p)}, {"matrix", mat_json(f.h_coeffs[p])}});
  for (const auto& [k, m] : f.hhat_coeffs)
    hh.push_back(Json{{"k", k}, {"matrix", mat_json(m)}});
  return Json{{"indices", f.indices},
              {"residual", f.residual},
              {"det_winding", f.det_winding},
              {"index_margin", f.index_margin},
              {"h_coeffs", std::move(h)},
              {"hhat_coeffs", std::move(hh)}};
}

int run_factorize(CliState& st, const std::string& samples_path) {
  CircleSamples s = circle_samples_from_json(load_json_file(samples_path));
  BirkhoffResult f = birkhoff_factorize(s, st.cfg.factor());
  Json out = report_header(st.cfg, samples_path);
  out["report"] = birkhoff_to_json(f);
  emit(out, st.cfg.out_path);
  return f.residual <= st.cfg.residual_tol ? kExitPass : kExitCheckFail;
}

int run_indices(CliState& st, const std::string& samples_path) {
  CircleSamples s = circle_samples_from_json(load_json_file(samples_path));
  std::vector<int> idx = partial_indices(s, st.cfg.factor());
  Json out = report_header(st.cfg, samples_path);
  out["report"] = Json{{"indices", idx}, {"det_winding", det_winding(s)}};
  emit(out, st.cfg.out_path);
  return kExitPass;
}

int run_reconstruct(CliState& st, const std::string& grid_path, int degz_num, int degw_num,
                    int degz_den, int degw_den) {
  std::ifstream in(grid_path);
  if (!in) throw ParseError("cannot open " + grid_path);
  std::string line;
  std::getline(in, line);  // header x,y,re,im
  std::vector<std::pair<std::complex<double>, std::complex<double>>> samples;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    double x, y, re, im;
    if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &x, &y, &re, &im) != 4)
      throw ParseError("bad CSV row: " + line);
    samples.push_back({{x, y}, {re, im}});
  }
  ReconstructResult r = rational_reconstruct(samples, {degz_num, degw_num},
                                             {degz_den, degw_den}, st.cfg.reconstruct());
  Json out = report_header(st.cfg, grid_path);
  out["report"] = Json{{"value", to_json(r.value)},
                       {"all_snapped", r.all_snapped},
                       {"holdout_error", r.holdout_error}};
  emit(out, st.cfg.out_path);
  return kExitPass;
}

int run_golden(CliState& st, const std::string& which, bool transition, const std::string& z0s,
               const std::string& w0s) {
  if (which != "u3") throw Error("unknown golden data set: " + which);
  Json out;
  if (transition) {
    if (z0s.empty()) throw Error("golden --transition needs a section point z0 [w0]");
    GaussRational z0 = parse_rational_complex(z0s);
    GaussRational w0 = w0s.empty() ? z0.conj() : parse_rational_complex(w0s);
    int m = 6;
    CircleSamples s = golden_transition(z0, w0, m);
    out = to_json(s);
  } else {
    out = to_json(golden_extended());
  }
  emit(out, st.cfg.out_path);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unitonlab: unitons via exact rational algebra and Birkhoff factorization"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  CliState st;
  app.add_option("--config", st.config_path, "JSON config merged over defaults");
  app.add_option("--threads", st.cfg.threads, "parallelism degree (0 = auto)");
  app.add_option("--out", st.cfg.out_path, "output path (default stdout)");

  std::string input, density_csv, samples_path, grid_path;
  std::string golden_which = "u3", z0s, w0s;
  bool golden_transition_flag = false;
  int degz_num = 1, degw_num = 1, degz_den = 1, degw_den = 1;

  auto* verify = app.add_subcommand("verify", "run all residual checks on a map or loop");
  verify->add_option("--in", input, "MatRF or LoopMat JSON")->required();

  auto* energy = app.add_subcommand("energy", "two-chart energy quadrature and c2 estimate");
  energy->add_option("--in", input, "MatRF or LoopMat JSON")->required();
  energy->add_option("--grid", st.cfg.grid_resolution, "points per axis per chart");
  energy->add_option("--density-csv", density_csv, "dump (x,y,density) per chart");

  auto* number = app.add_subcommand("number", "uniton-number bound from Laurent support");
  number->add_option("--in", input, "LoopMat JSON")->required();

  auto* factorize = app.add_subcommand("factorize", "Birkhoff factorization of circle samples");
  factorize->add_option("--samples", samples_path, "CircleSamples JSON")->required();
  factorize->add_option("--modes", st.cfg.modes, "truncation order");
  factorize->add_option("--tol", st.cfg.residual_tol, "success tolerance");

  auto* indices = app.add_subcommand("indices", "partial indices (jump type) of a symbol");
  indices->add_option("--samples", samples_path, "CircleSamples JSON")->required();

  auto* reconstruct = app.add_subcommand("reconstruct", "rational entry from CSV samples");
  reconstruct->add_option("--grid", grid_path, "CSV with header x,y,re,im")->required();
  reconstruct->add_option("--degz", degz_num, "numerator z-degree bound");
  reconstruct->add_option("--degw", degw_num, "numerator w-degree bound");
  reconstruct->add_option("--degz-den", degz_den, "denominator z-degree bound");
  reconstruct->add_option("--degw-den", degw_den, "denominator w-degree bound");

  auto* golden = app.add_subcommand("golden", "dump built-in golden data");
  golden->add_option("set", golden_which, "data set name (u3)");
  golden->add_flag("--transition", golden_transition_flag,
                   "dump transition CircleSamples at the section point");
  golden->add_option("z0", z0s, "section point z0 as rational complex, e.g. 3/10+1/10i");
  golden->add_option("w0", w0s, "section point w0 (default conj z0)");

  CLI11_PARSE(app, argc, argv);

  try {
    apply_config(st);
    if (*verify) return run_verify(st, input);
    if (*energy) return run_energy(st, input, density_csv);
    if (*number) return run_number(st, input);
    if (*factorize) return run_factorize(st, samples_path);
    if (*indices) return run_indices(st, samples_path);
    if (*reconstruct)
      return run_reconstruct(st, grid_path, degz_num, degw_num, degz_den, degw_den);
    if (*golden) return run_golden(st, golden_which, golden_transition_flag, z0s, w0s);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

#include "unitonlab/config.hpp"

namespace unitonlab {

namespace {
bool power_of_two(long v) { return v > 0 && (v & (v - 1)) == 0; }
}  // namespace

void RunConfig::validate() const {
  if (grid_resolution < 16 || !power_of_two(grid_resolution))
    throw Error("grid resolution must be a power of two >= 16");
  if (modes < 4 || !power_of_two(modes))
    throw Error("factorization modes must be a power of two >= 4");
  if (eval_floor <= 0 || residual_tol <= 0 || index_tol <= 0 || c2_tol <= 0 ||
      unitary_tol <= 0)
    throw Error("tolerances must be positive");
  if (snap_cap <= 0) throw Error("snap cap must be positive");
}

GridSpec RunConfig::grid() const {
  GridSpec g;
  g.resolution = grid_resolution;
  g.rule = rule;
  g.threads = threads;
  return g;
}

FactorConfig RunConfig::factor() const {
  FactorConfig f;
  f.modes = modes;
  f.tol = residual_tol;
  f.index_tol = index_tol;
  return f;
}

ReconstructConfig RunConfig::reconstruct() const {
  ReconstructConfig r;
  r.snap_den_cap = snap_cap;
  return r;
}

Json RunConfig::to_json() const {
  return Json{{"grid_resolution", grid_resolution},
              {"rule", rule == QuadRule::midpoint ? "midpoint" : "gauss_legendre"},
              {"modes", modes},
              {"circle_resolution", circle_resolution},
              {"eval_floor", eval_floor},
              {"residual_tol", residual_tol},
              {"index_tol", index_tol},
              {"c2_tol", c2_tol},
              {"unitary_tol", unitary_tol},
              {"snap_cap", snap_cap},
              {"threads", threads}};
}

void RunConfig::merge_json(const Json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  if (j.contains("grid_resolution")) grid_resolution = j["grid_resolution"].get<int>();
  if (j.contains("rule")) {
    std::string r = j["rule"].get<std::string>();
    if (r == "midpoint") rule = QuadRule::midpoint;
    else if (r == "gauss_legendre") rule = QuadRule::gauss_legendre;
    else throw ParseError("unknown quadrature rule " + r);
  }
  if (j.contains("modes")) modes = j["modes"].get<int>();
  if (j.contains("circle_resolution")) circle_resolution = j["circle_resolution"].get<int>();
  if (j.contains("eval_floor")) eval_floor = j["eval_floor"].get<double>();
  if (j.contains("residual_tol")) residual_tol = j["residual_tol"].get<double>();
  if (j.contains("index_tol")) index_tol = j["index_tol"].get<double>();
  if (j.contains("c2_tol")) c2_tol = j["c2_tol"].get<double>();
  if (j.contains("unitary_tol")) unitary_tol = j["unitary_tol"].get<double>();
  if (j.contains("snap_cap")) snap_cap = j["snap_cap"].get<long>();
  if (j.contains("threads")) threads = j["threads"].get<int>();
  validate();
}

}  // namespace unitonlab

#include "unitonlab/report.hpp"

namespace unitonlab {

namespace {

bool check_passes(const ResidualReport& r, const RunConfig& cfg) {
  if (r.kind == ResidualKind::infinity) return r.exact_zero;  // numeric verdict flag
  if (r.exact_path) return r.exact_zero;
  return r.max_sample_norm <= cfg.residual_tol;
}

void append_map_checks(VerifyBundleReport& rep, const MatRF& S, const RunConfig& cfg) {
  Connection A = connection_from_map(S);
  rep.checks.push_back(harmonic_residual(S));
  rep.checks.push_back(flatness_residual(A));
  rep.checks.push_back(bogomolny_residual(bogomolny_fields(A)));
  rep.checks.push_back(smoothness_at_infinity(S));
  if (rep.checks.back().exact_zero) {
    try {
      rep.energy = energy_quadrature(S, cfg.grid());
    } catch (const NonUnitarySample& e) {
      rep.energy_skip = e.what();
    } catch (const UnboundedDensity& e) {
      rep.energy_skip = e.what();
    }
  } else {
    rep.energy_skip = "density unbounded at infinity";
  }
}

}  // namespace

VerifyBundleReport verify_map(const MatRF& S, const RunConfig& cfg) {
  VerifyBundleReport rep;
  rep.input_kind = "map";
  append_map_checks(rep, S, cfg);
  rep.overall_pass = rep.energy_skip.empty();
  for (const auto& c : rep.checks) rep.overall_pass = rep.overall_pass && check_passes(c, cfg);
  if (rep.energy) rep.overall_pass = rep.overall_pass && rep.energy->deviation <= cfg.c2_tol;
  return rep;
}

VerifyBundleReport verify_loop(const LoopMat& E, const RunConfig& cfg) {
  VerifyBundleReport rep;
  rep.input_kind = "loop";
  rep.checks.push_back(extended_check(E));
  MatRF S = E.eval_lambda(GaussRational(1));
  append_map_checks(rep, S, cfg);
  if (is_unitary_loop_exact(E)) rep.uniton_number = uniton_number_bound(E);
  rep.overall_pass = rep.energy_skip.empty();
  for (const auto& c : rep.checks) rep.overall_pass = rep.overall_pass && check_passes(c, cfg);
  if (rep.energy) rep.overall_pass = rep.overall_pass && rep.energy->deviation <= cfg.c2_tol;
  return rep;
}

Json to_json(const ResidualReport& r) {
  return Json{{"kind", residual_kind_name(r.kind)},
              {"exact_zero", r.exact_zero},
              {"max_sample_norm", r.max_sample_norm},
              {"sample_count", r.sample_count},
              {"exact_path", r.exact_path}};
}

Json to_json(const EnergyReport& r) {
  return Json{{"energy", r.energy},
              {"c2_estimate", r.c2_estimate},
              {"nearest_integer", r.nearest_integer},
              {"deviation", r.deviation},
              {"chart_split", Json::array({r.chart_split.first, r.chart_split.second})},
              {"excluded_mass", r.excluded_mass},
              {"c2_even", r.c2_even}};
}

Json to_json(const VerifyBundleReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  Json out{{"input_kind", r.input_kind}, {"checks", std::move(checks)}};
  if (r.energy) out["energy"] = to_json(*r.energy);
  if (r.uniton_number) {
    const auto& [supp, verdict] = *r.uniton_number;
    out["uniton_number"] = Json{{"support_min", supp.min_deg},
                                {"support_max", supp.max_deg},
                                {"verdict", verdict_name(verdict)}};
  }
  if (!r.energy_skip.empty()) out["energy_skip"] = r.energy_skip;
  out["overall_pass"] = r.overall_pass;
  return out;
}

}  // namespace unitonlab

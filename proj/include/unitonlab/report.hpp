#ifndef UNITONLAB_REPORT_HPP_
#define UNITONLAB_REPORT_HPP_

#include <optional>
#include <vector>

#include "unitonlab/config.hpp"
#include "unitonlab/energy.hpp"

namespace unitonlab {

/// Aggregated verification of a map or extended solution.
struct VerifyBundleReport {
  std::vector<ResidualReport> checks;
  std::optional<EnergyReport> energy;
  std::optional<std::pair<LoopSupport, UnitonVerdict>> uniton_number;
  bool overall_pass = false;
  std::string input_kind;   // "map" or "loop"
  std::string energy_skip;  // reason when the energy preconditions fail
};

/// Run every check applicable to a map S (harmonic, flatness, bogomolny,
/// infinity, energy).
VerifyBundleReport verify_map(const MatRF& S, const RunConfig& cfg);

/// Run every check applicable to an extended solution (extended identities,
/// then the map checks of E_1, plus the uniton-number bound when unitary).
VerifyBundleReport verify_loop(const LoopMat& E, const RunConfig& cfg);

Json to_json(const ResidualReport& r);
Json to_json(const EnergyReport& r);
Json to_json(const VerifyBundleReport& r);

}  // namespace unitonlab

#endif

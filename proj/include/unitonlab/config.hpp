#ifndef UNITONLAB_CONFIG_HPP_
#define UNITONLAB_CONFIG_HPP_

#include <string>

#include "unitonlab/birkhoff.hpp"
#include "unitonlab/json_io.hpp"
#include "unitonlab/quadrature.hpp"

namespace unitonlab {

/// Run-wide configuration shared by the CLI subcommands.
struct RunConfig {
  int grid_resolution = 256;       // power of two, >= 16
  QuadRule rule = QuadRule::midpoint;
  int modes = 32;                  // factorization truncation, power of two
  int circle_resolution = 64;
  double eval_floor = 1e-12;       // pole detection floor for evaluation
  double residual_tol = 1e-10;     // numeric residual tolerance
  double index_tol = 1e-8;         // rank decision threshold
  double c2_tol = 1e-3;            // integrality tolerance for energy checks
  double unitary_tol = 1e-10;      // sampled unitarity tolerance
  long snap_cap = 1000000;         // denominator cap for rational snapping
  int threads = 0;                 // 0: UNITONLAB_THREADS env or hardware
  std::string out_path;

  void validate() const;
  GridSpec grid() const;
  FactorConfig factor() const;
  ReconstructConfig reconstruct() const;

  Json to_json() const;
  /// merge fields present in j over the current values
  void merge_json(const Json& j);
};

}  // namespace unitonlab

#endif

#ifndef UNITONLAB_BIRKHOFF_HPP_
#define UNITONLAB_BIRKHOFF_HPP_

#include <map>
#include <vector>

#include "unitonlab/circle.hpp"

namespace unitonlab {

struct FactorConfig {
  int modes = 32;          // truncation order of the analytic factors
  double tol = 1e-10;      // success tolerance on the splitting residual
  double index_tol = 1e-8; // rank-decision threshold (relative to sigma_max)
  bool forbid_nonzero_indices = false;

  void validate() const;
};

/// T(lambda) H(lambda) = Hhat(lambda) Lambda(lambda) with
///   H  analytic in the disc   (powers 0..modes),
///   Hhat analytic off the origin including infinity (powers -modes..0),
///   Lambda = diag(lambda^{k_i}).
struct BirkhoffResult {
  std::vector<Eigen::MatrixXcd> h_coeffs;            // H_p, p = 0..modes
  std::map<int, Eigen::MatrixXcd> hhat_coeffs;       // Hhat_k, k = -modes..0
  std::vector<int> indices;                          // sorted k_1 <= ... <= k_N
  double residual = 0.0;   // max_j |T_j H(lambda_j) - Hhat(lambda_j) Lambda(lambda_j)|
  int det_winding = 0;
  double index_margin = 0.0;  // smallest kept/dropped singular value ratio

  Eigen::MatrixXcd h_at(std::complex<double> lambda) const;
  Eigen::MatrixXcd hhat_at(std::complex<double> lambda) const;
};

/// winding number of det T around 0 by phase unwrapping.
int det_winding(const CircleSamples& T);

std::vector<int> partial_indices(const CircleSamples& T, const FactorConfig& cfg);

BirkhoffResult birkhoff_factorize(const CircleSamples& T, const FactorConfig& cfg);

struct WardResult {
  Eigen::MatrixXcd S;
  std::vector<Eigen::MatrixXcd> E_samples;  // Hhat(lambda_j) H(-1)^-1; E(-1) = 1
  double residual = 0.0;
  double basing_defect = 0.0;  // |Hhat(-1)^-1 H(-1) - 1|
};

/// Ward's reconstruction S = H(1) Hhat(-1)^-1 from transition samples.
/// The input is first rebased to T(-1) = 1 (right constant factors cancel).
WardResult ward_reconstruct(const CircleSamples& T, const FactorConfig& cfg,
                            bool want_e_samples = false);

struct ReconstructConfig {
  double snap_tol = 1e-6;        // coefficient distance for rational snapping
  long snap_den_cap = 1000000;   // continued-fraction denominator cap
  double validation_tol = 1e-9;  // held-out error bound
  double rank_gap = 1e-6;        // nullspace ambiguity threshold
};

struct ReconstructResult {
  RatFunc value;
  bool all_snapped = true;
  double holdout_error = 0.0;
};

/// Least-squares fit of one rational-function entry from point samples with
/// degree bounds, rational snapping and held-out validation.
ReconstructResult rational_reconstruct(
    const std::vector<std::pair<std::complex<double>, std::complex<double>>>& samples,
    std::pair<int, int> deg_num, std::pair<int, int> deg_den,
    const ReconstructConfig& cfg = {});

}  // namespace unitonlab

#endif

#ifndef UNITONLAB_UNITONS_HPP_
#define UNITONLAB_UNITONS_HPP_

#include <string>
#include <vector>

#include "unitonlab/loopmat.hpp"

namespace unitonlab {

/// Characteristic-coordinate connection of a map S:
///   a_z = (1/2) S^-1 dS/dz,  a_zbar = (1/2) S^-1 dS/dw.
/// On the real locus of a unitary S the pair is anti-hermitian:
/// a_zbar = -adjoint(a_z).
struct Connection {
  MatRF a_z;
  MatRF a_zbar;
  /// exact check of the anti-hermitian invariant
  bool anti_hermitian() const { return a_zbar.eq(-a_z.adjoint()); }
};

enum class ResidualKind { harmonic, flatness, extended, bogomolny, infinity };

std::string residual_kind_name(ResidualKind k);

struct ResidualReport {
  ResidualKind kind = ResidualKind::harmonic;
  bool exact_zero = false;
  double max_sample_norm = 0.0;
  int sample_count = 0;
  /// whether the exact decision path ran (false when the term-count budget
  /// forced the numeric fallback)
  bool exact_path = true;
};

struct BogomolnyFields {
  MatRF a_x, a_y, a_t, phi;
};

struct SamplingOptions {
  int grid = 8;           // grid x grid points over |z| <= radius
  double radius = 2.0;
  double pole_floor = RatFunc::kDefaultPoleFloor;
  std::size_t term_budget = 2000000;  // exact path disabled above this
};

Connection connection_from_map(const MatRF& S);

ResidualReport harmonic_residual(const MatRF& S, const SamplingOptions& opt = {});
ResidualReport flatness_residual(const Connection& A, const SamplingOptions& opt = {});
ResidualReport extended_check(const LoopMat& E, const SamplingOptions& opt = {});
ResidualReport smoothness_at_infinity(const MatRF& S, const SamplingOptions& opt = {});

BogomolnyFields bogomolny_fields(const Connection& A);
ResidualReport bogomolny_residual(const BogomolnyFields& B, const SamplingOptions& opt = {});

enum class UnitonVerdict { consistent_with_one_uniton, at_least_two };

std::string verdict_name(UnitonVerdict v);

/// Laurent-support test of D = star_dual(E at z=0) * E; lambda^{+-2} terms
/// certify at least two unitons.
std::pair<LoopSupport, UnitonVerdict> uniton_number_bound(const LoopMat& E);

struct OneUniton {
  MatRF S;
  LoopMat E;
  MatRF projection;
};

/// One-uniton from a holomorphic vector f of z-polynomials:
///   pi = f adjoint(f) / (adjoint(f) f),  S = 2 pi - 1,  E = pi - lambda pi_perp.
OneUniton one_uniton_from_holo(const std::vector<BiPoly>& f);

/// Optional post-step: rebase S by adjoint(S(infinity)) when the entrywise
/// limit along z -> infinity exists (constant leading behavior).
MatRF base_at_infinity(const MatRF& S);

/// exact unitarity on the real locus: S adjoint(S) = 1.
bool is_unitary_exact(const MatRF& S);
/// exact loop unitarity: E star_dual(E) = identity loop.
bool is_unitary_loop_exact(const LoopMat& E);

}  // namespace unitonlab

#endif

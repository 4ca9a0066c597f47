#ifndef UNITONLAB_LOOPMAT_HPP_
#define UNITONLAB_LOOPMAT_HPP_

#include <map>

#include "unitonlab/matrf.hpp"

namespace unitonlab {

struct LoopSupport {
  int min_deg = 0;
  int max_deg = 0;
  bool empty = true;  // the zero loop has no support
  friend bool operator==(const LoopSupport&, const LoopSupport&) = default;
};

/// Matrix-valued Laurent polynomial in the loop parameter lambda with MatRF
/// coefficients.  Zero coefficient matrices are never stored.
class LoopMat {
 public:
  LoopMat() : n_(0) {}
  explicit LoopMat(int n) : n_(n) {
    if (n < 1) throw DimensionMismatch("LoopMat dimension must be >= 1");
  }

  static LoopMat identity(int n);
  /// constant-in-lambda loop with the given lambda^0 coefficient.
  static LoopMat constant(const MatRF& a);
  /// lambda^k * a
  static LoopMat monomial(int k, const MatRF& a);

  int n() const { return n_; }
  const std::map<int, MatRF>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void set_coeff(int k, MatRF a);
  MatRF coeff(int k) const;  // zero matrix when absent

  LoopMat operator+(const LoopMat& o) const;
  LoopMat operator-(const LoopMat& o) const;
  /// Cauchy product over lambda exponents.
  LoopMat operator*(const LoopMat& o) const;
  LoopMat operator-() const;
  LoopMat scaled(const RatFunc& f) const;
  /// multiply by lambda^k
  LoopMat shifted(int k) const;

  bool eq(const LoopMat& o) const;

  LoopSupport support() const;

  /// exact evaluation at a rational lambda0 (lambda0 != 0 when negative
  /// powers are present).
  MatRF eval_lambda(const GaussRational& lambda0) const;

  /// star dual: lambda^k coefficient of the result is adjoint(coeff(-k)).
  /// On the unit circle this realizes lambda -> adjoint(E(1/conj lambda)),
  /// the loop inverse of a unitary loop.
  LoopMat star_dual() const;

  LoopMat partial(Var v) const;
  /// exact lambda-derivative: k A_k lambda^{k-1}.
  LoopMat lambda_derivative() const;
  LoopMat scale_vars(const GaussRational& a, const GaussRational& b) const;

  /// exact specialization of the coefficients at a rational point (z0, w0).
  LoopMat specialize(const GaussRational& z0, const GaussRational& w0) const;

  /// floating evaluation at (lambda0, z0, w0 = conj z0 unless given).
  Eigen::MatrixXcd sample(std::complex<double> lambda0, std::complex<double> z0,
                          std::complex<double> w0,
                          double pole_floor = RatFunc::kDefaultPoleFloor) const;

  std::size_t term_count() const;

 private:
  int n_;
  std::map<int, MatRF> coeffs_;
};

}  // namespace unitonlab

#endif

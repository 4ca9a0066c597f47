#ifndef UNITONLAB_MATRF_HPP_
#define UNITONLAB_MATRF_HPP_

#include <Eigen/Dense>

#include <vector>

#include "unitonlab/ratfunc.hpp"

namespace unitonlab {

/// Square matrix of rational functions in (z, w).
class MatRF {
 public:
  MatRF() : n_(0) {}
  explicit MatRF(int n) : n_(n), entries_(n * n) {
    if (n < 1) throw DimensionMismatch("MatRF dimension must be >= 1");
  }

  static MatRF identity(int n);
  static MatRF zero(int n) { return MatRF(n); }

  int n() const { return n_; }
  RatFunc& at(int r, int c) { return entries_[r * n_ + c]; }
  const RatFunc& at(int r, int c) const { return entries_[r * n_ + c]; }

  MatRF operator+(const MatRF& o) const;
  MatRF operator-(const MatRF& o) const;
  MatRF operator*(const MatRF& o) const;
  MatRF operator-() const;
  MatRF scaled(const RatFunc& f) const;

  MatRF transpose() const;
  /// bar-transpose: formal hermitian adjoint on the real locus w = conj z.
  MatRF adjoint() const;
  MatRF partial(Var v) const;
  MatRF hat_transform() const;
  MatRF scale_vars(const GaussRational& a, const GaussRational& b) const;

  RatFunc trace() const;
  RatFunc det() const;
  /// adjugate/determinant inverse; throws SingularMatrixFunction if det == 0.
  MatRF inverse() const;

  bool is_zero() const;
  bool eq(const MatRF& o) const;

  /// exact evaluation of every entry at rational (z0, w0).
  MatRF eval_exact_point(const GaussRational& z0, const GaussRational& w0) const;

  Eigen::MatrixXcd eval(std::complex<double> z0, std::complex<double> w0,
                        double pole_floor = RatFunc::kDefaultPoleFloor) const;

  std::size_t term_count() const;

  static MatRF commutator(const MatRF& a, const MatRF& b) { return a * b - b * a; }

 private:
  RatFunc cofactor_det(const std::vector<int>& rows, const std::vector<int>& cols) const;
  int n_;
  std::vector<RatFunc> entries_;
};

}  // namespace unitonlab

#endif

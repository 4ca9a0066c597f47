#ifndef UNITONLAB_RATFUNC_HPP_
#define UNITONLAB_RATFUNC_HPP_

#include <complex>
#include <string>

#include "unitonlab/bipoly.hpp"

namespace unitonlab {

/// Scope guard enabling the optional size-control pass (trial-division
/// cancellation of common polynomial factors).  Off by default; the symbolic
/// pipelines that multiply many matrices turn it on to bound swell.
class ScopedReduction {
 public:
  explicit ScopedReduction(bool enable = true);
  ~ScopedReduction();
  static bool enabled();

 private:
  bool previous_;
};

/// Rational function num/den in (z, w).  Normalized so that den is nonzero,
/// shares no monomial content with num, and has leading coefficient 1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(BiPoly(1)) {}
  explicit RatFunc(long c) : num_(BiPoly(c)), den_(BiPoly(1)) {}
  explicit RatFunc(GaussRational c) : num_(BiPoly(std::move(c))), den_(BiPoly(1)) {}
  explicit RatFunc(BiPoly num) : num_(std::move(num)), den_(BiPoly(1)) {}
  RatFunc(BiPoly num, BiPoly den);

  static RatFunc variable(Var v) { return RatFunc(BiPoly::variable(v)); }

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { *this = *this + o; return *this; }

  /// Equality as rational functions: cross-multiplication, no gcd.
  bool eq(const RatFunc& o) const;

  RatFunc partial(Var v) const;
  RatFunc bar() const;
  /// exact substitution (z, w) -> (1/z, 1/w), cleared of negative powers.
  RatFunc hat_transform() const;
  RatFunc scale_vars(const GaussRational& a, const GaussRational& b) const;
  GaussRational eval_exact(const GaussRational& z0, const GaussRational& w0) const;

  /// Floating evaluation; throws PoleAtPoint when |den| falls below floor.
  std::complex<double> eval(std::complex<double> z0, std::complex<double> w0,
                            double pole_floor = kDefaultPoleFloor) const;

  std::size_t term_count() const { return num_.term_count() + den_.term_count(); }
  std::string to_string() const;

  static constexpr double kDefaultPoleFloor = 1e-12;

 private:
  void normalize();
  BiPoly num_, den_;
};

}  // namespace unitonlab

#endif

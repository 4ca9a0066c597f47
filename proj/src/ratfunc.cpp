#include "unitonlab/ratfunc.hpp"

#include <algorithm>
#include <atomic>

namespace unitonlab {

namespace {
std::atomic<int> g_reduction_depth{0};
}

ScopedReduction::ScopedReduction(bool enable) : previous_(enable) {
  if (previous_) ++g_reduction_depth;
}

ScopedReduction::~ScopedReduction() {
  if (previous_) --g_reduction_depth;
}

bool ScopedReduction::enabled() { return g_reduction_depth.load() > 0; }

RatFunc::RatFunc(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  normalize();
}

void RatFunc::normalize() {
  if (den_.is_zero()) throw DivisionByZeroFunction("zero denominator");
  if (num_.is_zero()) {
    den_ = BiPoly(1);
    return;
  }
  // strip common monomial content z^a w^b
  auto [ni, nj] = num_.min_exponents();
  auto [di, dj] = den_.min_exponents();
  int si = std::min(ni, di), sj = std::min(nj, dj);
  if (si > 0 || sj > 0) {
    num_ = num_.shifted(-si, -sj);
    den_ = den_.shifted(-si, -sj);
  }
  if (ScopedReduction::enabled() && !den_.is_constant()) {
    if (auto q = num_.try_divide(den_)) {
      num_ = std::move(*q);
      den_ = BiPoly(1);
    } else if (auto qd = den_.try_divide(num_)) {
      // num/den = 1/qd
      den_ = std::move(*qd);
      num_ = BiPoly(1);
      auto lc = den_.leading_coeff();
      num_ = num_.divided_by(lc);
      den_ = den_.divided_by(lc);
      return;
    }
  }
  const GaussRational& lc = den_.leading_coeff();
  if (!lc.is_one()) {
    num_ = num_.divided_by(lc);
    den_ = den_.divided_by(lc);
  }
}

RatFunc RatFunc::operator-() const {
  RatFunc r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  // cross cancellation keeps products of inverses cheap
  if (num_ == o.den_) return RatFunc(o.num_, den_);
  if (o.num_ == den_) return RatFunc(num_, o.den_);
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw DivisionByZeroFunction("division by zero rational function");
  if (is_zero()) return RatFunc();
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

bool RatFunc::eq(const RatFunc& o) const {
  return (num_ * o.den_) == (o.num_ * den_);
}

RatFunc RatFunc::partial(Var v) const {
  if (den_.is_constant()) return RatFunc(num_.partial(v), den_);
  BiPoly n = num_.partial(v) * den_ - num_ * den_.partial(v);
  return RatFunc(std::move(n), den_ * den_);
}

RatFunc RatFunc::bar() const { return RatFunc(num_.bar(), den_.bar()); }

RatFunc RatFunc::hat_transform() const {
  if (is_zero()) return RatFunc();
  auto [ni, nj] = num_.degrees();
  auto [di, dj] = den_.degrees();
  int M = std::max(ni, di), N = std::max(nj, dj);
  return RatFunc(num_.reciprocal(M, N), den_.reciprocal(M, N));
}

RatFunc RatFunc::scale_vars(const GaussRational& a, const GaussRational& b) const {
  return RatFunc(num_.scale_vars(a, b), den_.scale_vars(a, b));
}

GaussRational RatFunc::eval_exact(const GaussRational& z0, const GaussRational& w0) const {
  GaussRational d = den_.eval_exact(z0, w0);
  if (d.is_zero()) throw PoleAtPoint("exact evaluation at a pole");
  return num_.eval_exact(z0, w0) / d;
}

std::complex<double> RatFunc::eval(std::complex<double> z0, std::complex<double> w0,
                                   double pole_floor) const {
  std::complex<double> d = den_.eval(z0, w0);
  if (std::abs(d) < pole_floor) throw PoleAtPoint("denominator below floor");
  return num_.eval(z0, w0) / d;
}

std::string RatFunc::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace unitonlab

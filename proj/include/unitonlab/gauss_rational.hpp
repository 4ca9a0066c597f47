#ifndef UNITONLAB_GAUSS_RATIONAL_HPP_
#define UNITONLAB_GAUSS_RATIONAL_HPP_

#include <gmpxx.h>

#include <complex>
#include <string>

#include "unitonlab/errors.hpp"

namespace unitonlab {

/// Exact complex number with arbitrary-precision rational real and imaginary
/// parts.  GMP keeps the fractions reduced with positive denominators.
class GaussRational {
 public:
  GaussRational() : re_(0), im_(0) {}
  GaussRational(long re) : re_(re), im_(0) {}
  GaussRational(long num, long den) : re_(num, den), im_(0) { re_.canonicalize(); }
  GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  /// Parse from decimal integer-fraction strings "p/q" (or "p").
  static GaussRational from_strings(const std::string& re, const std::string& im);
  static GaussRational i() { return GaussRational(mpq_class(0), mpq_class(1)); }

  /// Exact conversion of a double (doubles are dyadic rationals).
  static GaussRational from_double(double re, double im = 0.0);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_one() const { return re_ == 1 && im_ == 0; }

  GaussRational conj() const { return GaussRational(re_, -im_); }

  GaussRational operator-() const { return GaussRational(-re_, -im_); }
  GaussRational operator+(const GaussRational& o) const {
    return GaussRational(re_ + o.re_, im_ + o.im_);
  }
  GaussRational operator-(const GaussRational& o) const {
    return GaussRational(re_ - o.re_, im_ - o.im_);
  }
  GaussRational operator*(const GaussRational& o) const {
    return GaussRational(re_ * o.re_ - im_ * o.im_, re_ * o.im_ + im_ * o.re_);
  }
  GaussRational operator/(const GaussRational& o) const {
    if (o.is_zero()) throw DivisionByZeroFunction("division by zero GaussRational");
    mpq_class n2 = o.re_ * o.re_ + o.im_ * o.im_;
    return GaussRational((re_ * o.re_ + im_ * o.im_) / n2,
                         (im_ * o.re_ - re_ * o.im_) / n2);
  }
  GaussRational& operator+=(const GaussRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
  GaussRational& operator-=(const GaussRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  GaussRational& operator*=(const GaussRational& o) { *this = *this * o; return *this; }

  bool operator==(const GaussRational& o) const { return re_ == o.re_ && im_ == o.im_; }
  bool operator!=(const GaussRational& o) const { return !(*this == o); }

  GaussRational pow(long k) const;

  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }

  std::string re_string() const { return re_.get_str(); }
  std::string im_string() const { return im_.get_str(); }
  std::string to_string() const;

 private:
  mpq_class re_, im_;
};

inline GaussRational GaussRational::from_strings(const std::string& re,
                                                 const std::string& im) {
  try {
    mpq_class r(re), i(im);
    r.canonicalize();
    i.canonicalize();
    return GaussRational(r, i);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational string '" + re + "' / '" + im + "'");
  }
}

inline GaussRational GaussRational::from_double(double re, double im) {
  return GaussRational(mpq_class(re), mpq_class(im));
}

inline GaussRational GaussRational::pow(long k) const {
  GaussRational base = *this;
  if (k < 0) {
    base = GaussRational(1) / base;
    k = -k;
  }
  GaussRational acc(1);
  while (k > 0) {
    if (k & 1) acc *= base;
    base *= base;
    k >>= 1;
  }
  return acc;
}

inline std::string GaussRational::to_string() const {
  return re_.get_str() + (sgn(im_) >= 0 ? "+" : "") + im_.get_str() + "i";
}

}  // namespace unitonlab

#endif

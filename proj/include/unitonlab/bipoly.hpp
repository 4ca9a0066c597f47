#ifndef UNITONLAB_BIPOLY_HPP_
#define UNITONLAB_BIPOLY_HPP_

#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "unitonlab/gauss_rational.hpp"

namespace unitonlab {

enum class Var { z, w };

/// Monomial z^i w^j ordered by total degree, then (i, j) lexicographically.
struct Monomial {
  int i = 0;
  int j = 0;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (int ta = a.i + a.j, tb = b.i + b.j; ta != tb) return ta <=> tb;
    if (a.i != b.i) return a.i <=> b.i;
    return a.j <=> b.j;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Polynomial in the commuting variables z and w (w stands for the formal
/// conjugate coordinate) with GaussRational coefficients.  No zero
/// coefficients are stored.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(GaussRational c) { set(0, 0, std::move(c)); }
  explicit BiPoly(long c) { set(0, 0, GaussRational(c)); }

  static BiPoly variable(Var v) {
    BiPoly p;
    p.set(v == Var::z ? 1 : 0, v == Var::z ? 0 : 1, GaussRational(1));
    return p;
  }
  static BiPoly monomial(int i, int j, GaussRational c = GaussRational(1)) {
    BiPoly p;
    p.set(i, j, std::move(c));
    return p;
  }

  const std::map<Monomial, GaussRational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }

  void set(int i, int j, GaussRational c);
  void add_term(int i, int j, const GaussRational& c);
  GaussRational coeff(int i, int j) const;

  /// Leading monomial/coefficient in canonical order (throws on zero poly).
  const Monomial& leading_monomial() const;
  const GaussRational& leading_coeff() const;

  /// (deg_z, deg_w) componentwise maxima; (-1,-1) for the zero polynomial.
  std::pair<int, int> degrees() const;
  /// componentwise minima of exponents over all terms; (0,0) for zero.
  std::pair<int, int> min_exponents() const;

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly& operator+=(const BiPoly& o);
  bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }

  BiPoly scaled(const GaussRational& c) const;
  /// divide every coefficient by c (exact).
  BiPoly divided_by(const GaussRational& c) const;
  /// multiply by the monomial z^i w^j with i, j >= 0 (or shift down when
  /// negative; caller must guarantee divisibility).
  BiPoly shifted(int i, int j) const;

  BiPoly partial(Var v) const;
  /// conjugate coefficients and swap the roles of z and w.
  BiPoly bar() const;
  /// reverse exponents against the box (M, N): z^i w^j -> z^{M-i} w^{N-j},
  /// realizing p(1/z, 1/w) z^M w^N exactly.
  BiPoly reciprocal(int M, int N) const;
  /// exact substitution z -> a z, w -> b w.
  BiPoly scale_vars(const GaussRational& a, const GaussRational& b) const;
  /// exact substitution z -> z0, w -> w0 (full evaluation to a constant).
  GaussRational eval_exact(const GaussRational& z0, const GaussRational& w0) const;

  /// Floating evaluation with cached power tables.
  std::complex<double> eval(std::complex<double> z0, std::complex<double> w0) const;

  /// Exact polynomial division: returns quotient iff o divides *this exactly.
  std::optional<BiPoly> try_divide(const BiPoly& o) const;

  std::string to_string() const;

 private:
  std::map<Monomial, GaussRational> terms_;
};

}  // namespace unitonlab

#endif

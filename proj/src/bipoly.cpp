#include "unitonlab/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace unitonlab {

bool BiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0};
}

void BiPoly::set(int i, int j, GaussRational c) {
  if (c.is_zero()) {
    terms_.erase(Monomial{i, j});
  } else {
    terms_[Monomial{i, j}] = std::move(c);
  }
}

void BiPoly::add_term(int i, int j, const GaussRational& c) {
  if (c.is_zero()) return;
  Monomial m{i, j};
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

GaussRational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find(Monomial{i, j});
  return it == terms_.end() ? GaussRational() : it->second;
}

const Monomial& BiPoly::leading_monomial() const {
  if (terms_.empty()) throw Error("leading_monomial of zero polynomial");
  return terms_.rbegin()->first;
}

const GaussRational& BiPoly::leading_coeff() const {
  if (terms_.empty()) throw Error("leading_coeff of zero polynomial");
  return terms_.rbegin()->second;
}

std::pair<int, int> BiPoly::degrees() const {
  if (terms_.empty()) return {-1, -1};
  int di = 0, dj = 0;
  for (const auto& [m, c] : terms_) {
    di = std::max(di, m.i);
    dj = std::max(dj, m.j);
  }
  return {di, dj};
}

std::pair<int, int> BiPoly::min_exponents() const {
  if (terms_.empty()) return {0, 0};
  int mi = terms_.begin()->first.i, mj = terms_.begin()->first.j;
  for (const auto& [m, c] : terms_) {
    mi = std::min(mi, m.i);
    mj = std::min(mj, m.j);
  }
  return {mi, mj};
}

BiPoly BiPoly::operator-() const {
  BiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  BiPoly r = *this;
  r += o;
  return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m.i, m.j, c);
  return *this;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
  BiPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m.i, m.j, -c);
  return r;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
  BiPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.add_term(ma.i + mb.i, ma.j + mb.j, ca * cb);
  return r;
}

BiPoly BiPoly::scaled(const GaussRational& c) const {
  BiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
  return r;
}

BiPoly BiPoly::divided_by(const GaussRational& c) const {
  if (c.is_zero()) throw DivisionByZeroFunction("BiPoly coefficient division");
  BiPoly r;
  for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc / c);
  return r;
}

BiPoly BiPoly::shifted(int i, int j) const {
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.i + i < 0 || m.j + j < 0) throw Error("BiPoly::shifted below zero exponent");
    r.terms_.emplace(Monomial{m.i + i, m.j + j}, c);
  }
  return r;
}

BiPoly BiPoly::partial(Var v) const {
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    if (v == Var::z && m.i > 0) r.add_term(m.i - 1, m.j, c * GaussRational(m.i));
    if (v == Var::w && m.j > 0) r.add_term(m.i, m.j - 1, c * GaussRational(m.j));
  }
  return r;
}

BiPoly BiPoly::bar() const {
  BiPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.j, m.i}, c.conj());
  return r;
}

BiPoly BiPoly::reciprocal(int M, int N) const {
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.i > M || m.j > N) throw Error("BiPoly::reciprocal box too small");
    r.terms_.emplace(Monomial{M - m.i, N - m.j}, c);
  }
  return r;
}

BiPoly BiPoly::scale_vars(const GaussRational& a, const GaussRational& b) const {
  BiPoly r;
  for (const auto& [m, c] : terms_) r.add_term(m.i, m.j, c * a.pow(m.i) * b.pow(m.j));
  return r;
}

GaussRational BiPoly::eval_exact(const GaussRational& z0, const GaussRational& w0) const {
  GaussRational acc;
  for (const auto& [m, c] : terms_) acc += c * z0.pow(m.i) * w0.pow(m.j);
  return acc;
}

std::complex<double> BiPoly::eval(std::complex<double> z0, std::complex<double> w0) const {
  auto [di, dj] = degrees();
  if (di < 0) return {0.0, 0.0};
  std::vector<std::complex<double>> zp(di + 1), wp(dj + 1);
  zp[0] = 1.0;
  for (int k = 1; k <= di; ++k) zp[k] = zp[k - 1] * z0;
  wp[0] = 1.0;
  for (int k = 1; k <= dj; ++k) wp[k] = wp[k - 1] * w0;
  std::complex<double> acc = 0.0;
  for (const auto& [m, c] : terms_) acc += c.to_complex() * zp[m.i] * wp[m.j];
  return acc;
}

std::optional<BiPoly> BiPoly::try_divide(const BiPoly& o) const {
  if (o.is_zero()) return std::nullopt;
  BiPoly rem = *this;
  BiPoly quot;
  const Monomial& lm = o.leading_monomial();
  const GaussRational& lc = o.leading_coeff();
  while (!rem.is_zero()) {
    const Monomial& rm = rem.leading_monomial();
    if (rm.i < lm.i || rm.j < lm.j) return std::nullopt;
    Monomial qm{rm.i - lm.i, rm.j - lm.j};
    GaussRational qc = rem.leading_coeff() / lc;
    quot.add_term(qm.i, qm.j, qc);
    // rem -= (qc z^qm) * o ; the leading term cancels exactly
    for (const auto& [m, c] : o.terms_) rem.add_term(m.i + qm.i, m.j + qm.j, -(c * qc));
  }
  return quot;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    if (it->first.i) os << " z^" << it->first.i;
    if (it->first.j) os << " w^" << it->first.j;
  }
  return os.str();
}

}  // namespace unitonlab

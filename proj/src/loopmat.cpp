#include "unitonlab/loopmat.hpp"

namespace unitonlab {

LoopMat LoopMat::identity(int n) { return constant(MatRF::identity(n)); }

LoopMat LoopMat::constant(const MatRF& a) { return monomial(0, a); }

LoopMat LoopMat::monomial(int k, const MatRF& a) {
  LoopMat l(a.n());
  l.set_coeff(k, a);
  return l;
}

void LoopMat::set_coeff(int k, MatRF a) {
  if (a.n() != n_) throw DimensionMismatch("LoopMat coefficient dimension");
  if (a.is_zero()) coeffs_.erase(k);
  else coeffs_[k] = std::move(a);
}

MatRF LoopMat::coeff(int k) const {
  auto it = coeffs_.find(k);
  return it == coeffs_.end() ? MatRF::zero(n_) : it->second;
}

LoopMat LoopMat::operator+(const LoopMat& o) const {
  if (n_ != o.n_) throw DimensionMismatch("LoopMat add");
  LoopMat r = *this;
  for (const auto& [k, m] : o.coeffs_) {
    auto it = r.coeffs_.find(k);
    if (it == r.coeffs_.end()) r.coeffs_.emplace(k, m);
    else {
      it->second = it->second + m;
      if (it->second.is_zero()) r.coeffs_.erase(it);
    }
  }
  return r;
}

LoopMat LoopMat::operator-(const LoopMat& o) const { return *this + (-o); }

LoopMat LoopMat::operator-() const {
  LoopMat r(n_);
  for (const auto& [k, m] : coeffs_) r.coeffs_.emplace(k, -m);
  return r;
}

LoopMat LoopMat::operator*(const LoopMat& o) const {
  if (n_ != o.n_) throw DimensionMismatch("LoopMat mul");
  LoopMat r(n_);
  for (const auto& [ka, ma] : coeffs_)
    for (const auto& [kb, mb] : o.coeffs_) {
      MatRF prod = ma * mb;
      auto it = r.coeffs_.find(ka + kb);
      if (it == r.coeffs_.end()) r.coeffs_.emplace(ka + kb, std::move(prod));
      else it->second = it->second + prod;
    }
  // prune zeros created by cancellation
  for (auto it = r.coeffs_.begin(); it != r.coeffs_.end();) {
    if (it->second.is_zero()) it = r.coeffs_.erase(it);
    else ++it;
  }
  return r;
}

LoopMat LoopMat::scaled(const RatFunc& f) const {
  LoopMat r(n_);
  if (f.is_zero()) return r;
  for (const auto& [k, m] : coeffs_) r.coeffs_.emplace(k, m.scaled(f));
  return r;
}

LoopMat LoopMat::shifted(int k0) const {
  LoopMat r(n_);
  for (const auto& [k, m] : coeffs_) r.coeffs_.emplace(k + k0, m);
  return r;
}

bool LoopMat::eq(const LoopMat& o) const {
  if (n_ != o.n_) return false;
  auto keys = [](const std::map<int, MatRF>& m) {
    std::map<int, bool> k;
    for (const auto& [key, v] : m) k[key] = true;
    return k;
  };
  auto ka = keys(coeffs_), kb = keys(o.coeffs_);
  for (const auto& [k, b] : kb) ka[k] = true;
  for (const auto& [k, b] : ka)
    if (!coeff(k).eq(o.coeff(k))) return false;
  return true;
}

LoopSupport LoopMat::support() const {
  if (coeffs_.empty()) return LoopSupport{};
  return LoopSupport{coeffs_.begin()->first, coeffs_.rbegin()->first, false};
}

MatRF LoopMat::eval_lambda(const GaussRational& lambda0) const {
  if (lambda0.is_zero() && !coeffs_.empty() && coeffs_.begin()->first < 0)
    throw EvalAtZeroWithNegativePowers();
  MatRF acc = MatRF::zero(n_);
  for (const auto& [k, m] : coeffs_)
    acc = acc + m.scaled(RatFunc(lambda0.pow(k)));
  return acc;
}

LoopMat LoopMat::star_dual() const {
  LoopMat r(n_);
  for (const auto& [k, m] : coeffs_) r.coeffs_.emplace(-k, m.adjoint());
  return r;
}

LoopMat LoopMat::partial(Var v) const {
  LoopMat r(n_);
  for (const auto& [k, m] : coeffs_) {
    MatRF d = m.partial(v);
    if (!d.is_zero()) r.coeffs_.emplace(k, std::move(d));
  }
  return r;
}

LoopMat LoopMat::lambda_derivative() const {
  LoopMat r(n_);
  for (const auto& [k, m] : coeffs_) {
    if (k == 0) continue;
    r.coeffs_.emplace(k - 1, m.scaled(RatFunc(GaussRational(k))));
  }
  return r;
}

LoopMat LoopMat::scale_vars(const GaussRational& a, const GaussRational& b) const {
  LoopMat r(n_);
  for (const auto& [k, m] : coeffs_) r.coeffs_.emplace(k, m.scale_vars(a, b));
  return r;
}

LoopMat LoopMat::specialize(const GaussRational& z0, const GaussRational& w0) const {
  LoopMat r(n_);
  for (const auto& [k, m] : coeffs_) {
    MatRF v = m.eval_exact_point(z0, w0);
    if (!v.is_zero()) r.coeffs_.emplace(k, std::move(v));
  }
  return r;
}

Eigen::MatrixXcd LoopMat::sample(std::complex<double> lambda0, std::complex<double> z0,
                                 std::complex<double> w0, double pole_floor) const {
  if (std::abs(lambda0) < pole_floor && !coeffs_.empty() && coeffs_.begin()->first < 0)
    throw EvalAtZeroWithNegativePowers();
  Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(n_, n_);
  for (const auto& [k, m] : coeffs_)
    acc += std::pow(lambda0, k) * m.eval(z0, w0, pole_floor);
  return acc;
}

std::size_t LoopMat::term_count() const {
  std::size_t c = 0;
  for (const auto& [k, m] : coeffs_) c += m.term_count();
  return c;
}

}  // namespace unitonlab

#include "unitonlab/matrf.hpp"

namespace unitonlab {

MatRF MatRF::identity(int n) {
  MatRF m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RatFunc(1);
  return m;
}

MatRF MatRF::operator+(const MatRF& o) const {
  if (n_ != o.n_) throw DimensionMismatch("MatRF add");
  MatRF r(n_);
  for (int k = 0; k < n_ * n_; ++k) r.entries_[k] = entries_[k] + o.entries_[k];
  return r;
}

MatRF MatRF::operator-(const MatRF& o) const {
  if (n_ != o.n_) throw DimensionMismatch("MatRF sub");
  MatRF r(n_);
  for (int k = 0; k < n_ * n_; ++k) r.entries_[k] = entries_[k] - o.entries_[k];
  return r;
}

MatRF MatRF::operator-() const {
  MatRF r(n_);
  for (int k = 0; k < n_ * n_; ++k) r.entries_[k] = -entries_[k];
  return r;
}

MatRF MatRF::operator*(const MatRF& o) const {
  if (n_ != o.n_) throw DimensionMismatch("MatRF mul");
  MatRF r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      RatFunc acc;
      for (int k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

MatRF MatRF::scaled(const RatFunc& f) const {
  MatRF r(n_);
  for (int k = 0; k < n_ * n_; ++k) r.entries_[k] = entries_[k] * f;
  return r;
}

MatRF MatRF::transpose() const {
  MatRF r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i);
  return r;
}

MatRF MatRF::adjoint() const {
  MatRF r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.at(i, j) = at(j, i).bar();
  return r;
}

MatRF MatRF::partial(Var v) const {
  MatRF r(n_);
  for (int k = 0; k < n_ * n_; ++k) r.entries_[k] = entries_[k].partial(v);
  return r;
}

MatRF MatRF::hat_transform() const {
  MatRF r(n_);
  for (int k = 0; k < n_ * n_; ++k) r.entries_[k] = entries_[k].hat_transform();
  return r;
}

MatRF MatRF::scale_vars(const GaussRational& a, const GaussRational& b) const {
  MatRF r(n_);
  for (int k = 0; k < n_ * n_; ++k) r.entries_[k] = entries_[k].scale_vars(a, b);
  return r;
}

RatFunc MatRF::trace() const {
  RatFunc acc;
  for (int i = 0; i < n_; ++i) acc += at(i, i);
  return acc;
}

RatFunc MatRF::cofactor_det(const std::vector<int>& rows, const std::vector<int>& cols) const {
  const std::size_t k = rows.size();
  if (k == 1) return at(rows[0], cols[0]);
  RatFunc acc;
  std::vector<int> subrows(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < k; ++c) {
    const RatFunc& pivot = at(rows[0], cols[c]);
    if (pivot.is_zero()) continue;
    std::vector<int> subcols;
    subcols.reserve(k - 1);
    for (std::size_t cc = 0; cc < k; ++cc)
      if (cc != c) subcols.push_back(cols[cc]);
    RatFunc minor = cofactor_det(subrows, subcols);
    if (c % 2 == 0) acc += pivot * minor;
    else acc += -(pivot * minor);
  }
  return acc;
}

RatFunc MatRF::det() const {
  std::vector<int> idx(n_);
  for (int i = 0; i < n_; ++i) idx[i] = i;
  return cofactor_det(idx, idx);
}

MatRF MatRF::inverse() const {
  RatFunc d = det();
  if (d.is_zero()) throw SingularMatrixFunction("det identically zero");
  MatRF adj(n_);
  if (n_ == 1) {
    adj.at(0, 0) = RatFunc(1);
  } else {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        std::vector<int> rows, cols;
        for (int r = 0; r < n_; ++r)
          if (r != j) rows.push_back(r);
        for (int c = 0; c < n_; ++c)
          if (c != i) cols.push_back(c);
        RatFunc minor = cofactor_det(rows, cols);
        adj.at(i, j) = ((i + j) % 2 == 0) ? minor : -minor;
      }
  }
  MatRF r(n_);
  for (int k = 0; k < n_ * n_; ++k) r.entries_[k] = adj.entries_[k] / d;
  return r;
}

bool MatRF::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

bool MatRF::eq(const MatRF& o) const {
  if (n_ != o.n_) return false;
  for (int k = 0; k < n_ * n_; ++k)
    if (!entries_[k].eq(o.entries_[k])) return false;
  return true;
}

MatRF MatRF::eval_exact_point(const GaussRational& z0, const GaussRational& w0) const {
  MatRF r(n_);
  for (int k = 0; k < n_ * n_; ++k)
    r.entries_[k] = RatFunc(entries_[k].eval_exact(z0, w0));
  return r;
}

Eigen::MatrixXcd MatRF::eval(std::complex<double> z0, std::complex<double> w0,
                             double pole_floor) const {
  Eigen::MatrixXcd r(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = at(i, j).eval(z0, w0, pole_floor);
  return r;
}

std::size_t MatRF::term_count() const {
  std::size_t c = 0;
  for (const auto& e : entries_) c += e.term_count();
  return c;
}

}  // namespace unitonlab

#include "unitonlab/birkhoff.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace unitonlab {

void FactorConfig::validate() const {
  if (modes < 4) throw Error("FactorConfig modes must be >= 4");
  if (tol <= 0 || index_tol <= 0) throw Error("FactorConfig tolerances must be positive");
}

namespace {

using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

void fft_inplace(std::vector<cd>& a, bool inverse) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    double ang = 2 * M_PI / static_cast<double>(len) * (inverse ? 1 : -1);
    cd wl(std::cos(ang), std::sin(ang));
    for (std::size_t i = 0; i < n; i += len) {
      cd w(1);
      for (std::size_t k = 0; k < len / 2; ++k) {
        cd u = a[i + k], v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

/// Fourier coefficients of the sampled symbol, index k in [-L/2, L/2).
class SymbolCoeffs {
 public:
  explicit SymbolCoeffs(const CircleSamples& T) : n_(T.n), L_(T.count()) {
    coeffs_.assign(L_, Mat::Zero(n_, n_));
    std::vector<cd> series(L_);
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c) {
        for (int j = 0; j < L_; ++j) series[j] = T.values[j](r, c);
        fft_inplace(series, false);
        for (int k = 0; k < L_; ++k) coeffs_[k](r, c) = series[k] / static_cast<double>(L_);
      }
    double mx = 0.0;
    for (const auto& m : coeffs_) mx = std::max(mx, m.cwiseAbs().maxCoeff());
    scale_ = mx;
    bw_lo_ = 0;
    bw_hi_ = 0;
    for (int k = -L_ / 2; k < L_ / 2; ++k) {
      if (at(k).cwiseAbs().maxCoeff() > 1e-13 * std::max(scale_, 1e-300)) {
        bw_lo_ = std::min(bw_lo_, k);
        bw_hi_ = std::max(bw_hi_, k);
      }
    }
  }

  const Mat& at(int k) const { return coeffs_[((k % L_) + L_) % L_]; }
  int n() const { return n_; }
  int count() const { return L_; }
  double scale() const { return scale_; }
  int bw_lo() const { return bw_lo_; }
  int bw_hi() const { return bw_hi_; }

 private:
  int n_, L_;
  double scale_;
  int bw_lo_, bw_hi_;
  std::vector<Mat> coeffs_;
};

/// Stacked Toeplitz sections: rows are the Fourier coefficients q = s+1 ..
/// m+bw_hi of T h for a polynomial column h of degree <= m.
Mat toeplitz_section(const SymbolCoeffs& sym, int m, int s) {
  const int n = sym.n();
  const int qlo = s + 1, qhi = m + sym.bw_hi();
  const int rows = std::max(0, qhi - qlo + 1);
  Mat A = Mat::Zero(rows * n, (m + 1) * n);
  for (int q = qlo; q <= qhi; ++q)
    for (int p = 0; p <= m; ++p) {
      int k = q - p;
      if (k < -sym.count() / 2 || k >= sym.count() / 2) continue;
      A.block((q - qlo) * n, p * n, n, n) = sym.at(k);
    }
  return A;
}

/// numerical kernel basis; full V so wide sections report the whole kernel
Mat kernel_basis(const Mat& A, double index_tol) {
  const int cols = static_cast<int>(A.cols());
  if (A.rows() == 0) return Mat::Identity(cols, cols);
  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double thresh = index_tol * std::max(smax, 1e-300);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  return svd.matrixV().rightCols(cols - rank);
}

int nullity(const SymbolCoeffs& sym, int m, int s, double index_tol, double* margin) {
  Mat A = toeplitz_section(sym, m, s);
  const int cols = static_cast<int>(A.cols());
  if (A.rows() == 0) {
    if (margin) *margin = std::numeric_limits<double>::infinity();
    return cols;
  }
  Eigen::JacobiSVD<Mat> svd(A);
  const auto& sv = svd.singularValues();
  const double smax = sv.size() ? sv(0) : 0.0;
  const double thresh = index_tol * std::max(smax, 1e-300);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  if (margin) {
    if (rank > 0 && rank < sv.size() && sv(rank) > 0)
      *margin = sv(rank - 1) / sv(rank);
    else
      *margin = std::numeric_limits<double>::infinity();
  }
  return cols - rank;
}

void check_invertible_samples(const CircleSamples& T) {
  for (int j = 0; j < T.count(); ++j) {
    if (!T.values[j].allFinite())
      throw IllConditioned("non-finite sample at node " + std::to_string(j));
    Eigen::JacobiSVD<Mat> svd(T.values[j]);
    const auto& sv = svd.singularValues();
    if (sv(sv.size() - 1) < 1e-12 * std::max(1.0, sv(0)))
      throw IllConditioned("symbol nearly singular at node " + std::to_string(j));
  }
}

}  // namespace

Eigen::MatrixXcd BirkhoffResult::h_at(cd lambda) const {
  Mat acc = Mat::Zero(h_coeffs[0].rows(), h_coeffs[0].cols());
  cd pw = 1.0;
  for (const auto& hp : h_coeffs) {
    acc += pw * hp;
    pw *= lambda;
  }
  return acc;
}

Eigen::MatrixXcd BirkhoffResult::hhat_at(cd lambda) const {
  Mat acc;
  bool first = true;
  for (const auto& [k, m] : hhat_coeffs) {
    Mat term = std::pow(lambda, k) * m;
    if (first) {
      acc = term;
      first = false;
    } else {
      acc += term;
    }
  }
  return acc;
}

int det_winding(const CircleSamples& T) {
  const int L = T.count();
  double total = 0.0;
  double prev = std::arg(T.values[0].determinant());
  for (int j = 1; j <= L; ++j) {
    double cur = std::arg(T.values[j % L].determinant());
    double d = cur - prev;
    while (d > M_PI) d -= 2 * M_PI;
    while (d < -M_PI) d += 2 * M_PI;
    total += d;
    prev = cur;
  }
  double w = total / (2 * M_PI);
  int wi = static_cast<int>(std::lround(w));
  if (std::abs(w - wi) > 0.1)
    throw IllConditioned("det winding is not close to an integer: " + std::to_string(w));
  return wi;
}

std::vector<int> partial_indices(const CircleSamples& T, const FactorConfig& cfg) {
  cfg.validate();
  check_invertible_samples(T);
  SymbolCoeffs sym(T);
  const int n = T.n;
  const int m = cfg.modes;
  const int wind = det_winding(T);

  // indices live within the symbol's Laurent band
  int K = std::max({std::abs(sym.bw_lo()), std::abs(sym.bw_hi()), 1}) + 1;
  K = std::min(K, m / 2);

  std::vector<int> nus;  // nu_s for s = -K-1 .. K
  double min_margin = std::numeric_limits<double>::infinity();
  for (int s = -K - 1; s <= K; ++s) {
    double margin = 0.0;
    nus.push_back(nullity(sym, m, s, cfg.index_tol, &margin));
    min_margin = std::min(min_margin, margin);
  }

  std::vector<int> indices;
  int prev_cnt = 0;
  for (int s = -K; s <= K; ++s) {
    int cnt = nus[s + K + 1] - nus[s + K];  // #{i : k_i <= s}
    for (int t = prev_cnt; t < cnt; ++t) indices.push_back(s);
    prev_cnt = std::max(prev_cnt, cnt);
  }
  if (static_cast<int>(indices.size()) != n)
    throw IllConditioned("index detection found " + std::to_string(indices.size()) +
                         " indices for dimension " + std::to_string(n));
  int sum = std::accumulate(indices.begin(), indices.end(), 0);
  if (sum != wind)
    throw IllConditioned("index sum " + std::to_string(sum) + " != det winding " +
                         std::to_string(wind));
  return indices;
}

BirkhoffResult birkhoff_factorize(const CircleSamples& T, const FactorConfig& cfg) {
  cfg.validate();
  check_invertible_samples(T);
  SymbolCoeffs sym(T);
  const int n = T.n;
  const int m = cfg.modes;
  const int L = T.count();

  BirkhoffResult out;
  out.det_winding = det_winding(T);
  // Index detection needs clean kernel gaps.  Symbols with analytic
  // (non-polynomial) content at small truncation orders may be inconclusive;
  // with zero winding the trivial-index least-squares splitting still makes
  // sense and its residual reports the truncation error honestly.
  bool detected = true;
  try {
    out.indices = partial_indices(T, cfg);
  } catch (const IllConditioned&) {
    if (out.det_winding != 0) throw;
    detected = false;
    out.indices.assign(n, 0);
  }
  bool trivial = std::all_of(out.indices.begin(), out.indices.end(),
                             [](int k) { return k == 0; });
  if (!trivial && cfg.forbid_nonzero_indices)
    throw NonzeroIndicesWhenForbidden("indices are not all zero");

  // columns of H: independent kernel vectors, smallest index level first
  Mat Hstack = Mat::Zero(n * (m + 1), n);
  std::vector<int> col_index(n, 0);
  if (!detected) {
    // least-squares splitting: the n flattest directions of the s = 0 section
    Mat A = toeplitz_section(sym, m, 0);
    Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeFullV);
    Hstack = svd.matrixV().rightCols(n);
    const auto& sv = svd.singularValues();
    if (sv.size() > n)
      out.index_margin = sv(sv.size() - n - 1) / std::max(sv(sv.size() - 1), 1e-300);
    else
      out.index_margin = std::numeric_limits<double>::infinity();
  } else {
    int placed = 0;
    std::vector<std::pair<Eigen::VectorXcd, int>> chosen;
    int s = out.indices.front();
    const int s_max = out.indices.back();
    for (; s <= s_max && placed < n; ++s) {
      if (std::count(out.indices.begin(), out.indices.end(), s) == 0) continue;
      Mat basis = kernel_basis(toeplitz_section(sym, m, s), cfg.index_tol);
      // span of lambda-shifts of already chosen columns inside K(s)
      std::vector<Eigen::VectorXcd> shifts;
      for (const auto& [h, k] : chosen)
        for (int t = 0; t <= s - k; ++t) {
          Eigen::VectorXcd sh = Eigen::VectorXcd::Zero(n * (m + 1));
          for (int p = 0; p + t <= m; ++p)
            sh.segment((p + t) * n, n) = h.segment(p * n, n);
          shifts.push_back(sh);
        }
      Mat P(n * (m + 1), shifts.size());
      for (std::size_t i = 0; i < shifts.size(); ++i) P.col(i) = shifts[i];
      Eigen::HouseholderQR<Mat> qr(P);
      Mat Q;
      if (shifts.empty()) {
        Q = Mat::Zero(n * (m + 1), 0);
      } else {
        Q = qr.householderQ() * Mat::Identity(n * (m + 1), shifts.size());
      }
      const int want = static_cast<int>(std::count(out.indices.begin(), out.indices.end(), s));
      int got = 0;
      for (int b = 0; b < basis.cols() && got < want; ++b) {
        Eigen::VectorXcd v = basis.col(b);
        if (Q.cols() > 0) v -= Q * (Q.adjoint() * v);
        // also orthogonalize against same-level picks
        for (int c = 0; c < placed; ++c) {
          if (col_index[c] != s) continue;
          Eigen::VectorXcd u = Hstack.col(c);
          v -= u * (u.adjoint() * v);
        }
        if (v.norm() < 1e-6) continue;
        v.normalize();
        Hstack.col(placed) = v;
        col_index[placed] = s;
        chosen.emplace_back(v, s);
        ++placed;
        ++got;
      }
      if (got < want)
        throw IllConditioned("could not extract " + std::to_string(want) +
                             " independent columns at index level " + std::to_string(s));
    }
    if (placed < n) throw IllConditioned("incomplete Birkhoff column basis");
  }
  std::sort(col_index.begin(), col_index.end());

  out.h_coeffs.assign(m + 1, Mat::Zero(n, n));
  for (int p = 0; p <= m; ++p)
    for (int c = 0; c < n; ++c) out.h_coeffs[p].col(c) = Hstack.block(p * n, c, n, 1);

  // Hhat columns: nonpositive Fourier part of T h_i lambda^{-k_i}
  std::vector<Mat> TH(L, Mat::Zero(n, n));
  std::vector<Mat> Hnodes(L);
  for (int j = 0; j < L; ++j) {
    const double th = 2.0 * M_PI * j / L;
    const cd lam(std::cos(th), std::sin(th));
    Mat h = Mat::Zero(n, n);
    cd pw = 1.0;
    for (int p = 0; p <= m; ++p) {
      h += pw * out.h_coeffs[p];
      pw *= lam;
    }
    Hnodes[j] = h;
    TH[j] = T.values[j] * h;
  }
  // Fourier transform TH columnwise, shift by -k_i, keep powers -m..0
  for (int k = -m; k <= 0; ++k) out.hhat_coeffs[k] = Mat::Zero(n, n);
  std::vector<cd> series(L);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      for (int j = 0; j < L; ++j) series[j] = TH[j](r, c);
      fft_inplace(series, false);
      for (int k = -m; k <= 0; ++k) {
        int kk = k + out.indices[c];  // coefficient of lambda^{kk} in T h_c
        out.hhat_coeffs[k](r, c) = series[((kk % L) + L) % L] / static_cast<double>(L);
      }
    }

  // normalization: for trivial indices pin Hhat(infinity) = 1 (unit
  // upper-triangular normal form, realized with the identity)
  if (trivial) {
    Mat C = out.hhat_coeffs[0];
    Eigen::FullPivLU<Mat> lu(C);
    if (!lu.isInvertible())
      throw IllConditioned("Hhat(infinity) is singular; cannot normalize");
    Mat Cinv = lu.inverse();
    for (auto& hp : out.h_coeffs) hp = hp * Cinv;
    for (auto& [k, hh] : out.hhat_coeffs) hh = hh * Cinv;
    for (auto& h : Hnodes) h = h * Cinv;
  }

  // residual: max over nodes of |T H - Hhat Lambda|
  double resid = 0.0;
  for (int j = 0; j < L; ++j) {
    const double th = 2.0 * M_PI * j / L;
    const cd lam(std::cos(th), std::sin(th));
    Mat hh = Mat::Zero(n, n);
    for (const auto& [k, mcoef] : out.hhat_coeffs) hh += std::pow(lam, k) * mcoef;
    Mat lambda_f = Mat::Zero(n, n);
    for (int c = 0; c < n; ++c) lambda_f(c, c) = std::pow(lam, out.indices[c]);
    Mat R = T.values[j] * Hnodes[j] - hh * lambda_f;
    resid = std::max(resid, R.cwiseAbs().maxCoeff());
  }
  out.residual = resid;

  if (detected) {
    // margin bookkeeping from the index levels actually used
    double margin = std::numeric_limits<double>::infinity();
    for (int s : {out.indices.front(), int(0), out.indices.back()}) {
      double mg = 0.0;
      nullity(sym, m, s, cfg.index_tol, &mg);
      margin = std::min(margin, mg);
    }
    out.index_margin = margin;
  }
  return out;
}

WardResult ward_reconstruct(const CircleSamples& T, const FactorConfig& cfg,
                            bool want_e_samples) {
  cfg.validate();
  if (T.count() < 2) throw Error("ward_reconstruct needs at least 2 samples");
  const int jm1 = T.index_of_minus_one();
  Mat Tm1 = T.values[jm1];
  Eigen::FullPivLU<Mat> lu(Tm1);
  if (!lu.isInvertible()) throw IllConditioned("T(-1) is singular");
  Mat Tm1inv = lu.inverse();

  // rebase to T(-1) = 1: the E_{-1} = 1 choice; right constant factors
  // T -> T C drop out of the rebased symbol entirely
  CircleSamples Tb = T;
  for (auto& v : Tb.values) v = v * Tm1inv;

  BirkhoffResult f;
  try {
    FactorConfig c2 = cfg;
    c2.forbid_nonzero_indices = true;
    f = birkhoff_factorize(Tb, c2);
  } catch (const NonzeroIndicesWhenForbidden& e) {
    throw NonTrivialIndices(e.what());
  }

  const int n = T.n;
  Mat H1 = Mat::Zero(n, n), Hm1 = Mat::Zero(n, n);
  for (std::size_t p = 0; p < f.h_coeffs.size(); ++p) {
    H1 += f.h_coeffs[p];
    Hm1 += ((p % 2 == 0) ? 1.0 : -1.0) * f.h_coeffs[p];
  }
  Mat Hhm1 = Mat::Zero(n, n);
  for (const auto& [k, m] : f.hhat_coeffs)
    Hhm1 += (((-k) % 2 == 0) ? 1.0 : -1.0) * m;

  Eigen::FullPivLU<Mat> luh(Hhm1);
  if (!luh.isInvertible()) throw IllConditioned("Hhat(-1) is singular");

  WardResult out;
  out.S = H1 * luh.inverse();
  out.residual = f.residual;
  Eigen::FullPivLU<Mat> luH(Hm1);
  if (!luH.isInvertible()) throw IllConditioned("H(-1) is singular");
  out.basing_defect =
      (luh.inverse() * Hm1 - Mat::Identity(n, n)).cwiseAbs().maxCoeff();
  if (want_e_samples) {
    Mat Hm1inv = luH.inverse();
    out.E_samples.reserve(T.count());
    for (int j = 0; j < T.count(); ++j) {
      const double th = 2.0 * M_PI * j / T.count();
      out.E_samples.push_back(f.hhat_at(cd(std::cos(th), std::sin(th))) * Hm1inv);
    }
  }
  return out;
}

namespace {

/// best rational approximation p/q with q <= cap by continued fractions
bool snap_rational(double x, long cap, double tol, long& pout, long& qout) {
  double a = x;
  long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(a)), q1 = 1;
  double frac = a - std::floor(a);
  for (int it = 0; it < 64; ++it) {
    if (std::abs(x - static_cast<double>(p1) / q1) <= tol) {
      pout = p1;
      qout = q1;
      return true;
    }
    if (frac < 1e-18) break;
    a = 1.0 / frac;
    frac = a - std::floor(a);
    long ai = static_cast<long>(std::floor(a));
    long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > cap || q2 <= 0) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
  }
  if (q1 <= cap && std::abs(x - static_cast<double>(p1) / q1) <= tol) {
    pout = p1;
    qout = q1;
    return true;
  }
  return false;
}

GaussRational snap_complex(cd v, const ReconstructConfig& cfg, bool& snapped) {
  long pr, qr, pi, qi;
  bool okr = snap_rational(v.real(), cfg.snap_den_cap, cfg.snap_tol, pr, qr);
  bool oki = snap_rational(v.imag(), cfg.snap_den_cap, cfg.snap_tol, pi, qi);
  if (okr && oki) {
    GaussRational g(mpq_class(pr, qr), mpq_class(pi, qi));
    return g;
  }
  snapped = false;
  return GaussRational::from_double(v.real(), v.imag());
}

}  // namespace

ReconstructResult rational_reconstruct(
    const std::vector<std::pair<cd, cd>>& samples, std::pair<int, int> deg_num,
    std::pair<int, int> deg_den, const ReconstructConfig& cfg) {
  const int n_num = (deg_num.first + 1) * (deg_num.second + 1);
  const int n_den = (deg_den.first + 1) * (deg_den.second + 1);
  const int unknowns = n_num + n_den;
  if (static_cast<int>(samples.size()) < 2 * unknowns)
    throw Error("rational_reconstruct needs at least 2x as many samples as unknowns");

  // hold out every 4th sample for validation
  std::vector<int> train, hold;
  for (std::size_t i = 0; i < samples.size(); ++i)
    (i % 4 == 3 ? hold : train).push_back(static_cast<int>(i));

  Mat A = Mat::Zero(train.size(), unknowns);
  for (std::size_t r = 0; r < train.size(); ++r) {
    const auto& [zk, vk] = samples[train[r]];
    const cd wk = std::conj(zk);
    int col = 0;
    for (int i = 0; i <= deg_num.first; ++i)
      for (int j = 0; j <= deg_num.second; ++j)
        A(r, col++) = std::pow(zk, i) * std::pow(wk, j);
    for (int i = 0; i <= deg_den.first; ++i)
      for (int j = 0; j <= deg_den.second; ++j)
        A(r, col++) = -vk * std::pow(zk, i) * std::pow(wk, j);
  }

  Eigen::JacobiSVD<Mat> svd(A, Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double smax = sv(0);
  // a second singular value at the level of the true null direction means
  // the degree bounds admit a whole family of fits
  if (sv.size() >= 2) {
    const double s_null = sv(sv.size() - 1), s_prev = sv(sv.size() - 2);
    if (s_prev <= 1e-13 * smax || (s_prev <= 100 * s_null && s_prev <= cfg.rank_gap * smax))
      throw RankDeficient("degree bounds too generous: nullspace dimension > 1");
  }

  Eigen::VectorXcd sol = svd.matrixV().col(svd.matrixV().cols() - 1);

  // scale so the canonical leading denominator coefficient is 1
  int lead = -1;
  {
    double best = 0.0;
    std::vector<std::pair<Monomial, int>> denpos;
    int col = n_num;
    for (int i = 0; i <= deg_den.first; ++i)
      for (int j = 0; j <= deg_den.second; ++j) denpos.push_back({Monomial{i, j}, col++});
    std::sort(denpos.begin(), denpos.end(),
              [](const auto& a, const auto& b) { return b.first < a.first; });
    double cap = 0.0;
    for (const auto& [mn, c] : denpos) cap = std::max(cap, std::abs(sol(c)));
    for (const auto& [mn, c] : denpos) {
      if (std::abs(sol(c)) > 1e-6 * cap) {
        lead = c;
        best = std::abs(sol(c));
        break;
      }
    }
    (void)best;
  }
  if (lead < 0) throw RankDeficient("denominator fit is identically zero");
  sol /= sol(lead);

  ReconstructResult out;
  BiPoly num, den;
  int col = 0;
  for (int i = 0; i <= deg_num.first; ++i)
    for (int j = 0; j <= deg_num.second; ++j)
      num.add_term(i, j, snap_complex(sol(col++), cfg, out.all_snapped));
  for (int i = 0; i <= deg_den.first; ++i)
    for (int j = 0; j <= deg_den.second; ++j)
      den.add_term(i, j, snap_complex(sol(col++), cfg, out.all_snapped));
  if (den.is_zero()) throw RankDeficient("denominator snapped to zero");
  out.value = RatFunc(std::move(num), std::move(den));

  double err = 0.0;
  for (int idx : hold) {
    const auto& [zk, vk] = samples[idx];
    try {
      err = std::max(err, std::abs(out.value.eval(zk, std::conj(zk)) - vk));
    } catch (const PoleAtPoint&) {
      throw ValidationFailed("held-out sample on a pole of the fit");
    }
  }
  out.holdout_error = err;
  if (err > cfg.validation_tol)
    throw ValidationFailed("held-out error " + std::to_string(err) + " above tolerance");
  return out;
}

}  // namespace unitonlab

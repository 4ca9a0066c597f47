#include "unitonlab/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "unitonlab/errors.hpp"

namespace unitonlab {

namespace {

std::atomic<int> g_threads{0};

/// Gauss-Legendre nodes/weights on [0, 1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    double p0 = 1.0, p1 = t;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * t * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (t * p1 - p0) / (t * t - 1.0);
    // map from [-1,1] to [0,1]
    x[n - 1 - i] = 0.5 * (t + 1.0);
    w[n - 1 - i] = 1.0 / ((1.0 - t * t) * dp * dp);
  }
}

/// deterministic pairwise reduction of per-row partials
template <typename T>
T pairwise_sum(std::vector<T> v, T zero) {
  if (v.empty()) return zero;
  while (v.size() > 1) {
    std::vector<T> next;
    next.reserve((v.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < v.size(); i += 2) next.push_back(v[i] + v[i + 1]);
    if (v.size() % 2) next.push_back(v.back());
    v.swap(next);
  }
  return v[0];
}

struct ChartResult {
  std::complex<double> value{0.0, 0.0};
  double excluded = 0.0;
  long nodes = 0;
};

ChartResult integrate_chart(const PointFunction& f, const GridSpec& grid, bool hat_chart) {
  const int res = grid.resolution;
  const double R = hat_chart ? 1.0 / grid.chart_radius : grid.chart_radius;
  if (!f) throw Error("missing chart density");

  std::vector<double> rad(res), rw(res);
  if (grid.rule == QuadRule::midpoint) {
    for (int i = 0; i < res; ++i) {
      rad[i] = R * (i + 0.5) / res;
      rw[i] = R / res;
    }
  } else {
    gauss_legendre(res, rad, rw);
    for (int i = 0; i < res; ++i) {
      rad[i] *= R;
      rw[i] *= R;
    }
  }
  const double dth = 2.0 * M_PI / res;

  int nthreads = grid.threads > 0 ? grid.threads : default_threads();
  nthreads = std::max(1, std::min(nthreads, res));

  std::vector<std::complex<double>> row_sums(res, {0.0, 0.0});
  std::vector<double> row_excl(res, 0.0);
  std::vector<long> row_nodes(res, 0);

  auto work = [&](int tid) {
    for (int i = tid; i < res; i += nthreads) {
      std::complex<double> acc{0.0, 0.0};
      double excl = 0.0;
      long nodes = 0;
      for (int j = 0; j < res; ++j) {
        const double th = (j + 0.5) * dth;
        const std::complex<double> zc = std::polar(rad[i], th);
        const double weight = rad[i] * rw[i] * dth;
        try {
          acc += weight * f(zc, std::conj(zc));
          ++nodes;
        } catch (const PoleAtPoint&) {
          excl += weight;  // epsilon-disc exclusion around sampled poles
        }
      }
      row_sums[i] = acc;
      row_excl[i] = excl;
      row_nodes[i] = nodes;
    }
  };

  if (nthreads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(nthreads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }

  ChartResult out;
  out.value = pairwise_sum(row_sums, std::complex<double>{0.0, 0.0});
  for (int i = 0; i < res; ++i) {
    out.excluded += row_excl[i];
    out.nodes += row_nodes[i];
  }
  return out;
}

}  // namespace

void GridSpec::validate() const {
  if (resolution < 16) throw Error("GridSpec resolution must be >= 16");
  if (chart_radius <= 0) throw Error("GridSpec chart radius must be positive");
}

void set_default_threads(int t) { g_threads = t; }

int default_threads() {
  int t = g_threads.load();
  if (t > 0) return t;
  if (const char* env = std::getenv("UNITONLAB_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

SphereIntegral integrate_sphere(const SphereDensity& f, const GridSpec& grid) {
  grid.validate();
  ChartResult c1 = integrate_chart(f.chart1, grid, false);
  ChartResult c2 = integrate_chart(f.chart2, grid, true);
  SphereIntegral out;
  out.chart1 = c1.value;
  out.chart2 = c2.value;
  out.total = c1.value + c2.value;
  out.excluded_mass = c1.excluded + c2.excluded;
  out.node_count = c1.nodes + c2.nodes;
  return out;
}

}  // namespace unitonlab

#ifndef UNITONLAB_QUADRATURE_HPP_
#define UNITONLAB_QUADRATURE_HPP_

#include <complex>
#include <functional>
#include <optional>

namespace unitonlab {

enum class QuadRule { midpoint, gauss_legendre };

/// Two-chart sphere quadrature grid: |z| <= R in (x, y) and |zhat| <= 1/R
/// with zhat = 1/z, both parametrized in polar coordinates so the chart
/// boundary is a grid line.
struct GridSpec {
  int resolution = 256;  // points per axis per chart
  QuadRule rule = QuadRule::midpoint;
  double chart_radius = 1.0;
  int threads = 0;  // 0 = use the configured default

  void validate() const;
};

struct SphereIntegral {
  std::complex<double> total;
  std::complex<double> chart1;
  std::complex<double> chart2;
  double excluded_mass = 0.0;  // summed weight of pole-excluded nodes
  long node_count = 0;
};

using PointFunction =
    std::function<std::complex<double>(std::complex<double> z, std::complex<double> w)>;

/// Densities per chart.  chart1 is evaluated at (z, conj z) over |z| <= R;
/// chart2 at (zhat, conj zhat) over |zhat| <= 1/R and must already contain
/// the flat-measure weight |zhat|^-4 (callers build it exactly from the
/// hat-transformed integrand, avoiding evaluation at huge |z|).
struct SphereDensity {
  PointFunction chart1;
  PointFunction chart2;
};

SphereIntegral integrate_sphere(const SphereDensity& f, const GridSpec& grid);

/// default parallelism (threads) used when GridSpec.threads == 0
void set_default_threads(int t);
int default_threads();

}  // namespace unitonlab

#endif

#ifndef UNITONLAB_ENERGY_HPP_
#define UNITONLAB_ENERGY_HPP_

#include <array>
#include <vector>

#include "unitonlab/quadrature.hpp"
#include "unitonlab/unitons.hpp"

namespace unitonlab {

struct EnergyReport {
  double energy = 0.0;       // value of the real-coordinate energy functional
  double c2_estimate = 0.0;  // energy / 4 pi
  long nearest_integer = 0;
  double deviation = 0.0;    // |c2_estimate - nearest_integer|
  std::pair<double, double> chart_split{0.0, 0.0};
  double excluded_mass = 0.0;
  bool c2_even = false;      // observed parity of the nearest integer
};

/// Energy of a unitary map by two-chart quadrature of
///   (1/2)(|S^-1 dS/dx|^2 + |S^-1 dS/dy|^2) dx dy
/// equivalently 4(|a_z|^2 + |a_zbar|^2) with the squared trace norm.
/// Preconditions: S unitary on the real locus (sampled) and smooth at
/// infinity; otherwise NonUnitarySample / UnboundedDensity.
EnergyReport energy_quadrature(const MatRF& S, const GridSpec& grid);

/// optional per-node density dump hook (x, y, density) per chart
struct DensityDump {
  std::vector<std::array<double, 3>> chart1;
  std::vector<std::array<double, 3>> chart2;
};
EnergyReport energy_quadrature(const MatRF& S, const GridSpec& grid, DensityDump* dump);

struct LemmaGap {
  std::complex<double> lhs;
  std::complex<double> rhs;
  double gap = 0.0;
};

/// Numeric identity: integral of tr(d_zbar A_z B_lambda) equals
/// lambda^-1 integral of tr(A_z A_zbar), both over the sphere in (x, y).
/// lambda0 must avoid {0, -1} and the unit circle.
LemmaGap lemma111_check(const LoopMat& E, const GaussRational& lambda0, const GridSpec& grid);

struct ChernSimonsReport {
  double value = 0.0;        // imaginary component of the (x, y, theta) integral
  double ratio_to_c2 = 0.0;  // value / c2_estimate
  double c2_estimate = 0.0;
  double real_part = 0.0;    // vanishes up to quadrature error
};

/// Triple-wedge trace of the flat-connection form on |lambda| = 1 integrated
/// over sphere x circle; its ratio to c2 is a pinned constant across unitons.
ChernSimonsReport cs_energy(const LoopMat& E, const GridSpec& grid, int circle_resolution);

}  // namespace unitonlab

#endif

#include "unitonlab/circle.hpp"

#include <cmath>

namespace unitonlab {

std::complex<double> CircleSamples::node(int j) const {
  const double th = 2.0 * M_PI * j / count();
  return {std::cos(th), std::sin(th)};
}

CircleSamples circle_sample(const LoopMat& loop, int m, std::complex<double> z0,
                            std::complex<double> w0) {
  CircleSamples s;
  s.n = loop.n();
  s.m = m;
  s.values.reserve(1 << m);
  for (int j = 0; j < (1 << m); ++j) {
    try {
      s.values.push_back(loop.sample(s.node(j), z0, w0));
    } catch (const PoleAtPoint&) {
      throw PoleOnCircle("loop has a pole at circle node " + std::to_string(j));
    }
  }
  return s;
}

CircleSamples circle_sample(const LoopMat& loop, int m, std::complex<double> z0) {
  return circle_sample(loop, m, z0, std::conj(z0));
}

CircleSamples circle_sample(const LoopCallback& fn, int n, int m) {
  CircleSamples s;
  s.n = n;
  s.m = m;
  s.values.reserve(1 << m);
  for (int j = 0; j < (1 << m); ++j) {
    Eigen::MatrixXcd v = fn(s.node(j));
    if (!v.allFinite()) throw PoleOnCircle("non-finite sample at node " + std::to_string(j));
    s.values.push_back(std::move(v));
  }
  return s;
}

}  // namespace unitonlab

#ifndef UNITONLAB_CIRCLE_HPP_
#define UNITONLAB_CIRCLE_HPP_

#include <Eigen/Dense>

#include <complex>
#include <functional>
#include <vector>

#include "unitonlab/loopmat.hpp"

namespace unitonlab {

/// Matrix samples at the 2^m roots of unity lambda_j = exp(2 pi i j / 2^m).
struct CircleSamples {
  int n = 0;
  int m = 0;
  std::vector<Eigen::MatrixXcd> values;

  int count() const { return 1 << m; }
  std::complex<double> node(int j) const;
  /// index of lambda = 1 is 0; lambda = -1 is count()/2.
  int index_of_minus_one() const { return count() / 2; }
};

using LoopCallback = std::function<Eigen::MatrixXcd(std::complex<double>)>;

/// Sample a LoopMat at a point on the real locus (w0 = conj z0 by default).
CircleSamples circle_sample(const LoopMat& loop, int m, std::complex<double> z0,
                            std::complex<double> w0);
CircleSamples circle_sample(const LoopMat& loop, int m, std::complex<double> z0);

/// Sample an arbitrary evaluation callback on the circle.
CircleSamples circle_sample(const LoopCallback& fn, int n, int m);

}  // namespace unitonlab

#endif

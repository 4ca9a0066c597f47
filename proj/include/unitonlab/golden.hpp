#ifndef UNITONLAB_GOLDEN_HPP_
#define UNITONLAB_GOLDEN_HPP_

#include "unitonlab/circle.hpp"
#include "unitonlab/loopmat.hpp"

namespace unitonlab {

/// The U(3) two-uniton example: jump data, chart frames, the real-section
/// frame and the assembled extended solution.
///
/// Static chart matrices depend on (eta, lambda) (or the hat-chart pair) and
/// are stored as MatRF with the convention z -> eta, w -> lambda.  The
/// real-section frame depends on (z, w, lambda) and is a LoopMat.
struct GoldenU3 {
  MatRF jump_p0;      // transition matrix of the jumping line at lambda = 0
  MatRF jump_pinf;    // conjugate hat-chart jump at lambda = infinity
  MatRF frame_ginf;   // section-at-infinity trivialisation near lambda = 0
  LoopMat frame_real; // frame extending over real sections
  LoopMat extended;   // the assembled extended solution, support [-2, 2]
};

const GoldenU3& golden_u3();

/// Exact transcription of the printed extended solution.
const LoopMat& golden_extended();

/// Regeneration from the real-section frame: E = M(lambda) M(-1)^-1.
/// Throws GoldenMismatch (with the differing entries) if it disagrees with
/// the transcription.
LoopMat golden_from_frames();

/// Exact transition data for Ward's construction at a point.
struct GoldenTransition {
  LoopMat T;            // hat-frame over base-frame change, based so T(-1) = 1
  LoopMat phi;          // global frame in the (normalized) base chart
  LoopMat phi_hat;      // global frame in the (normalized) hat chart
  LoopMat phi_raw;      // frame_ginf(lambda, eta) frame_real before normalization
  LoopMat phi_hat_raw;  // hat-chart analogue
};

GoldenTransition golden_transition_exact(const GaussRational& z0, const GaussRational& w0);

/// Circle samples of the transition at 2^m nodes.
CircleSamples golden_transition(const GaussRational& z0, const GaussRational& w0, int m);

/// The lambda = 0 jump specialized along the line: diag(eta^2, 1, eta^-2)
/// sampled in eta on the unit circle.
CircleSamples golden_jump_at_lambda0(int m);

struct TimeTranslation {
  GaussRational t;
  MatRF matrix;
};

TimeTranslation time_translation(const GaussRational& t);

}  // namespace unitonlab

#endif

#include "unitonlab/golden.hpp"

#include <array>
#include <map>
#include <sstream>
#include <vector>

namespace unitonlab {

namespace {

struct Term {
  int k;       // lambda exponent
  int r, c;    // entry (1-based)
  long coef;
  int i, j;    // z and w exponents
};

// printed numerators of the extended solution over the common denominator
// (1 + z^2 w^2 + w z)(4 w z + z^2 w^2 + 1)
const Term kExtendedTerms[] = {
    // lambda^-2, row 3
    {-2, 3, 1, 4, 1, 3}, {-2, 3, 1, 1, 2, 4}, {-2, 3, 1, 1, 0, 2},
    {-2, 3, 2, 4, 1, 2}, {-2, 3, 2, 1, 2, 3}, {-2, 3, 2, 1, 0, 1},
    {-2, 3, 3, 1, 2, 2}, {-2, 3, 3, 4, 1, 1}, {-2, 3, 3, 1, 0, 0},
    // lambda^-1, rows 2 and 3
    {-1, 2, 1, -1, 3, 4}, {-1, 2, 1, -4, 2, 3}, {-1, 2, 1, -1, 1, 2},
    {-1, 2, 2, -1, 3, 3}, {-1, 2, 2, -4, 2, 2}, {-1, 2, 2, -1, 1, 1},
    {-1, 2, 3, -1, 1, 0}, {-1, 2, 3, -4, 2, 1}, {-1, 2, 3, -1, 3, 2},
    {-1, 3, 1, 2, 2, 4}, {-1, 3, 1, 5, 1, 3}, {-1, 3, 1, 2, 0, 2},
    {-1, 3, 2, -2, 3, 4}, {-1, 3, 2, -1, 2, 3}, {-1, 3, 2, 2, 1, 2}, {-1, 3, 2, 1, 0, 1},
    {-1, 3, 3, -4, 3, 3}, {-1, 3, 3, -4, 2, 2}, {-1, 3, 3, -1, 1, 1},
    // lambda^0
    {0, 1, 1, 1, 4, 4}, {0, 1, 1, 4, 3, 3}, {0, 1, 1, 1, 2, 2},
    {0, 1, 2, 1, 4, 3}, {0, 1, 2, 1, 2, 1}, {0, 1, 2, 4, 3, 2},
    {0, 1, 3, 4, 3, 1}, {0, 1, 3, 1, 4, 2}, {0, 1, 3, 1, 2, 0},
    {0, 2, 1, -1, 3, 4}, {0, 2, 1, -2, 2, 3}, {0, 2, 1, 1, 1, 2}, {0, 2, 1, 2, 0, 1},
    {0, 2, 2, 1, 4, 4}, {0, 2, 2, -2, 2, 2}, {0, 2, 2, 1, 0, 0},
    {0, 2, 3, 2, 4, 3}, {0, 2, 3, 1, 3, 2}, {0, 2, 3, -2, 2, 1}, {0, 2, 3, -1, 1, 0},
    {0, 3, 1, 1, 0, 2}, {0, 3, 1, 1, 2, 4}, {0, 3, 1, 1, 1, 3},
    {0, 3, 2, -2, 1, 2}, {0, 3, 2, -2, 3, 4}, {0, 3, 2, -2, 2, 3},
    {0, 3, 3, 1, 4, 4}, {0, 3, 3, 1, 3, 3}, {0, 3, 3, 1, 2, 2},
    // lambda^1, rows 1 and 2
    {1, 1, 1, -1, 3, 3}, {1, 1, 1, -4, 1, 1}, {1, 1, 1, -4, 2, 2},
    {1, 1, 2, -2, 1, 0}, {1, 1, 2, -1, 2, 1}, {1, 1, 2, 2, 3, 2}, {1, 1, 2, 1, 4, 3},
    {1, 1, 3, 2, 4, 2}, {1, 1, 3, 5, 3, 1}, {1, 1, 3, 2, 2, 0},
    {1, 2, 1, 2, 2, 3}, {1, 2, 1, 2, 0, 1}, {1, 2, 1, 2, 1, 2},
    {1, 2, 2, -4, 3, 3}, {1, 2, 2, -4, 2, 2}, {1, 2, 2, -4, 1, 1},
    {1, 2, 3, 2, 2, 1}, {1, 2, 3, 2, 4, 3}, {1, 2, 3, 2, 3, 2},
    // lambda^2, row 1
    {2, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 0, 0}, {2, 1, 1, 1, 2, 2},
    {2, 1, 2, -2, 3, 2}, {2, 1, 2, -2, 1, 0}, {2, 1, 2, -2, 2, 1},
    {2, 1, 3, 1, 2, 0}, {2, 1, 3, 1, 3, 1}, {2, 1, 3, 1, 4, 2},
};

BiPoly golden_denominator() {
  BiPoly d;
  d.add_term(0, 0, GaussRational(1));
  d.add_term(1, 1, GaussRational(5));
  d.add_term(2, 2, GaussRational(6));
  d.add_term(3, 3, GaussRational(5));
  d.add_term(4, 4, GaussRational(1));
  return d;
}

LoopMat build_extended() {
  BiPoly den = golden_denominator();
  std::map<int, std::array<BiPoly, 9>> nums;
  for (const Term& t : kExtendedTerms)
    nums[t.k][(t.r - 1) * 3 + (t.c - 1)].add_term(t.i, t.j, GaussRational(t.coef));
  LoopMat e(3);
  for (auto& [k, mats] : nums) {
    MatRF m(3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c)
        if (!mats[r * 3 + c].is_zero()) m.at(r, c) = RatFunc(mats[r * 3 + c], den);
    e.set_coeff(k, m);
  }
  return e;
}

LoopMat build_frame_real() {
  LoopMat m(3);
  MatRF k0(3), k1(3), k2(3), km1(3), km2(3);
  BiPoly z = BiPoly::variable(Var::z), w = BiPoly::variable(Var::w);
  // [ z^2                -(2z + z^2 w) lambda   lambda^2 ]
  // [ -z / lambda         1 - z^2 w^2           2 w lambda ]
  // [ lambda^-2          (2 z w^2 + w)/lambda   w^2 ]
  k0.at(0, 0) = RatFunc(z * z);
  k0.at(1, 1) = RatFunc(BiPoly(1) - z * z * w * w);
  k0.at(2, 2) = RatFunc(w * w);
  k1.at(0, 1) = RatFunc(-(z.scaled(GaussRational(2)) + z * z * w));
  k1.at(1, 2) = RatFunc(w.scaled(GaussRational(2)));
  k2.at(0, 2) = RatFunc(1);
  km1.at(1, 0) = RatFunc(-z);
  km1.at(2, 1) = RatFunc((z * w * w).scaled(GaussRational(2)) + w);
  km2.at(2, 0) = RatFunc(1);
  m.set_coeff(0, k0);
  m.set_coeff(1, k1);
  m.set_coeff(2, k2);
  m.set_coeff(-1, km1);
  m.set_coeff(-2, km2);
  return m;
}

// static chart matrices in the (z -> eta, w -> lambda) convention
MatRF build_jump_p0() {
  BiPoly eta = BiPoly::variable(Var::z), lam = BiPoly::variable(Var::w);
  MatRF j(3);
  j.at(0, 0) = RatFunc(eta * eta);
  j.at(0, 1) = RatFunc((lam * eta).scaled(GaussRational(2)));
  j.at(0, 2) = RatFunc(lam * lam);
  j.at(1, 1) = RatFunc(1);
  j.at(1, 2) = RatFunc(lam, eta);
  j.at(2, 2) = RatFunc(BiPoly(1), eta * eta);
  return j;
}

MatRF build_jump_pinf() {
  BiPoly eta = BiPoly::variable(Var::z), lam = BiPoly::variable(Var::w);
  MatRF j(3);
  j.at(0, 0) = RatFunc(BiPoly(1), eta * eta);
  j.at(1, 0) = RatFunc(lam.scaled(GaussRational(2)), eta);
  j.at(1, 1) = RatFunc(1);
  j.at(2, 0) = RatFunc(lam * lam);
  j.at(2, 1) = RatFunc(lam * eta);
  j.at(2, 2) = RatFunc(eta * eta);
  return j;
}

MatRF build_frame_ginf() {
  BiPoly eta = BiPoly::variable(Var::z), lam = BiPoly::variable(Var::w);
  MatRF g(3);
  g.at(0, 2) = RatFunc(lam * lam);
  g.at(1, 1) = RatFunc(-1L);
  g.at(1, 2) = RatFunc(-(lam * eta));
  g.at(2, 0) = RatFunc(BiPoly(1), lam * lam);
  g.at(2, 1) = RatFunc(eta.scaled(GaussRational(2)), lam);
  g.at(2, 2) = RatFunc(eta * eta);
  return g;
}

/// scalar Laurent polynomial in lambda with exact coefficients
using LoopScalar = std::map<int, GaussRational>;

LoopScalar ls_const(const GaussRational& c) {
  LoopScalar s;
  if (!c.is_zero()) s[0] = c;
  return s;
}

LoopScalar ls_term(int k, const GaussRational& c) {
  LoopScalar s;
  if (!c.is_zero()) s[k] = c;
  return s;
}

LoopScalar ls_add(const LoopScalar& a, const LoopScalar& b) {
  LoopScalar s = a;
  for (const auto& [k, c] : b) {
    auto it = s.find(k);
    if (it == s.end()) s[k] = c;
    else {
      it->second += c;
      if (it->second.is_zero()) s.erase(it);
    }
  }
  return s;
}

LoopMat assemble(int n, const std::vector<std::vector<LoopScalar>>& entries) {
  LoopMat out(n);
  std::map<int, MatRF> coeffs;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      for (const auto& [k, v] : entries[r][c]) {
        auto it = coeffs.find(k);
        if (it == coeffs.end()) it = coeffs.emplace(k, MatRF::zero(n)).first;
        it->second.at(r, c) = RatFunc(v);
      }
  for (auto& [k, m] : coeffs) out.set_coeff(k, m);
  return out;
}

struct ChartLoops {
  LoopMat G, Ginv, Ghat, Ghatinv, V, Vinv;
  MatRF W;  // Ghat(-1, eta*)^-1, constant in lambda
};

/// chart trivialisations restricted to the real section eta = z0 - lambda^2 w0
ChartLoops chart_loops(const GaussRational& z0, const GaussRational& w0) {
  const GaussRational one(1), two(2);
  const GaussRational a = z0 - w0;  // eta at lambda = +-1
  LoopScalar zero;

  // eta(lambda) = z0 - w0 lambda^2 and friends
  auto eta2 = ls_add(ls_add(ls_term(0, z0 * z0), ls_term(2, -(two * z0 * w0))),
                     ls_term(4, w0 * w0));
  auto etahat2 = ls_add(ls_add(ls_term(-4, z0 * z0), ls_term(-2, -(two * z0 * w0))),
                        ls_term(0, w0 * w0));

  ChartLoops out;
  // G(lambda, eta) = [[0,0,l^2],[0,-1,-l eta],[l^-2, 2 eta / l, eta^2]]
  out.G = assemble(3, {{zero, zero, ls_term(2, one)},
                       {zero, ls_const(-one), ls_add(ls_term(1, -z0), ls_term(3, w0))},
                       {ls_term(-2, one),
                        ls_add(ls_term(-1, two * z0), ls_term(1, -(two * w0))), eta2}});
  // G^-1 = [[eta^2, 2 l eta, l^2],[-eta/l, -1, 0],[l^-2, 0, 0]]
  out.Ginv = assemble(3, {{eta2, ls_add(ls_term(1, two * z0), ls_term(3, -(two * w0))),
                           ls_term(2, one)},
                          {ls_add(ls_term(-1, -z0), ls_term(1, w0)), ls_const(-one), zero},
                          {ls_term(-2, one), zero, zero}});
  // Ghat(lh, eh) = [[eh^2, eh/lh, lh^-2],[-2 lh eh, -1, 0],[lh^2, 0, 0]]
  out.Ghat = assemble(3, {{etahat2, ls_add(ls_term(-1, z0), ls_term(1, -w0)), ls_term(2, one)},
                          {ls_add(ls_term(-3, -(two * z0)), ls_term(-1, two * w0)),
                           ls_const(-one), zero},
                          {ls_term(-2, one), zero, zero}});
  // Ghat^-1 = [[0,0,lh^-2],[0,-1,-2 eh/lh],[lh^2, lh eh, eh^2]]
  out.Ghatinv = assemble(3, {{zero, zero, ls_term(2, one)},
                             {zero, ls_const(-one),
                              ls_add(ls_term(-1, -(two * z0)), ls_term(1, two * w0))},
                             {ls_term(-2, one),
                              ls_add(ls_term(-3, z0), ls_term(-1, -w0)), etahat2}});
  // V: polynomial continuation of G(lambda, eta*)^-1 with V(+-1) = G(+-1, eta*)^-1
  out.V = assemble(3, {{ls_const(a * a), ls_term(1, two * a), ls_const(one)},
                       {ls_term(1, -a), ls_const(-one), zero},
                       {ls_const(one), zero, zero}});
  out.Vinv = assemble(3, {{zero, zero, ls_const(one)},
                          {zero, ls_const(-one), ls_term(1, -a)},
                          {ls_const(one), ls_term(1, two * a),
                           ls_add(ls_const(-(a * a)), ls_term(2, two * a * a))}});
  // W = Ghat(-1, eta*)^-1
  MatRF w(3);
  w.at(0, 2) = RatFunc(1);
  w.at(1, 1) = RatFunc(-1L);
  w.at(1, 2) = RatFunc(two * a);
  w.at(2, 0) = RatFunc(1);
  w.at(2, 1) = RatFunc(-a);
  w.at(2, 2) = RatFunc(a * a);
  out.W = w;
  return out;
}

}  // namespace

const LoopMat& golden_extended() {
  static const LoopMat e = build_extended();
  return e;
}

const GoldenU3& golden_u3() {
  static const GoldenU3 g = [] {
    GoldenU3 out;
    out.jump_p0 = build_jump_p0();
    out.jump_pinf = build_jump_pinf();
    out.frame_ginf = build_frame_ginf();
    out.frame_real = build_frame_real();
    out.extended = golden_extended();
    return out;
  }();
  return g;
}

LoopMat golden_from_frames() {
  const LoopMat& frame = golden_u3().frame_real;
  ScopedReduction guard;
  MatRF m_minus1 = frame.eval_lambda(GaussRational(-1));
  LoopMat regen = frame * LoopMat::constant(m_minus1.inverse());
  const LoopMat& printed = golden_extended();
  if (!regen.eq(printed)) {
    std::ostringstream diff;
    diff << "frame-regenerated extended solution differs from the transcription:";
    LoopSupport su = regen.support(), sp = printed.support();
    int lo = std::min(su.min_deg, sp.min_deg), hi = std::max(su.max_deg, sp.max_deg);
    for (int k = lo; k <= hi; ++k) {
      MatRF a = regen.coeff(k), b = printed.coeff(k);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          if (!a.at(r, c).eq(b.at(r, c)))
            diff << " [lambda^" << k << "](" << r + 1 << "," << c + 1 << ")";
    }
    throw GoldenMismatch(diff.str());
  }
  return regen;
}

GoldenTransition golden_transition_exact(const GaussRational& z0, const GaussRational& w0) {
  ChartLoops ch = chart_loops(z0, w0);
  LoopMat frame_pt = golden_u3().frame_real.specialize(z0, w0);

  GoldenTransition out;
  out.phi_raw = ch.G * frame_pt;
  out.phi_hat_raw = ch.Ghat * frame_pt;
  out.phi = ch.V * out.phi_raw;
  LoopMat Wl = LoopMat::constant(ch.W);
  out.phi_hat = Wl * out.phi_hat_raw;
  out.T = Wl * ch.Ghat * ch.Ginv * ch.Vinv;

  // frame assembly must be section-frame independent: T phi = phi_hat
  if (!(out.T * out.phi).eq(out.phi_hat))
    throw SingularFrame("transition does not intertwine the chart frames");
  return out;
}

CircleSamples golden_transition(const GaussRational& z0, const GaussRational& w0, int m) {
  GoldenTransition g = golden_transition_exact(z0, w0);
  // the transition loop has constant coefficients; sample at the origin
  CircleSamples s = circle_sample(g.T, m, std::complex<double>(0.0, 0.0));
  for (const auto& v : s.values)
    if (!v.allFinite()) throw SingularFrame("non-finite transition sample");
  return s;
}

CircleSamples golden_jump_at_lambda0(int m) {
  // J(0, eta) = diag(eta^2, 1, eta^-2) sampled in eta on the unit circle
  return circle_sample(
      [](std::complex<double> eta) {
        Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(3, 3);
        d(0, 0) = eta * eta;
        d(1, 1) = 1.0;
        d(2, 2) = 1.0 / (eta * eta);
        return d;
      },
      3, m);
}

TimeTranslation time_translation(const GaussRational& t) {
  TimeTranslation out;
  out.t = t;
  MatRF m = MatRF::identity(3);
  m.at(1, 0) = RatFunc(-t);
  m.at(2, 0) = RatFunc(t * t);
  m.at(2, 1) = RatFunc(-(t + t));
  out.matrix = m;
  return out;
}

}  // namespace unitonlab

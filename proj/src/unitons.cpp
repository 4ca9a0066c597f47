#include "unitonlab/unitons.hpp"

#include <cmath>

namespace unitonlab {

std::string residual_kind_name(ResidualKind k) {
  switch (k) {
    case ResidualKind::harmonic: return "harmonic";
    case ResidualKind::flatness: return "flatness";
    case ResidualKind::extended: return "extended";
    case ResidualKind::bogomolny: return "bogomolny";
    case ResidualKind::infinity: return "infinity";
  }
  return "?";
}

std::string verdict_name(UnitonVerdict v) {
  return v == UnitonVerdict::consistent_with_one_uniton ? "consistent_with_one_uniton"
                                                        : "at_least_two";
}

bool is_unitary_exact(const MatRF& S) {
  return (S * S.adjoint()).eq(MatRF::identity(S.n()));
}

bool is_unitary_loop_exact(const LoopMat& E) {
  return (E * E.star_dual()).eq(LoopMat::identity(E.n()));
}

namespace {

MatRF invert_map(const MatRF& S) {
  // unitary maps invert by the exact bar-transpose; verified before use
  MatRF adj = S.adjoint();
  if ((S * adj).eq(MatRF::identity(S.n()))) return adj;
  return S.inverse();
}

/// numeric max norm of a matrix residual over the sampling grid
void sample_matrix(const MatRF& R, const SamplingOptions& opt, double& max_norm, int& count) {
  for (int a = 0; a < opt.grid; ++a)
    for (int b = 0; b < opt.grid; ++b) {
      double x = -opt.radius + (2 * opt.radius) * (a + 0.5) / opt.grid;
      double y = -opt.radius + (2 * opt.radius) * (b + 0.5) / opt.grid;
      std::complex<double> z0(x, y);
      try {
        Eigen::MatrixXcd v = R.eval(z0, std::conj(z0), opt.pole_floor);
        max_norm = std::max(max_norm, v.cwiseAbs().maxCoeff());
        ++count;
      } catch (const PoleAtPoint&) {
        // excluded from the sample; genuine unitons have no real-locus poles
      }
    }
}

ResidualReport report_from_matrices(ResidualKind kind, const std::vector<MatRF>& residuals,
                                    const SamplingOptions& opt) {
  ResidualReport rep;
  rep.kind = kind;
  std::size_t terms = 0;
  for (const auto& r : residuals) terms += r.term_count();
  rep.exact_path = terms <= opt.term_budget;
  if (rep.exact_path) {
    rep.exact_zero = true;
    for (const auto& r : residuals)
      if (!r.is_zero()) {
        rep.exact_zero = false;
        break;
      }
  }
  double mx = 0.0;
  int cnt = 0;
  for (const auto& r : residuals) sample_matrix(r, opt, mx, cnt);
  rep.max_sample_norm = mx;
  rep.sample_count = cnt;
  if (!rep.exact_path)
    rep.exact_zero = false;
  return rep;
}

}  // namespace

Connection connection_from_map(const MatRF& S) {
  if (S.det().is_zero()) throw SingularMatrixFunction("map has identically singular det");
  ScopedReduction guard;
  MatRF sinv = invert_map(S);
  RatFunc half(GaussRational(1, 2));
  Connection c;
  c.a_z = (sinv * S.partial(Var::z)).scaled(half);
  c.a_zbar = (sinv * S.partial(Var::w)).scaled(half);
  return c;
}

ResidualReport harmonic_residual(const MatRF& S, const SamplingOptions& opt) {
  Connection A = connection_from_map(S);
  ScopedReduction guard;
  // d_zbar A_z + [A_zbar, A_z]
  MatRF R = A.a_z.partial(Var::w) + MatRF::commutator(A.a_zbar, A.a_z);
  return report_from_matrices(ResidualKind::harmonic, {R}, opt);
}

ResidualReport flatness_residual(const Connection& A, const SamplingOptions& opt) {
  ScopedReduction guard;
  MatRF comm = MatRF::commutator(A.a_zbar, A.a_z);
  MatRF R = A.a_z.partial(Var::w) - A.a_zbar.partial(Var::z) + comm + comm;
  return report_from_matrices(ResidualKind::flatness, {R}, opt);
}

ResidualReport extended_check(const LoopMat& E, const SamplingOptions& opt) {
  MatRF S = E.eval_lambda(GaussRational(1));
  if (S.det().is_zero()) throw SingularMatrixFunction("E(1) has identically zero det");
  Connection A = connection_from_map(S);
  ScopedReduction guard;

  // E(-1) = 1 exactly
  MatRF basing = E.eval_lambda(GaussRational(-1)) - MatRF::identity(E.n());

  // d_w E = (1 + lambda) E a_zbar   (coefficientwise Laurent identity)
  LoopMat rhs_w = E * LoopMat::constant(A.a_zbar);
  rhs_w = rhs_w + rhs_w.shifted(1);
  LoopMat res_w = E.partial(Var::w) - rhs_w;

  // d_z E = (1 + lambda^-1) E a_z
  LoopMat rhs_z = E * LoopMat::constant(A.a_z);
  rhs_z = rhs_z + rhs_z.shifted(-1);
  LoopMat res_z = E.partial(Var::z) - rhs_z;

  std::vector<MatRF> residuals{basing};
  for (const auto& [k, mat] : res_w.coeffs()) residuals.push_back(mat);
  for (const auto& [k, mat] : res_z.coeffs()) residuals.push_back(mat);
  return report_from_matrices(ResidualKind::extended, residuals, opt);
}

ResidualReport smoothness_at_infinity(const MatRF& S, const SamplingOptions& opt) {
  Connection A = connection_from_map(S);
  ScopedReduction guard;
  // A_zhat = -z^2 A_z must stay bounded toward z = infinity
  MatRF hat = -(A.a_z.scaled(RatFunc(BiPoly::monomial(2, 0))));

  ResidualReport rep;
  rep.kind = ResidualKind::infinity;
  rep.exact_path = false;
  const int angles = 8;
  double m10 = 0.0, m1000 = 0.0;
  int cnt = 0;
  for (double radius : {10.0, 100.0, 1000.0}) {
    double mr = 0.0;
    for (int a = 0; a < angles; ++a) {
      double th = 2 * M_PI * (a + 0.37) / angles;
      std::complex<double> z0 = std::polar(radius, th);
      for (int attempt = 0; attempt < 3; ++attempt) {
        try {
          Eigen::MatrixXcd v = hat.eval(z0, std::conj(z0), opt.pole_floor);
          mr = std::max(mr, v.cwiseAbs().maxCoeff());
          ++cnt;
          break;
        } catch (const PoleAtPoint&) {
          // accidental pole hit: resample at a jittered angle
          z0 = std::polar(radius, th + 0.01 * (attempt + 1));
        }
      }
    }
    if (radius == 10.0) m10 = mr;
    if (radius == 1000.0) m1000 = mr;
    rep.max_sample_norm = std::max(rep.max_sample_norm, mr);
  }
  rep.sample_count = cnt;
  // bounded iff the norm does not keep growing across two decades
  const double growth_cap = 10.0;
  rep.exact_zero = m1000 <= growth_cap * std::max(m10, 1e-9);
  return rep;
}

BogomolnyFields bogomolny_fields(const Connection& A) {
  ScopedReduction guard;
  BogomolnyFields B;
  RatFunc i_rf(GaussRational::i());
  B.a_x = A.a_z + A.a_zbar;
  B.a_y = (A.a_z - A.a_zbar).scaled(i_rf);
  B.a_t = -(B.a_y.scaled(i_rf));  // a_t = -i a_y
  B.phi = B.a_x.scaled(i_rf);     // phi = i a_x
  return B;
}

namespace {
MatRF d_x(const MatRF& m) { return m.partial(Var::z) + m.partial(Var::w); }
MatRF d_y(const MatRF& m) {
  return (m.partial(Var::z) - m.partial(Var::w)).scaled(RatFunc(GaussRational::i()));
}
}  // namespace

ResidualReport bogomolny_residual(const BogomolnyFields& B, const SamplingOptions& opt) {
  ScopedReduction guard;
  // [A_t, phi] = d_x A_y - d_y A_x + [A_x, A_y]
  MatRF r1 = MatRF::commutator(B.a_t, B.phi) -
             (d_x(B.a_y) - d_y(B.a_x) + MatRF::commutator(B.a_x, B.a_y));
  // d_x phi + [A_x, phi] = d_y A_t + [A_y, A_t]
  MatRF r2 = d_x(B.phi) + MatRF::commutator(B.a_x, B.phi) -
             (d_y(B.a_t) + MatRF::commutator(B.a_y, B.a_t));
  // d_y phi + [A_y, phi] = -d_x A_t + [A_t, A_x]
  MatRF r3 = d_y(B.phi) + MatRF::commutator(B.a_y, B.phi) -
             (-d_x(B.a_t) + MatRF::commutator(B.a_t, B.a_x));
  return report_from_matrices(ResidualKind::bogomolny, {r1, r2, r3}, opt);
}

std::pair<LoopSupport, UnitonVerdict> uniton_number_bound(const LoopMat& E) {
  if (!is_unitary_loop_exact(E)) throw NonUnitaryLoop("uniton_number_bound needs a unitary loop");
  LoopMat at0;
  try {
    at0 = E.specialize(GaussRational(), GaussRational());
  } catch (const PoleAtPoint&) {
    throw PoleAtPoint("loop coefficients have a pole at z = 0");
  }
  // E|_{z=0} inherits loop unitarity, so its loop inverse is its star dual
  LoopMat D = at0.star_dual() * E;
  LoopSupport s = D.support();
  UnitonVerdict v = (!s.empty && (s.min_deg < -1 || s.max_deg > 1))
                        ? UnitonVerdict::at_least_two
                        : UnitonVerdict::consistent_with_one_uniton;
  return {s, v};
}

OneUniton one_uniton_from_holo(const std::vector<BiPoly>& f) {
  const int n = static_cast<int>(f.size());
  bool all_zero = true;
  for (const auto& fi : f) {
    if (!fi.is_zero()) all_zero = false;
    auto [dz, dw] = fi.degrees();
    if (dw > 0) throw Error("one_uniton_from_holo expects z-polynomials");
  }
  if (n == 0 || all_zero) throw ZeroVector("holomorphic vector must be nonzero");

  ScopedReduction guard;
  // den = sum_i f_i(z) bar(f_i)(w)
  BiPoly den;
  for (const auto& fi : f) den += fi * fi.bar();
  MatRF pi(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pi.at(i, j) = RatFunc(f[i] * f[j].bar(), den);

  MatRF id = MatRF::identity(n);
  OneUniton out;
  out.projection = pi;
  out.S = pi + pi - id;
  out.E = LoopMat(n);
  out.E.set_coeff(0, pi);
  out.E.set_coeff(1, -(id - pi));
  return out;
}

MatRF base_at_infinity(const MatRF& S) {
  // entrywise limit along z -> infinity, w = conj z: exists iff the numerator
  // degree never exceeds the denominator degree in total degree
  const int n = S.n();
  MatRF limit(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const RatFunc& e = S.at(i, j);
      if (e.is_zero()) continue;
      const Monomial& nm = e.num().leading_monomial();
      const Monomial& dm = e.den().leading_monomial();
      int ndeg = nm.i + nm.j, ddeg = dm.i + dm.j;
      if (ndeg > ddeg) throw Error("S has no limit at infinity");
      if (ndeg == ddeg) {
        if (nm.i != dm.i || nm.j != dm.j)
          throw Error("S limit at infinity is direction-dependent");
        limit.at(i, j) = RatFunc(e.num().leading_coeff() / e.den().leading_coeff());
      }
    }
  MatRF ladj = limit.adjoint();
  if ((limit * ladj).eq(MatRF::identity(n)) == false)
    throw NonUnitarySample("S(infinity) is not unitary");
  return S * ladj;
}

}  // namespace unitonlab

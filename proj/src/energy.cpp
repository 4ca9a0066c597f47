#include "unitonlab/energy.hpp"

#include <cmath>
#include <memory>

namespace unitonlab {

namespace {

// exact integrands cannot hit spurious pole floors; keep a tiny guard only
constexpr double kExactFloor = 1e-280;

double sq_norm(const Eigen::MatrixXcd& m) { return m.squaredNorm(); }

void check_unitary_sampled(const MatRF& S, double tol = 1e-8) {
  const int n = S.n();
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      std::complex<double> z0(-1.3 + 0.71 * a, -1.1 + 0.67 * b);
      try {
        Eigen::MatrixXcd v = S.eval(z0, std::conj(z0));
        double dev = (v * v.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
        if (dev > tol)
          throw NonUnitarySample("deviation " + std::to_string(dev) + " at sample point");
      } catch (const PoleAtPoint&) {
      }
    }
}

/// energy density pair: 4(|a_z|^2 + |a_zbar|^2) on chart 1 and
/// 4(|A_zhat|^2 + |A_zhatbar|^2) on chart 2 with A_zhat = -z^2 a_z pulled
/// back to the hat coordinates (the |zhat|^-4 measure factor is absorbed)
SphereDensity energy_density(const Connection& A) {
  auto az = std::make_shared<MatRF>(A.a_z);
  auto aw = std::make_shared<MatRF>(A.a_zbar);
  RatFunc z2(BiPoly::monomial(2, 0)), w2(BiPoly::monomial(0, 2));
  auto az_hat = std::make_shared<MatRF>(A.a_z.scaled(z2).hat_transform());
  auto aw_hat = std::make_shared<MatRF>(A.a_zbar.scaled(w2).hat_transform());
  SphereDensity d;
  d.chart1 = [az, aw](std::complex<double> z0, std::complex<double> w0) -> std::complex<double> {
    return 4.0 * (sq_norm(az->eval(z0, w0, kExactFloor)) +
                  sq_norm(aw->eval(z0, w0, kExactFloor)));
  };
  d.chart2 = [az_hat, aw_hat](std::complex<double> z0,
                              std::complex<double> w0) -> std::complex<double> {
    return 4.0 * (sq_norm(az_hat->eval(z0, w0, kExactFloor)) +
                  sq_norm(aw_hat->eval(z0, w0, kExactFloor)));
  };
  return d;
}

/// scalar rational integrand evaluated per chart; chart 2 carries the exact
/// hat substitution and the 1/(z^2 w^2) measure factor
SphereDensity scalar_density(const RatFunc& f) {
  auto f1 = std::make_shared<RatFunc>(f);
  RatFunc jac(BiPoly(1), BiPoly::monomial(2, 2));
  auto f2 = std::make_shared<RatFunc>(f.hat_transform() * jac);
  SphereDensity d;
  d.chart1 = [f1](std::complex<double> z0, std::complex<double> w0) {
    return f1->eval(z0, w0, kExactFloor);
  };
  d.chart2 = [f2](std::complex<double> z0, std::complex<double> w0) {
    return f2->eval(z0, w0, kExactFloor);
  };
  return d;
}

}  // namespace

EnergyReport energy_quadrature(const MatRF& S, const GridSpec& grid) {
  return energy_quadrature(S, grid, nullptr);
}

EnergyReport energy_quadrature(const MatRF& S, const GridSpec& grid, DensityDump* dump) {
  grid.validate();
  check_unitary_sampled(S);
  ResidualReport inf = smoothness_at_infinity(S);
  if (!inf.exact_zero)
    throw UnboundedDensity("z^2 A_z grows toward infinity; map is not smooth on the sphere");

  Connection A = connection_from_map(S);
  SphereDensity f = energy_density(A);
  SphereIntegral integral = integrate_sphere(f, grid);

  if (dump) {
    const int res = grid.resolution;
    for (int chart = 0; chart < 2; ++chart) {
      const double R = chart == 0 ? grid.chart_radius : 1.0 / grid.chart_radius;
      const PointFunction& fn = chart == 0 ? f.chart1 : f.chart2;
      for (int i = 0; i < res; ++i)
        for (int j = 0; j < res; ++j) {
          double r = R * (i + 0.5) / res;
          double th = 2.0 * M_PI * (j + 0.5) / res;
          std::complex<double> zc = std::polar(r, th);
          try {
            auto& sink = chart == 0 ? dump->chart1 : dump->chart2;
            sink.push_back({zc.real(), zc.imag(), fn(zc, std::conj(zc)).real()});
          } catch (const PoleAtPoint&) {
          }
        }
    }
  }

  EnergyReport rep;
  rep.energy = integral.total.real();
  rep.c2_estimate = rep.energy / (4.0 * M_PI);
  rep.nearest_integer = std::lround(rep.c2_estimate);
  rep.deviation = std::abs(rep.c2_estimate - static_cast<double>(rep.nearest_integer));
  rep.chart_split = {integral.chart1.real(), integral.chart2.real()};
  rep.excluded_mass = integral.excluded_mass;
  rep.c2_even = rep.nearest_integer % 2 == 0;
  return rep;
}

LemmaGap lemma111_check(const LoopMat& E, const GaussRational& lambda0, const GridSpec& grid) {
  grid.validate();
  if (lambda0.is_zero() || lambda0 == GaussRational(-1))
    throw Error("lemma111_check: lambda0 must avoid {0, -1}");
  {
    std::complex<double> l = lambda0.to_complex();
    if (std::abs(std::abs(l) - 1.0) < 1e-9)
      throw Error("lemma111_check: lambda0 must avoid the unit circle");
  }
  ResidualReport ext = extended_check(E);
  if (!ext.exact_zero) throw Error("lemma111_check requires a valid extended solution");
  if (!is_unitary_loop_exact(E)) throw NonUnitaryLoop("lemma111_check needs a unitary loop");

  MatRF S = E.eval_lambda(GaussRational(1));
  Connection A = connection_from_map(S);
  ScopedReduction guard;

  // B_lambda = E^-1 dE/dlambda at lambda0; the loop inverse of a unitary
  // loop is its star dual, so this stays exact off the circle as well.
  MatRF Einv_l = E.star_dual().eval_lambda(lambda0);
  MatRF dE_l = E.lambda_derivative().eval_lambda(lambda0);
  MatRF B = Einv_l * dE_l;

  RatFunc lhs_tr = (A.a_z.partial(Var::w) * B).trace();
  RatFunc rhs_tr = (A.a_z * A.a_zbar).trace();

  LemmaGap g;
  g.lhs = integrate_sphere(scalar_density(lhs_tr), grid).total;
  g.rhs = integrate_sphere(scalar_density(rhs_tr), grid).total / lambda0.to_complex();
  g.gap = std::abs(g.lhs - g.rhs);
  return g;
}

ChernSimonsReport cs_energy(const LoopMat& E, const GridSpec& grid, int circle_resolution) {
  grid.validate();
  if (circle_resolution < 4) throw Error("cs_energy circle resolution too small");
  if (!is_unitary_loop_exact(E)) throw NonUnitaryLoop("cs_energy needs a unitary loop");
  ResidualReport ext = extended_check(E);
  if (!ext.exact_zero) throw Error("cs_energy requires a valid extended solution");

  MatRF S = E.eval_lambda(GaussRational(1));
  Connection A = connection_from_map(S);
  ScopedReduction guard;

  // B_z = (1 + 1/lambda) A_z, B_zbar = (1 + lambda) A_zbar,
  // B_theta = i lambda B_lambda with B_lambda = E^-1 dE/dlambda.
  // tr(B /\ B /\ B) = 3 tr([B_z, B_zbar] B_theta) dz dzbar dtheta, and
  // [B_z, B_zbar] = (2 + lambda + 1/lambda)[A_z, A_zbar].
  MatRF comm = MatRF::commutator(A.a_z, A.a_zbar);
  LoopMat Bloop = E.star_dual() * E.lambda_derivative();

  struct Ctx {
    MatRF comm;
    std::vector<std::pair<int, MatRF>> bco;
    int n;
    int nth;
  };
  auto make_ctx = [&](bool hat) {
    auto ctx = std::make_shared<Ctx>();
    RatFunc jac(BiPoly(1), BiPoly::monomial(2, 2));
    ctx->comm = hat ? comm.hat_transform().scaled(jac) : comm;
    for (const auto& [k, m] : Bloop.coeffs())
      ctx->bco.emplace_back(k, hat ? m.hat_transform() : m);
    ctx->n = E.n();
    ctx->nth = circle_resolution;
    return ctx;
  };
  auto density = [](std::shared_ptr<Ctx> ctx) {
    return [ctx](std::complex<double> z0, std::complex<double> w0) -> std::complex<double> {
      Eigen::MatrixXcd C = ctx->comm.eval(z0, w0, kExactFloor);
      std::vector<Eigen::MatrixXcd> bvals;
      bvals.reserve(ctx->bco.size());
      for (const auto& [k, m] : ctx->bco) bvals.push_back(m.eval(z0, w0, kExactFloor));
      std::complex<double> acc{0.0, 0.0};
      const double dth = 2.0 * M_PI / ctx->nth;
      for (int t = 0; t < ctx->nth; ++t) {
        const double th = (t + 0.5) * dth;
        const std::complex<double> lam = std::polar(1.0, th);
        Eigen::MatrixXcd B = Eigen::MatrixXcd::Zero(ctx->n, ctx->n);
        for (std::size_t q = 0; q < bvals.size(); ++q)
          B += std::pow(lam, ctx->bco[q].first) * bvals[q];
        Eigen::MatrixXcd Bth = std::complex<double>(0, 1) * lam * B;
        std::complex<double> pref = 3.0 * (2.0 + lam + 1.0 / lam);
        acc += pref * (C * Bth).trace() * dth;
      }
      return acc;
    };
  };

  SphereDensity f;
  f.chart1 = density(make_ctx(false));
  f.chart2 = density(make_ctx(true));
  SphereIntegral integral = integrate_sphere(f, grid);

  EnergyReport er = energy_quadrature(S, grid);

  ChernSimonsReport rep;
  rep.value = integral.total.imag();
  rep.real_part = integral.total.real();
  rep.c2_estimate = er.c2_estimate;
  // zero-energy loops: both the value and c2 vanish; report ratio 0
  rep.ratio_to_c2 = std::abs(er.c2_estimate) < 1e-9 ? 0.0 : rep.value / er.c2_estimate;
  return rep;
}

}  // namespace unitonlab

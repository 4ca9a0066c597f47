#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "unitonlab/energy.hpp"
#include "unitonlab/golden.hpp"

using namespace unitonlab;

namespace {

BiPoly zvar() { return BiPoly::variable(Var::z); }

GridSpec grid(int res) {
  GridSpec g;
  g.resolution = res;
  return g;
}

}  // namespace

TEST_CASE("constant map has zero energy") {
  EnergyReport r = energy_quadrature(MatRF::identity(2), grid(32));
  CHECK(r.energy == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(r.nearest_integer == 0);
}

TEST_CASE("one-uniton energies quantize: c2 = 2 deg f") {
  OneUniton u1 = one_uniton_from_holo({BiPoly(1), zvar()});
  EnergyReport r1 = energy_quadrature(u1.S, grid(128));
  CHECK(r1.nearest_integer == 2);
  CHECK(r1.deviation < 1e-3);

  OneUniton u2 = one_uniton_from_holo({BiPoly(1), zvar() * zvar()});
  EnergyReport r2 = energy_quadrature(u2.S, grid(128));
  CHECK(r2.nearest_integer == 4);
  CHECK(r2.deviation < 1e-3);
}

TEST_CASE("golden energy, integer c2 = 8, exceeds one-uniton") {
  MatRF s = golden_extended().eval_lambda(GaussRational(1));
  EnergyReport r = energy_quadrature(s, grid(128));
  CHECK(r.nearest_integer == 8);
  CHECK(r.deviation < 1e-3);
  CHECK(r.chart_split.first == doctest::Approx(r.chart_split.second).epsilon(1e-6));
  CHECK(r.c2_even);
}

TEST_CASE("non-unitary input rejected") {
  MatRF bad = MatRF::identity(2);
  bad.at(0, 1) = RatFunc(zvar());
  CHECK_THROWS_AS(energy_quadrature(bad, grid(32)), NonUnitarySample);
}

TEST_CASE("quadrature refinement converges at order >= 2") {
  OneUniton u = one_uniton_from_holo({BiPoly(1), zvar()});
  double exact = 8 * M_PI;
  double e64 = std::abs(energy_quadrature(u.S, grid(64)).energy - exact);
  double e128 = std::abs(energy_quadrature(u.S, grid(128)).energy - exact);
  double e256 = std::abs(energy_quadrature(u.S, grid(256)).energy - exact);
  CHECK(e128 < e64 / 3.0);
  CHECK(e256 < e128 / 3.0);
}

TEST_CASE("gauss-legendre rule agrees with midpoint") {
  OneUniton u = one_uniton_from_holo({BiPoly(1), zvar()});
  GridSpec g = grid(64);
  g.rule = QuadRule::gauss_legendre;
  EnergyReport r = energy_quadrature(u.S, g);
  CHECK(r.c2_estimate == doctest::Approx(2.0).epsilon(1e-4));
}

TEST_CASE("conformal dilation invariance") {
  OneUniton u = one_uniton_from_holo({BiPoly(1), zvar()});
  for (auto a : {GaussRational(2), GaussRational(1, 3)}) {
    MatRF scaled = u.S.scale_vars(a, a.conj());
    EnergyReport r = energy_quadrature(scaled, grid(256));
    CHECK(std::abs(r.c2_estimate - 2.0) < 1e-3);
  }
}

TEST_CASE("two-chart consistency under radius change") {
  OneUniton u = one_uniton_from_holo({BiPoly(1), zvar()});
  Connection A = connection_from_map(u.S);
  for (double R : {1.0, 2.0}) {
    GridSpec g = grid(256);
    g.chart_radius = R;
    EnergyReport r = energy_quadrature(u.S, g);
    CHECK(std::abs(r.energy - 8 * M_PI) < 1e-3);
  }
}

TEST_CASE("lemma 11.1 numeric identity") {
  // identity loop: both sides vanish
  LemmaGap g0 = lemma111_check(LoopMat::identity(2), GaussRational(2), grid(32));
  CHECK(std::abs(g0.lhs) < 1e-12);
  CHECK(std::abs(g0.rhs) < 1e-12);

  OneUniton u = one_uniton_from_holo({BiPoly(1), zvar()});
  LemmaGap g1 = lemma111_check(u.E, GaussRational(2), grid(128));
  CHECK(g1.gap <= 1e-4);
  // rhs = lambda^-1 integral tr(A_z A_zbar) = -(energy/8)/lambda = -pi/2
  CHECK(g1.rhs.real() == doctest::Approx(-M_PI / 2).epsilon(1e-3));

  LemmaGap g2 = lemma111_check(golden_extended(), GaussRational(mpq_class(0), mpq_class(2)),
                               grid(128));
  CHECK(g2.gap <= 1e-3);

  CHECK_THROWS_AS(lemma111_check(u.E, GaussRational(-1), grid(32)), Error);
  CHECK_THROWS_AS(lemma111_check(u.E, GaussRational(1), grid(32)), Error);
}

TEST_CASE("chern-simons of the identity loop vanishes") {
  ChernSimonsReport c = cs_energy(LoopMat::identity(2), grid(32), 16);
  CHECK(std::abs(c.value) < 1e-12);
  CHECK(c.ratio_to_c2 == 0.0);
}

TEST_CASE("chern-simons ratio is the pinned constant") {
  OneUniton u = one_uniton_from_holo({BiPoly(1), zvar()});
  ChernSimonsReport c1 = cs_energy(u.E, grid(64), 32);
  // pinned on this example: ratio = -6 pi^2
  const double kappa = -6.0 * M_PI * M_PI;
  CHECK(c1.ratio_to_c2 == doctest::Approx(kappa).epsilon(1e-3));
  CHECK(std::abs(c1.real_part) < 1e-8);

  ChernSimonsReport cg = cs_energy(golden_extended(), grid(64), 32);
  CHECK(std::abs(cg.ratio_to_c2 - c1.ratio_to_c2) / std::abs(c1.ratio_to_c2) < 1e-2);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "unitonlab/json_io.hpp"
#include "unitonlab/loopmat.hpp"

using namespace unitonlab;

namespace {

std::mt19937 rng(77);

MatRF random_const_mat(int n) {
  std::uniform_int_distribution<int> c(-3, 3);
  MatRF m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = RatFunc(GaussRational(c(rng)));
  return m;
}

MatRF random_mat(int n) {
  std::uniform_int_distribution<int> c(-2, 2), e(0, 1);
  MatRF m(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      BiPoly p;
      p.add_term(e(rng), e(rng), GaussRational(c(rng)));
      p.add_term(e(rng), e(rng), GaussRational(c(rng)));
      m.at(i, j) = RatFunc(p);
    }
  return m;
}

LoopMat random_loop(int n, int kmin = -2, int kmax = 2) {
  LoopMat l(n);
  std::uniform_int_distribution<int> k(kmin, kmax);
  for (int t = 0; t < 3; ++t) l.set_coeff(k(rng), random_mat(n));
  return l;
}

// hermitian projection onto span(1, z)
MatRF projection_1z() {
  BiPoly den(1);
  den.add_term(1, 1, GaussRational(1));  // 1 + zw
  MatRF p(2);
  p.at(0, 0) = RatFunc(BiPoly(1), den);
  p.at(0, 1) = RatFunc(BiPoly::variable(Var::w), den);
  p.at(1, 0) = RatFunc(BiPoly::variable(Var::z), den);
  p.at(1, 1) = RatFunc(BiPoly::monomial(1, 1), den);
  return p;
}

}  // namespace

TEST_CASE("loop_mul identity and projection family") {
  LoopMat id = LoopMat::identity(2);
  LoopMat e = random_loop(2);
  CHECK((e * id).eq(e));
  CHECK((id * e).eq(e));

  // (pi - lam pi_perp)(pi - lam^-1 pi_perp) = 1 for an exact projection
  MatRF pi = projection_1z();
  MatRF pperp = MatRF::identity(2) - pi;
  CHECK((pi * pi).eq(pi));
  LoopMat a(2), b(2);
  a.set_coeff(0, pi);
  a.set_coeff(1, -pperp);
  b.set_coeff(0, pi);
  b.set_coeff(-1, -pperp);
  CHECK((a * b).eq(LoopMat::identity(2)));

  LoopMat bad(3);
  CHECK_THROWS_AS(e * bad, DimensionMismatch);
}

TEST_CASE("support arithmetic under products") {
  for (int t = 0; t < 10; ++t) {
    LoopMat e = random_loop(2), f = random_loop(2);
    if (e.is_zero() || f.is_zero()) continue;
    LoopMat p = e * f;
    if (p.is_zero()) continue;
    auto se = e.support(), sf = f.support(), sp = p.support();
    CHECK(sp.min_deg >= se.min_deg + sf.min_deg);
    CHECK(sp.max_deg <= se.max_deg + sf.max_deg);
  }
}

TEST_CASE("loop_eval_lambda") {
  LoopMat id = LoopMat::identity(3);
  CHECK(id.eval_lambda(GaussRational(5)).eq(MatRF::identity(3)));
  CHECK(id.eval_lambda(GaussRational()).eq(MatRF::identity(3)));

  LoopMat neg(2);
  neg.set_coeff(-1, MatRF::identity(2));
  CHECK_THROWS_AS(neg.eval_lambda(GaussRational()), EvalAtZeroWithNegativePowers);

  // one-uniton loop at lambda = -1 is the identity, at 1 it is 2 pi - 1
  MatRF pi = projection_1z();
  LoopMat e(2);
  e.set_coeff(0, pi);
  e.set_coeff(1, -(MatRF::identity(2) - pi));
  CHECK(e.eval_lambda(GaussRational(-1)).eq(MatRF::identity(2)));
  MatRF s = e.eval_lambda(GaussRational(1));
  CHECK((s * s.adjoint()).eq(MatRF::identity(2)));
}

TEST_CASE("star_dual involution and anti-homomorphism") {
  LoopMat id = LoopMat::identity(2);
  CHECK(id.star_dual().eq(id));
  for (int t = 0; t < 8; ++t) {
    LoopMat e = random_loop(2), f = random_loop(2);
    CHECK(e.star_dual().star_dual().eq(e));
    CHECK((e * f).star_dual().eq(f.star_dual() * e.star_dual()));
  }
}

TEST_CASE("unitary loop is unitary at sampled circle points") {
  MatRF pi = projection_1z();
  LoopMat e(2);
  e.set_coeff(0, pi);
  e.set_coeff(1, -(MatRF::identity(2) - pi));
  REQUIRE((e * e.star_dual()).eq(LoopMat::identity(2)));

  std::uniform_real_distribution<double> th(0.0, 2 * M_PI), rad(0.0, 1.5);
  for (int t = 0; t < 30; ++t) {
    std::complex<double> lam = std::polar(1.0, th(rng));
    std::complex<double> z0 = std::polar(rad(rng), th(rng));
    Eigen::MatrixXcd u = e.sample(lam, z0, std::conj(z0));
    double dev = (u * u.adjoint() - Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff();
    CHECK(dev < 1e-12);
  }
}

TEST_CASE("loop_partial and lambda derivative") {
  LoopMat c = LoopMat::constant(random_const_mat(2));
  CHECK(c.partial(Var::z).is_zero());
  CHECK(c.lambda_derivative().is_zero());

  LoopMat e(1);
  MatRF m(1);
  m.at(0, 0) = RatFunc(BiPoly::monomial(2, 1));  // z^2 w
  e.set_coeff(3, m);
  LoopMat dz = e.partial(Var::z);
  MatRF expect(1);
  expect.at(0, 0) = RatFunc(BiPoly::monomial(1, 1, GaussRational(2)));
  CHECK(dz.coeff(3).eq(expect));
  // lambda-derivative: 3 z^2 w lambda^2
  CHECK(e.lambda_derivative().coeff(2).eq(m.scaled(RatFunc(3))));
}

TEST_CASE("loop associativity on random triples") {
  for (int t = 0; t < 6; ++t) {
    LoopMat a = random_loop(2), b = random_loop(2), c = random_loop(2);
    CHECK(((a * b) * c).eq(a * (b * c)));
  }
}

TEST_CASE("loop JSON round trip") {
  LoopMat e = random_loop(2);
  Json j = to_json(e);
  LoopMat back = loopmat_from_json(j);
  CHECK(back.eq(e));
  // canonical form: serialization is stable
  CHECK(to_json(back).dump() == j.dump());
}

// Acceptance suite: one pass/fail line per criterion, exit code = #failures.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "unitonlab/birkhoff.hpp"
#include "unitonlab/energy.hpp"
#include "unitonlab/golden.hpp"
#include "unitonlab/json_io.hpp"
#include "unitonlab/unitons.hpp"

using namespace unitonlab;
using cd = std::complex<double>;
using Mat = Eigen::MatrixXcd;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

std::string fmt(double v) {
  std::ostringstream os;
  os << std::scientific << std::setprecision(2) << v;
  return os.str();
}

BiPoly zvar() { return BiPoly::variable(Var::z); }

GridSpec grid(int res) {
  GridSpec g;
  g.resolution = res;
  return g;
}

MatRF reflection_product() {
  MatRF s1 = one_uniton_from_holo({BiPoly(1), zvar()}).S;
  MatRF s2 = one_uniton_from_holo({BiPoly(1), zvar().scaled(GaussRational(2))}).S;
  return s1 * s2;
}

// ---------------------------------------------------------------- criteria

void c01_basing(std::ostream& log) {
  auto t0 = std::chrono::steady_clock::now();
  expect(golden_extended().eval_lambda(GaussRational(-1)).eq(MatRF::identity(3)),
         "E(-1) != 1");
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  log << "E(-1) = 1 exactly in " << fmt(dt) << " s";
  expect(dt < 1.0, "basing check exceeded 1 s");
}

void c02_unitarity(std::ostream& log) {
  const LoopMat& printed = golden_extended();
  bool printed_ok = (printed * printed.star_dual()).eq(LoopMat::identity(3));
  LoopMat e = printed;
  if (!printed_ok) {
    // printed matrix is bad: the frame path must flag it and supply a fix
    bool mismatch_fired = false;
    try {
      golden_from_frames();
    } catch (const GoldenMismatch& gm) {
      mismatch_fired = true;
      log << "GoldenMismatch diff: " << gm.what() << "; ";
    }
    expect(mismatch_fired, "printed matrix fails but GoldenMismatch did not fire");
    const LoopMat& frame = golden_u3().frame_real;
    ScopedReduction guard;
    e = frame * LoopMat::constant(frame.eval_lambda(GaussRational(-1)).inverse());
    expect((e * e.star_dual()).eq(LoopMat::identity(3)),
           "frame-regenerated solution is not unitary either");
  } else {
    // consistency: the independent frame path agrees with the transcription
    golden_from_frames();
  }
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> th(0, 2 * M_PI), rad(0.0, 1.6);
  double worst = 0.0;
  for (int t = 0; t < 64; ++t) {
    cd lam = std::polar(1.0, th(rng));
    cd z0 = std::polar(rad(rng), th(rng));
    Mat u = e.sample(lam, z0, std::conj(z0));
    worst = std::max(worst, (u * u.adjoint() - Mat::Identity(3, 3)).cwiseAbs().maxCoeff());
  }
  log << "exact loop unitarity; 64 samples deviate by " << fmt(worst);
  expect(worst <= 1e-10, "sampled unitarity deviation above 1e-10");
}

void c03_harmonicity(std::ostream& log) {
  auto t0 = std::chrono::steady_clock::now();
  expect(harmonic_residual(golden_extended().eval_lambda(GaussRational(1))).exact_zero,
         "golden E_1 harmonic residual not exactly zero");
  expect(harmonic_residual(one_uniton_from_holo({BiPoly(1), zvar()}).S).exact_zero,
         "one-uniton harmonic residual not exactly zero");
  ResidualReport bad = harmonic_residual(reflection_product());
  expect(!bad.exact_zero, "reflection product unexpectedly harmonic");
  double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  log << "golden and one-uniton exactly harmonic, counterexample nonzero ("
      << fmt(bad.max_sample_norm) << ") in " << fmt(dt) << " s";
  expect(dt < 30.0, "harmonicity checks exceeded 30 s");
}

void c04_extended(std::ostream& log) {
  expect(extended_check(golden_extended()).exact_zero, "golden extended identities fail");
  expect(extended_check(one_uniton_from_holo({BiPoly(1), zvar()}).E).exact_zero,
         "(1, z) extended identities fail");
  expect(extended_check(one_uniton_from_holo({BiPoly(1), zvar(), zvar() * zvar()}).E)
             .exact_zero,
         "(1, z, z^2) extended identities fail");
  log << "extended identities exact for golden, (1,z), (1,z,z^2)";
}

void c05_bogomolny(std::ostream& log) {
  for (const MatRF& S : {golden_extended().eval_lambda(GaussRational(1)),
                         one_uniton_from_holo({BiPoly(1), zvar()}).S,
                         one_uniton_from_holo({BiPoly(1), zvar(), zvar() * zvar()}).S}) {
    Connection A = connection_from_map(S);
    expect(bogomolny_residual(bogomolny_fields(A)).exact_zero,
           "Bogomolny residual nonzero on a passing uniton");
  }
  Connection Abad = connection_from_map(reflection_product());
  expect(!bogomolny_residual(bogomolny_fields(Abad)).exact_zero,
         "Bogomolny residual zero on the counterexample");
  log << "Bogomolny equations exact on unitons, nonzero on counterexample";
}

void c06_uniton_number(std::ostream& log) {
  auto [sg, vg] = uniton_number_bound(golden_extended());
  expect(vg == UnitonVerdict::at_least_two, "golden verdict is not at_least_two");
  expect(sg.min_deg == -2 && sg.max_deg == 2, "golden D support is not [-2, 2]");
  auto [s1, v1] = uniton_number_bound(one_uniton_from_holo({BiPoly(1), zvar()}).E);
  expect(v1 == UnitonVerdict::consistent_with_one_uniton,
         "(1, z) verdict is not consistent_with_one_uniton");
  log << "golden: lambda^{+-2} present (at_least_two); (1,z): one-uniton consistent";
}

void c07_energy(std::ostream& log) {
  struct Case {
    const char* name;
    MatRF S;
    long expect_c2;
  };
  std::vector<Case> cases;
  cases.push_back({"(1,z)", one_uniton_from_holo({BiPoly(1), zvar()}).S, 2});
  cases.push_back({"(1,z^2)", one_uniton_from_holo({BiPoly(1), zvar() * zvar()}).S, 4});
  cases.push_back({"golden", golden_extended().eval_lambda(GaussRational(1)), 8});
  double c2_1z = 0.0, c2_g = 0.0;
  for (auto& c : cases) {
    auto t0 = std::chrono::steady_clock::now();
    EnergyReport r = energy_quadrature(c.S, grid(512));
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    expect(r.deviation <= 1e-3,
           std::string(c.name) + " c2 deviation " + fmt(r.deviation) + " above 1e-3");
    expect(r.nearest_integer == c.expect_c2,
           std::string(c.name) + " integer " + std::to_string(r.nearest_integer) +
               " != recorded " + std::to_string(c.expect_c2));
    expect(dt < 60.0, std::string(c.name) + " quadrature exceeded 60 s");
    log << c.name << ": c2 = " << r.nearest_integer << " (dev " << fmt(r.deviation)
        << (r.c2_even ? ", even" : ", odd") << ", " << fmt(dt) << " s); ";
    if (std::string(c.name) == "(1,z)") c2_1z = r.c2_estimate;
    if (std::string(c.name) == "golden") c2_g = r.c2_estimate;
  }
  expect(c2_g > c2_1z + 0.5, "golden c2 does not strictly exceed the (1,z) value");
  log << "membership in 4 pi Z confirmed; parity recorded (8 pi Z observed, not asserted)";
}

void c08_lemma111(std::ostream& log) {
  for (GaussRational lam0 : {GaussRational(2), GaussRational(mpq_class(0), mpq_class(2))}) {
    LemmaGap g = lemma111_check(golden_extended(), lam0, grid(512));
    expect(g.gap <= 1e-3, "lemma gap " + fmt(g.gap) + " above 1e-3 at lambda0 = " +
                              lam0.to_string());
    log << "lambda0 = " << lam0.to_string() << ": gap " << fmt(g.gap) << "; ";
  }
}

void c09_chern_simons(std::ostream& log) {
  ChernSimonsReport c1 = cs_energy(one_uniton_from_holo({BiPoly(1), zvar()}).E, grid(128), 32);
  ChernSimonsReport cg = cs_energy(golden_extended(), grid(128), 32);
  double rel = std::abs(cg.ratio_to_c2 - c1.ratio_to_c2) / std::abs(c1.ratio_to_c2);
  log << "kappa[(1,z)] = " << c1.ratio_to_c2 << ", kappa[golden] = " << cg.ratio_to_c2
      << " (-6 pi^2 = " << -6.0 * M_PI * M_PI << "), relative gap " << fmt(rel);
  expect(rel <= 1e-2, "Chern-Simons/c2 ratios disagree beyond 1e-2");
}

void c10_factorization(std::ostream& log) {
  FactorConfig cfg;
  cfg.modes = 32;

  // scalar 2 + lambda against the closed form 1/(2+lambda), Hhat = 1
  CircleSamples s1 = circle_sample(
      [](cd l) { return Mat::Constant(1, 1, 2.0 + l); }, 1, 8);
  BirkhoffResult f1 = birkhoff_factorize(s1, cfg);
  expect(f1.indices == std::vector<int>{0}, "scalar index not 0");
  double err1 = 0.0;
  for (int p = 0; p <= 32; ++p)
    err1 = std::max(err1, std::abs(f1.h_coeffs[p](0, 0) - std::pow(-0.5, p) * 0.5));
  err1 = std::max(err1, std::abs(f1.hhat_coeffs[0](0, 0) - 1.0));
  expect(err1 <= 1e-10, "scalar closed-form error " + fmt(err1));

  // [[lambda, 1],[0, lambda^-1]] against the hand factorization
  CircleSamples s2 = circle_sample(
      [](cd l) {
        Mat m(2, 2);
        m << l, 1.0, 0.0, 1.0 / l;
        return m;
      },
      2, 8);
  BirkhoffResult f2 = birkhoff_factorize(s2, cfg);
  expect(f2.indices == std::vector<int>{0, 0}, "shear indices not (0,0)");
  Mat H0(2, 2), H1(2, 2), Hh0(2, 2), Hhm1(2, 2);
  H0 << 0, -1, 1, 0;
  H1 << 0, 0, 0, 1;
  Hh0 << 1, 0, 0, 1;
  Hhm1 << 0, 0, 1, 0;
  double err2 = std::max({(f2.h_coeffs[0] - H0).cwiseAbs().maxCoeff(),
                          (f2.h_coeffs[1] - H1).cwiseAbs().maxCoeff(),
                          (f2.hhat_coeffs[0] - Hh0).cwiseAbs().maxCoeff(),
                          (f2.hhat_coeffs[-1] - Hhm1).cwiseAbs().maxCoeff()});
  expect(err2 <= 1e-10, "shear closed-form error " + fmt(err2));

  // residual decay under modes doubling on the synthetic nilpotent example.
  // The symbol is a Laurent polynomial, so in exact arithmetic the residual
  // is identically zero at every modes >= bandwidth; the measured value is
  // rounding noise, bounded by the printed floor.
  cd z0(0.37, 0.21);
  Mat N = Mat::Zero(3, 3), Np = Mat::Zero(3, 3), I = Mat::Identity(3, 3);
  N(0, 1) = z0;
  N(0, 2) = z0 * z0;
  N(1, 2) = 1.0 - z0;
  Np(0, 1) = std::conj(z0);
  Np(0, 2) = 0.5;
  Np(1, 2) = std::conj(z0) * std::conj(z0);
  CircleSamples s3 = circle_sample(
      [&](cd l) { return Mat((I + Np / l) * (I + l * N).inverse()); }, 3, 8);
  const double floor = 1e-12;
  double prev = -1.0;
  std::ostringstream decay;
  for (int modes : {8, 16, 32, 64}) {
    FactorConfig c = cfg;
    c.modes = modes;
    double r = birkhoff_factorize(s3, c).residual;
    decay << " r(" << modes << ")=" << fmt(r);
    if (prev >= 0.0)
      expect(r <= std::max(prev / 2.0, floor),
             "residual did not halve (and is above the rounding floor) at modes " +
                 std::to_string(modes));
    prev = r;
  }

  // the same halving property where truncation genuinely bites: an analytic
  // symbol with a geometric Fourier tail
  CircleSamples s4 = circle_sample(
      [](cd l) {
        Mat m(2, 2);
        m << 2.0 + l, 1.0 / (2.0 - l), 0.0, 1.0;
        return m;
      },
      2, 9);
  double prev4 = -1.0;
  for (int modes : {8, 16, 32}) {
    FactorConfig c = cfg;
    c.modes = modes;
    double r = birkhoff_factorize(s4, c).residual;
    if (prev4 >= 0.0) expect(r <= prev4 / 2.0, "analytic-symbol residual did not halve");
    prev4 = r;
  }
  log << "closed forms to " << fmt(std::max(err1, err2)) << "; nilpotent" << decay.str()
      << " (floor " << fmt(floor) << "); analytic tail halves";
}

void c11_indices(std::ostream& log) {
  FactorConfig cfg;
  cfg.modes = 16;
  CircleSamples dlam = circle_sample(
      [](cd l) {
        Mat m = Mat::Zero(2, 2);
        m(0, 0) = l;
        m(1, 1) = 1.0 / l;
        return m;
      },
      2, 6);
  expect(partial_indices(dlam, cfg) == std::vector<int>{-1, 1},
         "diag(lambda, 1/lambda) indices wrong");

  expect(partial_indices(golden_jump_at_lambda0(6), cfg) == std::vector<int>{-2, 0, 2},
         "lambda=0 jump indices wrong");

  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> kd(-2, 2), nd(2, 3);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    int n = nd(rng);
    std::vector<int> kdiag(n);
    std::vector<cd> cdiag(n);
    for (int i = 0; i < n; ++i) {
      kdiag[i] = kd(rng);
      cdiag[i] = cd(g(rng), g(rng));
      if (std::abs(cdiag[i]) < 0.5) cdiag[i] += cd(2.0, 0.0);
    }
    std::vector<std::array<cd, 5>> off(n * n);
    for (auto& o : off)
      for (auto& x : o) x = cd(g(rng), g(rng));
    CircleSamples s = circle_sample(
        [&](cd l) {
          Mat m = Mat::Zero(n, n);
          for (int i = 0; i < n; ++i) {
            m(i, i) = cdiag[i] * std::pow(l, kdiag[i]);
            for (int j = i + 1; j < n; ++j)
              for (int a = 0; a < 5; ++a) m(i, j) += off[i * n + j][a] * std::pow(l, a - 2);
          }
          return m;
        },
        n, 7);
    std::vector<int> idx = partial_indices(s, cfg);
    int sum = 0;
    for (int k : idx) sum += k;
    expect(sum == det_winding(s),
           "index sum != winding on randomized trial " + std::to_string(trial));
  }
  log << "(-1,1), (-2,0,2), and 20/20 randomized sum-equals-winding";
}

void c12_ward(std::ostream& log) {
  FactorConfig cfg;
  cfg.modes = 16;
  std::vector<std::pair<mpq_class, mpq_class>> pts = {
      {mpq_class(0), mpq_class(0)},
      {mpq_class(3, 10), mpq_class(1, 10)},
      {mpq_class(-2, 5), mpq_class(11, 20)},
      {mpq_class(7, 10), mpq_class(-1, 5)},
      {mpq_class(1, 4), mpq_class(3, 4)},
  };
  const LoopMat& e = golden_extended();
  double worst = 0.0;
  for (const auto& [xr, xi] : pts) {
    GaussRational z0(xr, xi), w0 = z0.conj();
    CircleSamples s = golden_transition(z0, w0, 6);
    WardResult w = ward_reconstruct(s, cfg);
    MatRF e1 = e.eval_lambda(GaussRational(1)).eval_exact_point(z0, w0);
    Mat expectm(3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) expectm(r, c) = e1.at(r, c).eval_exact(z0, w0).to_complex();
    worst = std::max(worst, (w.S - expectm).cwiseAbs().maxCoeff());
  }
  expect(worst <= 1e-6, "Ward reconstruction error " + fmt(worst) + " above 1e-6");

  // invariance under constant right factors
  GaussRational z0(mpq_class(3, 10), mpq_class(1, 10));
  CircleSamples s = golden_transition(z0, z0.conj(), 6);
  WardResult base = ward_reconstruct(s, cfg);
  std::mt19937 rng(9);
  std::normal_distribution<double> g;
  Mat C(3, 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) C(r, c) = cd(g(rng), g(rng));
  C += 2.0 * Mat::Identity(3, 3);
  CircleSamples sc = s;
  for (auto& v : sc.values) v = v * C;
  WardResult moved = ward_reconstruct(sc, cfg);
  double inv = (base.S - moved.S).cwiseAbs().maxCoeff();
  expect(inv <= 1e-8, "right-factor invariance violated: " + fmt(inv));
  log << "5-point reconstruction error " << fmt(worst) << "; right-factor invariance "
      << fmt(inv);
}

void c13_reconstruct(std::ostream& log) {
  MatRF S = golden_extended().eval_lambda(GaussRational(1));
  const RatFunc& entry = S.at(0, 0);
  std::vector<std::pair<cd, cd>> samples;
  for (int a = 0; a < 12; ++a)
    for (int b = 0; b < 12; ++b) {
      cd z(0.13 * a - 0.7, 0.11 * b - 0.6);
      samples.push_back({z, entry.eval(z, std::conj(z))});
    }
  ReconstructResult r = rational_reconstruct(samples, {4, 4}, {4, 4});
  expect(r.holdout_error <= 1e-9, "held-out error " + fmt(r.holdout_error) + " above 1e-9");
  expect(r.value.eq(entry), "recovered entry differs from the golden entry under rf_eq");
  log << "entry (1,1) recovered exactly (rf_eq); held-out error " << fmt(r.holdout_error);
}

void c14_time_translation(std::ostream& log) {
  std::mt19937 rng(4);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 9);
  for (int t = 0; t < 50; ++t) {
    GaussRational a(num(rng), den(rng)), b(num(rng), den(rng));
    MatRF lhs = time_translation(a).matrix * time_translation(b).matrix;
    expect(lhs.eq(time_translation(a + b).matrix), "group law fails");
  }
  log << "matrix(t) matrix(s) = matrix(t+s) exact on 50 random rational pairs";
}

struct Criterion {
  int id;
  std::string name;
  std::function<void(std::ostream&)> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "golden basing E(-1) = 1", c01_basing},
      {2, "golden unitarity (exact + sampled)", c02_unitarity},
      {3, "exact harmonicity + counterexample", c03_harmonicity},
      {4, "extended-solution identities", c04_extended},
      {5, "Bogomolny equivalence", c05_bogomolny},
      {6, "uniton-number bound", c06_uniton_number},
      {7, "energy quantization at grid 512", c07_energy},
      {8, "Lemma 11.1 gaps at lambda0 in {2, 2i}", c08_lemma111},
      {9, "Chern-Simons/c2 cross-check", c09_chern_simons},
      {10, "Birkhoff closed forms + residual decay", c10_factorization},
      {11, "partial indices and winding", c11_indices},
      {12, "Ward reconstruction from transition data", c12_ward},
      {13, "rational reconstruction of golden entry", c13_reconstruct},
      {14, "time-translation group law", c14_time_translation},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::ostringstream detail;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string err;
    try {
      c.run(detail);
    } catch (const Failure& f) {
      ok = false;
      err = f.what();
    } catch (const std::exception& e) {
      ok = false;
      err = std::string("unexpected error: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << std::setw(2) << c.id << ". " << c.name
              << " (" << std::fixed << std::setprecision(2) << dt << " s)\n";
    if (!detail.str().empty()) std::cout << "        " << detail.str() << "\n";
    if (!ok) {
      std::cout << "        FAILURE: " << err << "\n";
      ++failures;
    }
  }
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES: " + std::to_string(failures))
            << "\n";
  return failures;
}

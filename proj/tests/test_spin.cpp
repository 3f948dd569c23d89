#include "doctest.h"
#include "edm/error.hpp"
#include "edm/moduli.hpp"
#include "edm/spin.hpp"
#include "test_support.hpp"

using namespace edm;
using edm::test::kSasakianLMinus;
using edm::test::kSasakianLPlus;
using edm::test::kSqrt5;

namespace {

const ModuliParams kSasakian{1.0, kSasakianLMinus, 1.0};
const ModuliParams kSasakian2{1.0, kSasakianLPlus, 1.0};
const ModuliParams kSphere{1.0, -1.0, 1.0};

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("wk_number") {
  const WKNumber a = wk_number(kSasakian);
  CHECK(a.lambda == doctest::Approx(1.0 + kSqrt5 / 2.0).epsilon(1e-14));
  CHECK(a.sign == 1);
  // lambda^2 = (9 + 4 sqrt5) / 4 from S = 1 + sqrt5, |Ric|^2 = 2 C^2 + 4
  CHECK(a.lambda * a.lambda == doctest::Approx((9.0 + 4.0 * kSqrt5) / 4.0).epsilon(1e-14));

  CHECK(wk_number(kSasakian2).lambda == doctest::Approx(1.0 - kSqrt5 / 2.0).epsilon(1e-13));
  CHECK(std::abs(wk_number(kSphere).lambda) == doctest::Approx(1.5).epsilon(1e-15));

  // The orientation sign flips with the parameters.
  const WKNumber neg = wk_number(kSasakian.scaled(-1.0));
  CHECK(neg.sign == -1);
  CHECK(neg.lambda == doctest::Approx(-a.lambda));

  CHECK(code_of([] { (void)wk_number({0, 0, 0}); }) == ErrorCode::ScalarFlat);
  CHECK(code_of([] { (void)wk_number({1, 0, 1}); }) == ErrorCode::NoRealWK);  // S = 2, S^2 - 2|Ric|^2 = -4
  CHECK(code_of([] { (void)wk_number({1, 0.5, -1}); }) == ErrorCode::SignUndefined);
}

TEST_CASE("condition 1 follows from wk_number") {
  for (int i = 0; i < 300; ++i) {
    const ModuliParams p = edm::test::random_params();
    try {
      const WKNumber wk = wk_number(p);
      const RicciData r = ricci_from_params(p);
      CHECK(std::abs(theorem1_residuals(p, wk).r1) <= 1e-10 * std::abs(r.S * r.S * r.S));
    } catch (const Error&) {
    }
  }
}

TEST_CASE("theorem1_residuals") {
  for (const ModuliParams& p : {kSasakian, kSasakian2}) {
    const WKNumber wk = wk_number(p);
    const Theorem1Residuals r = theorem1_residuals(p, wk);
    CHECK(std::abs(r.r1) < 1e-9);
    CHECK(r.r2_max() < 1e-9);
    CHECK(r.r3_max() < 1e-9);
    CHECK(theorem1_residuals(p, -wk.lambda).r2_max() > 1e-2);
  }
  const Theorem1Residuals s = theorem1_residuals(kSphere, 1.5);
  CHECK(s.r1 == 0.0);
  CHECK(s.r2_max() == 0.0);
  CHECK_THROWS_AS((void)theorem1_residuals({0, 0, 0}, 1.0), Error);
}

TEST_CASE("spinor_connection") {
  for (const Mat2C& a : spinor_connection({0, 0, 0}, 0.0).a) CHECK(a.max_abs() == 0.0);

  const CliffordRep& cl = clifford_basis();
  const SpinorConnection sph = spinor_connection(kSphere, 1.5);
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    // 1/2 E_b E_c - lambda (2 * 2 / 6 - 1) E_a
    const Mat2C expected = Complex(0.5) * (cl.e[b] * cl.e[c]) + Complex(0.5) * cl.e[a];
    CHECK(edm::test::max_abs_diff(sph.a[a], expected) < 1e-15);
  }

  for (const Mat2C& a : spinor_connection(kSasakian, wk_number(kSasakian).lambda).a)
    CHECK(j_commutator_norm(a) < 1e-12);
  for (int i = 0; i < 100; ++i) {
    const ModuliParams p = edm::test::random_params();
    if (ricci_from_params(p).S == 0.0) continue;
    for (const Mat2C& a : spinor_connection(p, edm::test::uniform(-3, 3)).a) CHECK(j_commutator_norm(a) < 1e-12);
  }
  CHECK_THROWS_AS((void)spinor_connection({0, 0, 0}, 1.0), Error);
}

TEST_CASE("curvature_omega") {
  const double lam = 1.0 + kSqrt5 / 2.0;
  CHECK(curvature_omega(kSasakian, lam).flat);
  const CurvatureReport wrong = curvature_omega(kSasakian, -lam);
  CHECK_FALSE(wrong.flat);
  CHECK(wrong.max_norm > 1e-3);

  const CurvatureReport sph = curvature_omega(kSphere, 1.5);
  CHECK(sph.flat);
  CHECK(sph.max_norm < 1e-15);
  CHECK(curvature_omega(kSphere, -1.5).flat);
  CHECK_FALSE(curvature_omega(kSphere, 1.0).flat);

  // Off the variety there is no flat choice of lambda.
  const ModuliParams off{1.0, 0.3, 0.7};
  REQUIRE_FALSE(ModuliPoint::at(off).on_variety());
  for (double lam = -4.0; lam <= 4.0; lam += 0.125) CHECK_FALSE(curvature_omega(off, lam).flat);
}

TEST_CASE("flatness and the integrability conditions agree along the curve") {
  for (Branch b : {Branch::plus, Branch::minus}) {
    for (const BranchSample& s : trace_branch(0.05, 10.0, 100, b).samples) {
      const ModuliParams p = s.params();
      const WKNumber wk = wk_number(p);
      const Theorem1Residuals r = theorem1_residuals(p, wk);
      const bool conditions = std::abs(r.r1) < 1e-8 && r.r2_max() < 1e-8 && r.r3_max() < 1e-8;
      const CurvatureReport c = curvature_omega(p, wk.lambda);
      CHECK(conditions);
      CHECK(c.flat == conditions);

      const CurvatureReport flipped = curvature_omega(p, -wk.lambda);
      const Theorem1Residuals rf = theorem1_residuals(p, -wk.lambda);
      CHECK_FALSE(flipped.flat);
      CHECK(flipped.max_norm > 1e-3);
      CHECK(rf.r2_max() > 1e-8);
    }
  }
}

TEST_CASE("WK-number and curvature scale under homothety") {
  for (int i = 0; i < 50; ++i) {
    const double M = std::exp(edm::test::uniform(std::log(0.05), std::log(10.0)));
    const ModuliParams p{1.0, solve_L_given_M(M, i % 2 ? Branch::plus : Branch::minus), M};
    const double mu = edm::test::uniform(0.2, 5.0);
    const WKNumber a = wk_number(p), b = wk_number(p.scaled(mu));
    CHECK(std::abs(b.lambda - mu * a.lambda) <= 1e-10 * std::abs(mu * a.lambda));
    // Use a fixed non-flat lambda so the curvature is not zero.
    const CurvatureReport ca = curvature_omega(p, 0.7 * a.lambda), cb = curvature_omega(p.scaled(mu), 0.7 * b.lambda);
    CHECK(std::abs(cb.max_norm - mu * mu * ca.max_norm) <= 1e-10 * mu * mu * ca.max_norm);
  }
}

TEST_CASE("verify_einstein_from_wk") {
  const Spinor psi_a{1.0, 0.0};
  const Spinor psi_b{0.3, Complex(0.4, -0.2)};
  for (const ModuliParams& p : {kSasakian, kSasakian2, kSphere}) {
    const double lam = p.L == -1.0 ? 1.5 : wk_number(p).lambda;
    const EinsteinCheck a = verify_einstein_from_wk(p, lam, psi_a);
    const EinsteinCheck b = verify_einstein_from_wk(p, lam, psi_b);
    CHECK(a.residual < 1e-10);
    CHECK(std::abs(a.residual - b.residual) < 1e-10);
    CHECK(a.sign == b.sign);
    CHECK(a.sign == -1);
  }
  CHECK_THROWS_AS((void)verify_einstein_from_wk(kSphere, 0.0, psi_a), Error);
  CHECK_THROWS_AS((void)verify_einstein_from_wk(kSphere, 1.5, Spinor{}), Error);
}

TEST_CASE("energy-momentum tensor of a WK spinor is a combination of Ric and g") {
  // Re(X . Z . psi, psi) = -<X, Z> |psi|^2 makes T independent of psi beyond |psi|^2.
  const CliffordRep& cl = clifford_basis();
  for (int i = 0; i < 100; ++i) {
    const Spinor psi = edm::test::random_spinor();
    const Vec3 x = edm::test::random_vec(), z = edm::test::random_vec();
    const Complex v = inner(cl.multiply(x) * (cl.multiply(z) * psi), psi);
    CHECK(std::abs(v.real() + dot(x, z) * psi.norm_sq()) < 1e-14);
  }
}

TEST_CASE("homothety_invariant") {
  const double lam = wk_number(kSasakian).lambda;
  const HomothetyInvariant h = homothety_invariant(kSasakian, lam);
  CHECK(h.relative_gap() < 1e-10);
  const RicciData r = ricci_from_params(kSasakian);
  CHECK(lam * lam == doctest::Approx(r.S * r.S * r.S / (8.0 * (r.S * r.S - 2.0 * r.ric_norm_sq))).epsilon(1e-14));

  for (double mu : {0.5, 2.0, 7.0, edm::test::uniform(0.1, 10.0)}) {
    const ModuliParams q = kSasakian.scaled(mu);
    const double v = homothety_invariant(q, wk_number(q).lambda).value();
    CHECK(std::abs(v - h.value()) <= 1e-10 * h.value());
  }
  CHECK_THROWS_AS((void)homothety_invariant({1, 1, -1}, 1.0), Error);
}

#include <numbers>

#include "doctest.h"
#include "edm/error.hpp"
#include "edm/space.hpp"
#include "test_support.hpp"

using namespace edm;
using edm::test::kSasakianLMinus;
using edm::test::kSqrt5;

namespace {
const ModuliParams kSasakian{1.0, kSasakianLMinus, 1.0};
const ModuliParams kSphere{1.0, -1.0, 1.0};
const ModuliParams kOrigin{0.0, 0.0, 0.0};
}  // namespace

TEST_CASE("ricci_from_params") {
  const RicciData s = ricci_from_params(kSasakian);
  CHECK(s.A == doctest::Approx((kSqrt5 - 1.0) / 2.0).epsilon(1e-15));
  CHECK(s.B == 2.0);
  CHECK(s.C == doctest::Approx((kSqrt5 - 1.0) / 2.0).epsilon(1e-15));

  const RicciData flat = ricci_from_params(kOrigin);
  CHECK(flat.A == 0.0);
  CHECK(flat.B == 0.0);
  CHECK(flat.C == 0.0);

  const RicciData sph = ricci_from_params(kSphere);
  CHECK(sph.A == 2.0);
  CHECK(sph.B == 2.0);
  CHECK(sph.C == 2.0);
  CHECK(sph.S == 6.0);
  CHECK(sph.ric_norm_sq == 12.0);

  CHECK_THROWS_AS((void)ricci_from_params({std::nan(""), 0, 0}), Error);
}

TEST_CASE("structure constants") {
  const StructureConstants sc = structure_constants(kSphere);
  CHECK(sc.bracket(1, 2) == Vec3{2, 0, 0});
  CHECK(sc.bracket(0, 2) == Vec3{0, -2, 0});
  CHECK(sc.bracket(0, 1) == Vec3{0, 0, 2});
  CHECK(sc.bracket(2, 1) == Vec3{-2, 0, 0});

  const StructureConstants zero = structure_constants(kOrigin);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(zero.bracket(a, b) == Vec3{});

  CHECK(structure_constants(kSasakian).c1_23 == doctest::Approx((3.0 + kSqrt5) / 4.0).epsilon(1e-15));

  // d s^k(X, Y) = -s^k([X, Y]) reproduces the structure equations for d s.
  for (int i = 0; i < 50; ++i) {
    const ModuliParams p = edm::test::random_params();
    const StructureConstants c = structure_constants(p);
    CHECK(-c.coefficient(1, 2, 0) == doctest::Approx(p.L - p.K));  // d s1 = (L-K) s2^s3
    CHECK(-c.coefficient(0, 2, 1) == doctest::Approx(p.M + p.K));  // d s2 = (M+K) s1^s3
    CHECK(-c.coefficient(0, 1, 2) == doctest::Approx(p.L - p.M));  // d s3 = (L-M) s1^s2
  }
}

TEST_CASE("covariant derivative of Ricci") {
  for (const auto& slice : nabla_ricci(kOrigin)) CHECK(slice.max_abs() == 0.0);
  for (const auto& slice : nabla_ricci(kSphere)) CHECK(slice.max_abs() == 0.0);
  const auto s = nabla_ricci(kSasakian);
  CHECK(s[2](0, 1) == doctest::Approx((kSqrt5 - 5.0) / 2.0).epsilon(1e-15));
  for (const auto& slice : s)
    for (int i = 0; i < 3; ++i) CHECK(slice(i, i) == 0.0);
}

TEST_CASE("T endomorphism") {
  const double C = (kSqrt5 - 1.0) / 2.0;
  const Mat3 t = t_endomorphism(kSasakian);
  CHECK(t(0, 0) == doctest::Approx(2.0 - C).epsilon(1e-14));
  CHECK(t(1, 1) == doctest::Approx(2.0 * (C - 2.0)).epsilon(1e-14));
  CHECK(t(2, 2) == doctest::Approx(2.0 - C).epsilon(1e-14));
  CHECK(t.max_off_diagonal() == 0.0);

  CHECK(t_endomorphism(kOrigin).max_abs() == 0.0);

  // K = M gives A = C and T = diag((B-C)K, (C-B)(K+M), (B-C)M).
  for (int i = 0; i < 50; ++i) {
    const double K = edm::test::uniform(-3, 3), L = edm::test::uniform(-3, 3);
    const ModuliParams p{K, L, K};
    const RicciData r = ricci_from_params(p);
    REQUIRE(r.A == doctest::Approx(r.C));
    const Mat3 tp = t_endomorphism(p);
    CHECK(tp(0, 0) == doctest::Approx((r.B - r.C) * K));
    CHECK(tp(1, 1) == doctest::Approx((r.C - r.B) * (K + K)));
    CHECK(tp(2, 2) == doctest::Approx((r.B - r.C) * K));
  }

  for (int i = 0; i < 200; ++i) CHECK(t_endomorphism(edm::test::random_params()).max_off_diagonal() < 1e-14);
}

TEST_CASE("metric and volume") {
  const SymTensor3 g = metric_matrix(kSphere);
  CHECK(g(0, 0) == 0.25);
  CHECK(g(1, 1) == 0.25);
  CHECK(g(2, 2) == 0.25);
  CHECK(g(0, 1) == 0.0);

  CHECK(metric_matrix(kSasakian)(0, 0) == doctest::Approx(1.0 / (std::abs(1.0 - kSasakianLMinus) * 2.0)));

  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(volume(kSphere) == doctest::Approx(pi2 / 4.0).epsilon(1e-15));
  CHECK(volume({2, -2, 2}) == doctest::Approx(2.0 * pi2 / 64.0).epsilon(1e-15));

  for (const ModuliParams& bad : {ModuliParams{1, 1, -1}, ModuliParams{1, 0.5, 0.5}, ModuliParams{1, 0.2, -1}}) {
    try {
      (void)volume(bad);
      FAIL("expected DegenerateMetric");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DegenerateMetric);
    }
    CHECK_THROWS_AS((void)metric_matrix(bad), Error);
  }
}

TEST_CASE("Koszul curvature oracle reproduces the closed-form Ricci") {
  CHECK(edm::test::max_abs_diff(ricci_oracle_via_curvature(kSphere), SymTensor3::diagonal(2, 2, 2)) < 1e-14);
  CHECK(ricci_oracle_via_curvature(kOrigin).max_abs() == 0.0);
  for (int i = 0; i < 100; ++i) {
    const ModuliParams p = edm::test::random_params();
    CHECK(edm::test::max_abs_diff(ricci_oracle_via_curvature(p), ricci_from_params(p).tensor()) < 1e-10);
  }
}

TEST_CASE("structure equations reduce to identities") {
  for (int i = 0; i < 1000; ++i) {
    const ModuliParams p = edm::test::random_params();
    for (double r : structure_equation_residuals(p)) CHECK(std::abs(r) <= 1e-14 * std::max(1.0, p.norm_sq()));
  }
}

TEST_CASE("Ricci scales quadratically under homothety") {
  for (int i = 0; i < 100; ++i) {
    const ModuliParams p = edm::test::random_params();
    const double mu = edm::test::uniform(0.1, 5.0);
    const RicciData a = ricci_from_params(p.scaled(mu));
    const RicciData b = ricci_from_params(p);
    const double scale = std::max(1.0, mu * mu * std::sqrt(b.ric_norm_sq));
    CHECK(std::abs(a.A - mu * mu * b.A) <= 1e-12 * scale);
    CHECK(std::abs(a.B - mu * mu * b.B) <= 1e-12 * scale);
    CHECK(std::abs(a.C - mu * mu * b.C) <= 1e-12 * scale);
  }
}

#include <algorithm>

#include "doctest.h"
#include "edm/elliptic.hpp"
#include "edm/error.hpp"
#include "edm/moduli.hpp"
#include "test_support.hpp"

using namespace edm;
using edm::test::kSqrt5;

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

Complex random_z() {
  for (;;) {
    const Complex z{edm::test::uniform(-3, 3), edm::test::uniform(-3, 3)};
    if (std::abs(z) > 0.1 && std::abs(radicand(z)) > 1e-3) return z;
  }
}

}  // namespace

TEST_CASE("radicand") {
  CHECK(std::abs(radicand(1.0)) == 0.0);
  CHECK(std::abs(radicand(-1.0)) == 0.0);
  CHECK(std::abs(radicand(2.0 + kSqrt5)) < 1e-12);
  CHECK(std::abs(radicand(2.0 - kSqrt5)) < 1e-14);
  // The mirrored values -(2 +- sqrt5) are not roots.
  CHECK(std::abs(radicand(-(2.0 + kSqrt5))) > 1.0);
  CHECK(std::abs(radicand(kSqrt5 - 2.0)) > 1.0);
  CHECK(radicand(0.5).real() == doctest::Approx(2.0625).epsilon(1e-15));
  CHECK(radicand(0.0).real() == 1.0);

  const auto found = radicand_roots();
  const auto exact = radicand_roots_exact();
  for (int i = 0; i < 4; ++i) CHECK(std::abs(found[i] - exact[i]) < 1e-12);
}

TEST_CASE("lm_from_z reference values") {
  const ParamPair a = lm_from_z({0.5, 1});
  CHECK(a.L.real() == doctest::Approx(-1.2646054962258804).epsilon(1e-14));
  CHECK(a.M.real() == doctest::Approx(-0.8896054962258804).epsilon(1e-14));
  CHECK(std::abs(a.L.imag()) < 1e-15);
  // z^2 - 1 = M - L - LM
  const auto [ca, cb] = ab_coords(a.L.real(), a.M.real());
  CHECK(ca == doctest::Approx(-0.75).epsilon(1e-14));
  CHECK(cb == doctest::Approx((a.L - a.M).real() * (a.L * a.M).real()).epsilon(1e-14));

  for (int sheet : {1, -1}) {
    const ParamPair o = lm_from_z({1.0, sheet});
    CHECK(std::abs(o.L) == 0.0);
    CHECK(std::abs(o.M) == 0.0);
  }
  const ParamPair m1 = lm_from_z({-1.0, 1});
  CHECK(std::abs(m1.L) == 0.0);
  CHECK(std::abs(m1.M) == 0.0);
  CHECK_THROWS_AS((void)lm_from_z({0.0, 1}), Error);
}

TEST_CASE("Sasakian points lie over z = -phi and z = 1/phi") {
  const ParamPair a = lm_from_z({-kPhi, -1});
  CHECK(std::abs(a.L - (1.0 - kSqrt5) / 4.0) < 1e-14);
  CHECK(std::abs(a.M - 1.0) < 1e-14);
  const ParamPair b = lm_from_z({1.0 / kPhi, -1});
  CHECK(std::abs(b.L - (1.0 + kSqrt5) / 4.0) < 1e-14);
  CHECK(std::abs(b.M - 1.0) < 1e-14);
}

TEST_CASE("parametrized points satisfy Q = 0 and the defining identities") {
  for (int sheet : {1, -1}) {
    for (int i = 0; i < 100; ++i) {
      const EllipticPoint pt{random_z(), sheet};
      const ParamPair lm = lm_from_z(pt);
      const double scale = std::max(1.0, std::pow(std::abs(lm.L) + std::abs(lm.M) + 1.0, 6));
      CHECK(std::abs(q_complex(1.0, lm.L, lm.M)) <= 1e-10 * scale);
      const IdentityResiduals r = identity_residuals(pt);
      const double s = 1.0 + std::pow(std::abs(pt.z) + 1.0, 3) / std::abs(pt.z);
      CHECK(r.difference <= 1e-12 * s);
      CHECK(r.product <= 1e-12 * s);
      // z^2 - 1 = M - L - LM
      CHECK(std::abs(pt.z * pt.z - 1.0 - (lm.M - lm.L - lm.L * lm.M)) <= 1e-12 * s);
      const Complex zz = pt.z * pt.z - 1.0;
      const Complex b = (lm.L - lm.M) * lm.L * lm.M;
      CHECK(std::abs(b - 0.25 * zz * zz * zz / (pt.z * pt.z)) <= 1e-10 * (1.0 + std::abs(b)));
    }
  }
}

TEST_CASE("identity residuals at fixed points") {
  for (const EllipticPoint& pt : {EllipticPoint{0.5, 1}, EllipticPoint{0.5, -1}}) {
    CHECK(identity_residuals(pt).difference < 1e-12);
    CHECK(identity_residuals(pt).product < 1e-12);
  }
  for (int sheet : {1, -1}) {
    const IdentityResiduals r = identity_residuals({Complex(2.0, 0.5), sheet});
    CHECK(r.difference < 1e-10);
    CHECK(r.product < 1e-10);
  }
  const IdentityResiduals m = identity_residuals({-1.0, 1});
  CHECK(m.difference == 0.0);
  CHECK(m.product == 0.0);
  CHECK_THROWS_AS((void)identity_residuals({0.0, 1}), Error);
}

TEST_CASE("real z on the real locus reproduces real branch points") {
  // For real z with R(z) > 0 both sheets give a real point of the curve.
  for (double z : {0.3, 0.5, 0.9, -1.7, -3.0, -4.5}) {
    if (radicand(z).real() <= 0.0) continue;
    for (int sheet : {1, -1}) {
      const ParamPair lm = lm_from_z({z, sheet});
      CHECK(std::abs(lm.L.imag()) < 1e-15);
      CHECK(std::abs(q_poly(1.0, lm.L.real(), lm.M.real())) < 1e-10);
    }
  }
}

TEST_CASE("psi") {
  CHECK(psi(ModuliParams{1.0, -1.0, 1.0}) == 1.0);
  CHECK(psi(ModuliParams{2.0, 1.0, 0.5}) == 1.0);
  CHECK(psi(ModuliParams{1.0, (1.0 - kSqrt5) / 4.0, 1.0}) == doctest::Approx((3.0 - kSqrt5) / 8.0).epsilon(1e-14));
  CHECK(std::abs(psi(Complex(1.0), Complex(0, 1), Complex(2.0)) + 0.5) < 1e-15);
  CHECK_THROWS_AS((void)psi(ModuliParams{1.0, 1.0, 0.0}), Error);
  CHECK_THROWS_AS((void)psi(ModuliParams{0.0, 1.0, 1.0}), Error);
}

TEST_CASE("psi_jet agrees with finite differences") {
  for (int i = 0; i < 40; ++i) {
    const Complex z = random_z();
    const Complex w = sheet_root({z, i % 2 ? 1 : -1});
    const ParamPair lm = lm_from_root(z, w);
    if (std::abs(lm.M) < 0.05) continue;
    const PsiJet j = psi_jet(z, w);
    const PsiJet f = psi_jet_fd(z, w);
    CHECK(std::abs(j.value - lm.L * lm.L / lm.M) <= 1e-12 * (1.0 + std::abs(j.value)));
    CHECK(std::abs(j.d1 - f.d1) <= 1e-5 * (1.0 + std::abs(j.d1)));
    CHECK(std::abs(j.d2 - f.d2) <= 1e-3 * (1.0 + std::abs(j.d2)));
  }
}

TEST_CASE("continue_root picks the nearby sign") {
  const Complex z{0.4, 0.2};
  const Complex w = sheet_root({z, 1});
  CHECK(continue_root(z + 1e-3, w) == sheet_root({z + 1e-3, 1}));
  CHECK(continue_root(z + 1e-3, -w) == sheet_root({z + 1e-3, -1}));
}

TEST_CASE("ramification scan finds the Sasakian preimages as simple critical points") {
  const ScanResult res = psi_ramification_scan({{-3.0, -2.0}, {3.0, 2.0}, 16, 12});
  REQUIRE_FALSE(res.points.empty());
  auto find = [&](double z) {
    return std::find_if(res.points.begin(), res.points.end(),
                        [&](const CriticalPoint& c) { return std::abs(c.z - z) < 1e-8; });
  };
  const auto a = find(-kPhi);
  const auto b = find(1.0 / kPhi);
  REQUIRE(a != res.points.end());
  REQUIRE(b != res.points.end());
  for (auto it : {a, b}) {
    CHECK(it->d1_abs < 1e-10);
    CHECK(it->order == 1);
    CHECK(std::abs(it->lm.M - 1.0) < 1e-10);
  }
  // d2Psi/dz2 = d2Psi/dM2 (dM/dz)^2 at a critical point; the M-curvatures
  // along the real curve are -0.0314338553437999 and -1.09356614465620.
  CHECK(a->d2_abs == doctest::Approx(0.1257).epsilon(1e-3));
  CHECK(b->d2_abs == doctest::Approx(4.374).epsilon(1e-3));
  for (const CriticalPoint& c : res.points) {
    CHECK(c.d1_abs < 1e-8);
    CHECK(std::abs(c.z) > 1e-6);
  }
}

TEST_CASE("refine_critical_point converges from nearby seeds") {
  const Complex z0{-kPhi + 0.05, 0.02};
  const CriticalPoint c = refine_critical_point(z0, continue_root(z0, sheet_root({-kPhi, -1})));
  CHECK(std::abs(c.z + kPhi) < 1e-9);
  CHECK(std::abs(c.psi - (3.0 - kSqrt5) / 8.0) < 1e-9);
}

TEST_CASE("psi near the flat point [1:0:0]") {
  const FlatPointLimits f = psi_limits_at_flat_point();
  CHECK(std::abs(f.value) < 1e-6);
  CHECK(std::abs(f.derivative - 1.0) < 1e-6);
  CHECK_THROWS_AS((void)psi_limits_at_flat_point(0.0), Error);
}

#pragma once

// Parametrization of the complex moduli curve in the chart K = 1 by a
// variable z with z^2 - 1 = M - L - LM, together with a square root w of the
// quartic radicand R(z) = (z + 1)(1 + 3z - 5z^2 + z^3). The pair (z, w) is a
// point on the genus-one curve w^2 = R(z); only local continuation of w is
// attempted.

#include <array>
#include <vector>

#include "edm/clifford.hpp"
#include "edm/space.hpp"

namespace edm {

[[nodiscard]] Complex radicand(Complex z);

/// Roots of R by simultaneous (Weierstrass) iteration, sorted by real part.
[[nodiscard]] std::array<Complex, 4> radicand_roots();

/// Closed-form roots -1, 2 - sqrt5, 1, 2 + sqrt5, from
/// 1 + 3z - 5z^2 + z^3 = (z - 1)(z^2 - 4z - 1).
[[nodiscard]] std::array<double, 4> radicand_roots_exact();

struct EllipticPoint {
  Complex z;
  int sheet = 1;  // w = sheet * principal sqrt(R(z))
};

struct ParamPair {
  Complex L;
  Complex M;
};

/// w = sheet * sqrt(R(z)) on the principal branch.
[[nodiscard]] Complex sheet_root(const EllipticPoint& pt);

/// L = -(1+z)((z-1)^2 + w) / (4z),  M = (1+z)((z-1)^2 - w) / (4z).
/// Throws PoleAtZero.
[[nodiscard]] ParamPair lm_from_root(Complex z, Complex w);
[[nodiscard]] ParamPair lm_from_z(const EllipticPoint& pt);

struct IdentityResiduals {
  double difference = 0.0;  // |(L - M) + (1+z)(z-1)^2 / (2z)|
  double product = 0.0;     // |L M + (1+z)^2 (z-1) / (2z)|
};

[[nodiscard]] IdentityResiduals identity_residuals(const EllipticPoint& pt);

/// Q(1, L, M) for complex arguments.
[[nodiscard]] Complex q_complex(Complex K, Complex L, Complex M);

/// Psi = L^2 / (K M). Throws PoleOfPsi when K M = 0.
[[nodiscard]] double psi(const ModuliParams& p);
[[nodiscard]] Complex psi(Complex K, Complex L, Complex M);

struct PsiJet {
  Complex value;
  Complex d1;  // dPsi/dz
  Complex d2;  // d^2Psi/dz^2
};

/// Psi(z) = L(z)^2 / M(z) on the sheet through (z, w), differentiated by
/// truncated Taylor arithmetic.
[[nodiscard]] PsiJet psi_jet(Complex z, Complex w);

/// Central differences with step h = 1e-6 (1 + |z|) (first derivative) and a
/// caller-chosen step for the second; w is continued to each stencil point.
[[nodiscard]] PsiJet psi_jet_fd(Complex z, Complex w, double h2 = 1e-3);

/// The root of R(z) closest to w_ref.
[[nodiscard]] Complex continue_root(Complex z, Complex w_ref);

struct ScanRegion {
  Complex lo;  // lower-left corner
  Complex hi;  // upper-right corner
  int nx = 16;
  int ny = 16;
};

struct ScanOptions {
  double newton_tol = 1e-10;
  double order_tol = 1e-6;
  int max_iter = 60;
};

struct CriticalPoint {
  Complex z;
  Complex w;
  ParamPair lm;
  Complex psi;
  double d1_abs = 0.0;
  double d2_abs = 0.0;
  int order = 1;  // 2 when the second derivative also vanishes below order_tol
};

struct ScanResult {
  std::vector<CriticalPoint> points;
  int dropped = 0;  // seeds whose Newton iteration failed (NoConvergence)
};

/// Locates zeros of dPsi/dz inside the region on both sheets by damped Newton
/// iteration seeded from a grid.
[[nodiscard]] ScanResult psi_ramification_scan(const ScanRegion& region, const ScanOptions& opts = {});

/// Newton refinement of a single critical point; throws NoConvergence.
[[nodiscard]] CriticalPoint refine_critical_point(Complex z, Complex w, const ScanOptions& opts = {});

/// Along the plus branch at small M: Psi = L^2 / M and d/dM (L^2 / M), which
/// tend to 0 and 1 at the flat point [1:0:0].
struct FlatPointLimits {
  double value = 0.0;
  double derivative = 0.0;
};

[[nodiscard]] FlatPointLimits psi_limits_at_flat_point(double M = 1e-8);

}  // namespace edm

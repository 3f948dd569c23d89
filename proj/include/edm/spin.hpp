#pragma once

// Weak Killing spinors on N(K, L, M) with constant scalar curvature: the
// WK-number, the integrability conditions, the modified spinor connection
//   nabla^lambda_X = nabla_X - lambda ((2/S) Ric(X) - X) .
// and its curvature.

#include <array>

#include "edm/clifford.hpp"
#include "edm/space.hpp"

namespace edm {

struct WKNumber {
  double lambda = 0.0;
  int sign = 1;  // +1 when -K < M, -1 when M < -K
};

/// lambda = sign * S / (2 sqrt 2) * sqrt(S / (S^2 - 2|Ric|^2)).
/// Throws ScalarFlat, NoRealWK, SignUndefined.
[[nodiscard]] WKNumber wk_number(const ModuliParams& p);

struct Theorem1Residuals {
  double r1 = 0.0;        // 8 lambda^2 (S^2 - 2|Ric|^2) - S^3
  Vec3 r2;                // |condition-2 vector residual| at e1, e2, e3
  std::array<double, 3> r3{};  // condition-3 residual norms at (e1,e2), (e1,e3), (e2,e3)

  [[nodiscard]] double r2_max() const;
  [[nodiscard]] double r3_max() const;
};

[[nodiscard]] Theorem1Residuals theorem1_residuals(const ModuliParams& p, double lambda);
[[nodiscard]] inline Theorem1Residuals theorem1_residuals(const ModuliParams& p, const WKNumber& wk) {
  return theorem1_residuals(p, wk.lambda);
}

/// nabla^lambda_{e_a} psi = e_a(psi) + A_a psi in the invariant spinor frame.
struct SpinorConnection {
  std::array<Mat2C, 3> a;
};

[[nodiscard]] SpinorConnection spinor_connection(const ModuliParams& p, double lambda);

struct CurvatureReport {
  Mat2C omega12;
  Mat2C omega13;
  Mat2C omega23;
  double max_norm = 0.0;
  double tolerance = 0.0;
  bool flat = false;
};

inline constexpr double kFlatnessTolerance = 1e-9;

/// Omega(e_a, e_b) = [A_a, A_b] - A_{[e_a, e_b]}. Flat when the largest
/// Frobenius norm is below tol * (1 + |params|^2 + lambda^2).
[[nodiscard]] CurvatureReport curvature_omega(const ModuliParams& p, double lambda,
                                              double tol = kFlatnessTolerance);

struct EinsteinCheck {
  double residual = 0.0;
  int sign = 0;  // the s in Ric - S g / 2 = s T / 4 that minimizes the residual
};

/// Builds nabla psi from the WK equation at a point, with |psi|^2 = |S| / |lambda|,
/// and measures how well Ric - S g / 2 = +-T_psi / 4 holds.
[[nodiscard]] EinsteinCheck verify_einstein_from_wk(const ModuliParams& p, double lambda, const Spinor& psi0);

/// Energy-momentum tensor T(X, Y) = Re (X . nabla_Y psi + Y . nabla_X psi, psi)
/// in the frame, given the four spinors nabla_{e_a} psi.
[[nodiscard]] SymTensor3 energy_momentum(const std::array<Spinor, 3>& nabla_psi, const Spinor& psi);

struct HomothetyInvariant {
  double direct = 0.0;       // lambda^2 * vol^(2/3)
  double closed_form = 0.0;  // (2 pi^2)^(2/3) S^3 / (8 (S^2 - 2|Ric|^2) (|K-L||M-L||K+M|)^(2/3))

  [[nodiscard]] double value() const { return direct; }
  [[nodiscard]] double relative_gap() const;
};

/// Throws DegenerateMetric, ScalarFlat.
[[nodiscard]] HomothetyInvariant homothety_invariant(const ModuliParams& p, double lambda);

}  // namespace edm

#pragma once

// The homogeneous model spaces N(K, L, M): left-invariant metrics on S^3 whose
// orthonormal invariant coframe has connection forms
//   w12 = K s3,  w13 = L s2,  w23 = M s1.
// Everything here is evaluated in that frame, where all quantities are
// constant.

#include <array>

#include "edm/clifford.hpp"

namespace edm {

struct ModuliParams {
  double K = 0.0;
  double L = 0.0;
  double M = 0.0;

  [[nodiscard]] bool finite() const;
  [[nodiscard]] double norm_sq() const { return K * K + L * L + M * M; }
  [[nodiscard]] ModuliParams scaled(double mu) const { return {mu * K, mu * L, mu * M}; }
};

/// Throws Error{NonFinite} when any parameter is NaN or infinite.
void require_finite(const ModuliParams& p);

struct RicciData {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double S = 0.0;
  double ric_norm_sq = 0.0;

  [[nodiscard]] double eigenvalue(int i) const { return i == 0 ? A : (i == 1 ? B : C); }
  [[nodiscard]] SymTensor3 tensor() const { return SymTensor3::diagonal(A, B, C); }
};

/// Bracket constants with [e2,e3] = c1_23 e1, [e1,e3] = c2_13 e2,
/// [e1,e2] = c3_12 e3, under d s^k(X,Y) = -s^k([X,Y]).
struct StructureConstants {
  double c1_23 = 0.0;
  double c2_13 = 0.0;
  double c3_12 = 0.0;

  /// <[e_a, e_b], e_c>, fully antisymmetric bookkeeping included.
  [[nodiscard]] double coefficient(int a, int b, int c) const;
  [[nodiscard]] Vec3 bracket(int a, int b) const;
};

[[nodiscard]] RicciData ricci_from_params(const ModuliParams& p);
[[nodiscard]] StructureConstants structure_constants(const ModuliParams& p);

/// Connection coefficient w_ij(e_a) = <nabla_{e_a} e_i, e_j> from the closed form.
[[nodiscard]] double connection_form(const ModuliParams& p, int a, int i, int j);

/// Slices (nabla_{e_a} Ric), a = 0, 1, 2.
[[nodiscard]] std::array<SymTensor3, 3> nabla_ricci(const ModuliParams& p);

/// T(X) = sum_i e_i x (nabla_{e_i} Ric)(X); column j holds T(e_j).
[[nodiscard]] Mat3 t_endomorphism(const ModuliParams& p);

/// Left-invariant metric in the standard so(3) basis. Throws DegenerateMetric.
[[nodiscard]] SymTensor3 metric_matrix(const ModuliParams& p);

/// 2 pi^2 / (|K-L| |M-L| |K+M|). Throws DegenerateMetric.
[[nodiscard]] double volume(const ModuliParams& p);

/// Ricci tensor from first principles: Koszul formula on the bracket
/// constants, Riemann tensor of the resulting connection, then the trace.
/// Shares nothing with ricci_from_params beyond structure_constants.
[[nodiscard]] SymTensor3 ricci_oracle_via_curvature(const ModuliParams& p);

/// Residuals of the three structure equations for d w12, d w13, d w23, each
/// reduced to a scalar identity between coefficients.
[[nodiscard]] std::array<double, 3> structure_equation_residuals(const ModuliParams& p);

}  // namespace edm

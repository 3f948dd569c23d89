#pragma once

// The moduli variety Q(K, L, M) = 0 of Einstein-Dirac geometries: the sextic
// and its companion polynomials, the cubic L(M) in the chart K = 1, tracing of
// the two real branches L+(M) > 0 > L-(M), and the (a, b) coordinates.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "edm/error.hpp"
#include "edm/space.hpp"

namespace edm {

[[nodiscard]] double q_poly(double K, double L, double M);

/// Same sextic through the symmetric functions of {K, -L, M}:
/// Q = 4 g1 g2 g3 - g2^3 - 4 g3^2.
[[nodiscard]] double q_via_symmetric(double K, double L, double M);

struct PPolys {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
};

[[nodiscard]] PPolys p_polys(double K, double L, double M);

inline constexpr double kVarietyTolerance = 1e-9;

struct ModuliPoint {
  ModuliParams params;
  double q_residual = 0.0;

  [[nodiscard]] static ModuliPoint at(const ModuliParams& p);
  /// |Q| <= tol * max(1, |params|^6).
  [[nodiscard]] bool on_variety(double tol = kVarietyTolerance) const;
};

/// Residuals of the three squared equations
///   2 S (S^2 - 2|Ric|^2) f_i^2 - (S (S R_i - 2 R_i^2) - R_i (S^2 - 2|Ric|^2))^2
/// obtained from the diagonal of the second integrability condition after
/// eliminating lambda. Each one equals 64 P_i Q identically.
[[nodiscard]] std::array<double, 3> squared_equation_residuals(const ModuliParams& p);

/// Coefficients {c3, c2, c1, c0} of Q(1, L, M) as a cubic in L.
[[nodiscard]] std::array<double, 4> cubic_in_L(double M);

/// Real roots of c3 x^3 + c2 x^2 + c1 x + c0, ascending, each Newton-polished
/// on the original coefficients. A leading coefficient below
/// 1e-12 * max|c| drops the degree.
[[nodiscard]] std::vector<double> real_roots_cubic(double c3, double c2, double c1, double c0);

enum class Branch { plus, minus };

[[nodiscard]] std::string_view to_string(Branch b) noexcept;
[[nodiscard]] std::optional<Branch> parse_branch(std::string_view s) noexcept;

/// The root of Q(1, L, M) = 0 on the requested branch: the unique positive root
/// for plus, the negative root closest to zero for minus. M = 0 gives L = 0.
/// Throws NoRealRoot, InvalidArgument (M < 0).
[[nodiscard]] double solve_L_given_M(double M, Branch branch);

struct BranchSample {
  double M = 0.0;
  double L = 0.0;
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
  double S = 0.0;
  double lambda = 0.0;
  double vol = 0.0;
  double invariant = 0.0;
  std::optional<ErrorCode> error;

  [[nodiscard]] ModuliParams params() const { return {1.0, L, M}; }
};

/// Fills every derived field of a sample at (1, L, M); errors are recorded on
/// the sample rather than thrown.
[[nodiscard]] BranchSample make_sample(double M, double L);

struct CurveBranch {
  Branch branch_id = Branch::plus;
  std::vector<BranchSample> samples;
};

/// n equally spaced samples of M in [m_min, m_max]; each root is continued
/// from the previous one. Throws InvalidArgument on a bad range.
[[nodiscard]] CurveBranch trace_branch(double m_min, double m_max, int n, Branch branch);

/// a = M - L - LM, b = (L - M) L M; on K = 1, Q = -a^3 + 4 b (1 + a).
[[nodiscard]] std::pair<double, double> ab_coords(double L, double M);

enum class SpecialKind { singular_flat, sasakian, round_sphere };

struct LabeledPoint {
  std::string label;
  SpecialKind kind;
  ModuliParams params;
};

[[nodiscard]] std::vector<LabeledPoint> special_points();

}  // namespace edm

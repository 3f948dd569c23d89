#include "edm/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "edm/spin.hpp"

namespace edm {

double q_poly(double K, double L, double M) {
  const double lm = L - M;
  const double lpm = L + M;
  return -K * K * L * lm * lm * M + L * L * L * M * M * M + K * L * L * M * M * (M - L) + K * K * K * lm * lpm * lpm;
}

double q_via_symmetric(double K, double L, double M) {
  const double g1 = K - L + M;
  const double g2 = -K * L + K * M - L * M;
  const double g3 = -K * L * M;
  return 4.0 * g1 * g2 * g3 - g2 * g2 * g2 - 4.0 * g3 * g3;
}

PPolys p_polys(double K, double L, double M) {
  const double f1 = -K * L * L + L * L * M + K * K * (L + M);
  const double f2 = K * M * M + L * M * M + K * K * (L + M);
  const double f3 = L * M * (M - L) + K * (L * L + M * M);
  return {f1 * f1, f2 * f2, f3 * f3};
}

ModuliPoint ModuliPoint::at(const ModuliParams& p) {
  require_finite(p);
  return {p, q_poly(p.K, p.L, p.M)};
}

bool ModuliPoint::on_variety(double tol) const {
  const double n2 = params.norm_sq();
  return std::abs(q_residual) <= tol * std::max(1.0, n2 * n2 * n2);
}

std::array<double, 3> squared_equation_residuals(const ModuliParams& p) {
  const RicciData r = ricci_from_params(p);
  const double S = r.S;
  const double D = S * S - 2.0 * r.ric_norm_sq;
  const double f1 = (r.A - r.C) * p.L + (r.B - r.A) * p.K;
  const double f2 = (r.C - r.B) * p.M + (r.A - r.B) * p.K;
  const double f3 = (r.B - r.C) * p.M + (r.C - r.A) * p.L;
  auto rhs = [&](double x) {
    const double v = S * (S * x - 2.0 * x * x) - x * D;
    return v * v;
  };
  return {2.0 * S * D * f1 * f1 - rhs(r.A), 2.0 * S * D * f2 * f2 - rhs(r.B), 2.0 * S * D * f3 * f3 - rhs(r.C)};
}

std::array<double, 4> cubic_in_L(double M) {
  // Q(1, L, M) = L^3 (M-1)^2 (M+1) + L^2 M (1+M)^2 - L M^2 (1+M) - M^3
  return {(M - 1.0) * (M - 1.0) * (M + 1.0), M * (1.0 + M) * (1.0 + M), -M * M * (1.0 + M), -M * M * M};
}

namespace {

double horner(const std::array<double, 4>& c, double x) { return ((c[0] * x + c[1]) * x + c[2]) * x + c[3]; }
double horner_d(const std::array<double, 4>& c, double x) { return (3.0 * c[0] * x + 2.0 * c[1]) * x + c[2]; }

double newton_polish(const std::array<double, 4>& c, double x, int max_iter = 8) {
  double fx = horner(c, x);
  for (int it = 0; it < max_iter && fx != 0.0; ++it) {
    const double d = horner_d(c, x);
    if (d == 0.0) break;
    const double next = x - fx / d;
    const double fn = horner(c, next);
    if (!(std::abs(fn) < std::abs(fx))) break;
    x = next;
    fx = fn;
  }
  return x;
}

std::vector<double> quadratic_roots(double a, double b, double c) {
  if (a == 0.0) {
    if (b == 0.0) return {};
    return {-c / b};
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return {};
  // Avoid cancellation: q = -(b + sign(b) sqrt(disc)) / 2.
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  if (q == 0.0) return {0.0, 0.0};
  return {q / a, c / q};
}

std::vector<double> monic_cubic_roots(double a, double b, double c) {
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double shift = -a / 3.0;
  const double disc = 0.25 * q * q + p * p * p / 27.0;
  if (disc > 0.0) {
    const double u = std::cbrt(-0.5 * q - std::copysign(std::sqrt(disc), q));
    const double t = u == 0.0 ? 0.0 : u - p / (3.0 * u);
    return {t + shift};
  }
  if (p == 0.0) return {shift, shift, shift};
  const double r = 2.0 * std::sqrt(-p / 3.0);
  const double arg = std::clamp(3.0 * q / (p * r), -1.0, 1.0);
  const double phi = std::acos(arg) / 3.0;
  std::vector<double> out;
  for (int k = 0; k < 3; ++k) out.push_back(r * std::cos(phi - 2.0 * std::numbers::pi * k / 3.0) + shift);
  return out;
}

}  // namespace

std::vector<double> real_roots_cubic(double c3, double c2, double c1, double c0) {
  const std::array<double, 4> c{c3, c2, c1, c0};
  const double scale = std::max({std::abs(c3), std::abs(c2), std::abs(c1), std::abs(c0)});
  if (scale == 0.0) throw Error(ErrorCode::InvalidArgument, "all cubic coefficients vanish");
  std::vector<double> roots;
  if (std::abs(c3) < 1e-12 * scale)
    roots = quadratic_roots(c2, c1, c0);
  else
    roots = monic_cubic_roots(c2 / c3, c1 / c3, c0 / c3);
  for (double& x : roots) x = newton_polish(c, x);
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::string_view to_string(Branch b) noexcept { return b == Branch::plus ? "plus" : "minus"; }

std::optional<Branch> parse_branch(std::string_view s) noexcept {
  if (s == "plus" || s == "+") return Branch::plus;
  if (s == "minus" || s == "-") return Branch::minus;
  return std::nullopt;
}

namespace {

std::optional<double> pick_branch_root(const std::vector<double>& roots, Branch branch) {
  std::optional<double> best;
  for (double x : roots) {
    if (branch == Branch::plus && x > 0.0 && (!best || x < *best)) best = x;
    if (branch == Branch::minus && x < 0.0 && (!best || x > *best)) best = x;
  }
  return best;
}

void check_root(double M, double L) {
  if (!ModuliPoint::at({1.0, L, M}).on_variety())
    throw Error(ErrorCode::NoConvergence, "polished root misses the variety at M = " + std::to_string(M));
}

}  // namespace

double solve_L_given_M(double M, Branch branch) {
  if (!std::isfinite(M)) throw Error(ErrorCode::NonFinite, "M must be finite");
  if (M < 0.0) throw Error(ErrorCode::InvalidArgument, "M must be non-negative");
  if (M == 0.0) return 0.0;
  const auto c = cubic_in_L(M);
  const auto root = pick_branch_root(real_roots_cubic(c[0], c[1], c[2], c[3]), branch);
  if (!root)
    throw Error(ErrorCode::NoRealRoot,
                "no real root on branch " + std::string(to_string(branch)) + " at M = " + std::to_string(M));
  check_root(M, *root);
  return *root;
}

BranchSample make_sample(double M, double L) {
  BranchSample s;
  s.M = M;
  s.L = L;
  const ModuliParams p{1.0, L, M};
  try {
    const RicciData r = ricci_from_params(p);
    s.A = r.A;
    s.B = r.B;
    s.C = r.C;
    s.S = r.S;
    s.lambda = wk_number(p).lambda;
    s.vol = volume(p);
    s.invariant = homothety_invariant(p, s.lambda).value();
  } catch (const Error& e) {
    s.error = e.code();
  }
  return s;
}

CurveBranch trace_branch(double m_min, double m_max, int n, Branch branch) {
  if (!(std::isfinite(m_min) && std::isfinite(m_max)) || m_min < 0.0 || !(m_min < m_max) || n < 2)
    throw Error(ErrorCode::InvalidArgument, "trace needs 0 <= m_min < m_max and n >= 2");
  CurveBranch out{branch, {}};
  out.samples.reserve(static_cast<std::size_t>(n));
  std::optional<double> prev_L;
  double prev_M = 0.0;
  for (int i = 0; i < n; ++i) {
    const double M = i == n - 1 ? m_max : m_min + (m_max - m_min) * i / (n - 1);
    std::optional<double> L;
    try {
      const double canonical = solve_L_given_M(M, branch);
      L = canonical;
      if (prev_L && M > 0.0) {
        // Continue from the previous root with a tangent predictor.
        const auto c = cubic_in_L(M);
        const double qL = horner_d(cubic_in_L(prev_M), *prev_L);
        const double h = 1e-7 * std::max(1.0, prev_M);
        const double qM = (q_poly(1.0, *prev_L, prev_M + h) - q_poly(1.0, *prev_L, prev_M - h)) / (2.0 * h);
        const double slope = qL != 0.0 ? -qM / qL : 0.0;
        const double continued = newton_polish(c, *prev_L + slope * (M - prev_M), 30);
        // A continued root that left the branch is discarded for the canonical one.
        if (std::abs(continued - canonical) <= 1e-9 * std::max(1.0, std::abs(canonical))) L = continued;
      }
    } catch (const Error& e) {
      BranchSample s;
      s.M = M;
      s.L = std::numeric_limits<double>::quiet_NaN();
      s.error = e.code();
      out.samples.push_back(s);
      continue;
    }
    out.samples.push_back(make_sample(M, *L));
    prev_L = L;
    prev_M = M;
  }
  return out;
}

std::pair<double, double> ab_coords(double L, double M) { return {M - L - L * M, (L - M) * L * M}; }

std::vector<LabeledPoint> special_points() {
  const double s5 = std::sqrt(5.0);
  return {
      {"flat [1:0:0]", SpecialKind::singular_flat, {1.0, 0.0, 0.0}},
      {"flat [0:1:0]", SpecialKind::singular_flat, {0.0, 1.0, 0.0}},
      {"flat [0:0:1]", SpecialKind::singular_flat, {0.0, 0.0, 1.0}},
      {"sasakian (1, (1-sqrt5)/4, 1)", SpecialKind::sasakian, {1.0, (1.0 - s5) / 4.0, 1.0}},
      {"sasakian (1, (1+sqrt5)/4, 1)", SpecialKind::sasakian, {1.0, (1.0 + s5) / 4.0, 1.0}},
      {"round sphere (1, -1, 1)", SpecialKind::round_sphere, {1.0, -1.0, 1.0}},
  };
}

}  // namespace edm

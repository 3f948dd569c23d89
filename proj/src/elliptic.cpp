#include "edm/elliptic.hpp"

#include <algorithm>
#include <cmath>

#include "edm/error.hpp"
#include "edm/moduli.hpp"

namespace edm {

Complex radicand(Complex z) { return (z + 1.0) * (1.0 + z * (3.0 + z * (-5.0 + z))); }

std::array<Complex, 4> radicand_roots() {
  // Expanded: z^4 - 4z^3 - 2z^2 + 4z + 1.
  auto p = [](Complex z) { return (((z - 4.0) * z - 2.0) * z + 4.0) * z + 1.0; };
  std::array<Complex, 4> r;
  const Complex seed(0.4, 0.9);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = 3.0 * std::pow(seed, static_cast<double>(i));
  for (int it = 0; it < 500; ++it) {
    double change = 0.0;
    for (std::size_t i = 0; i < r.size(); ++i) {
      Complex denom = 1.0;
      for (std::size_t j = 0; j < r.size(); ++j)
        if (j != i) denom *= r[i] - r[j];
      const Complex step = p(r[i]) / denom;
      r[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-16) break;
  }
  std::sort(r.begin(), r.end(), [](Complex a, Complex b) { return a.real() < b.real(); });
  return r;
}

std::array<double, 4> radicand_roots_exact() {
  const double s5 = std::sqrt(5.0);
  return {-1.0, 2.0 - s5, 1.0, 2.0 + s5};
}

Complex sheet_root(const EllipticPoint& pt) { return static_cast<double>(pt.sheet) * std::sqrt(radicand(pt.z)); }

ParamPair lm_from_root(Complex z, Complex w) {
  if (z == 0.0) throw Error(ErrorCode::PoleAtZero, "z = 0 is a pole of L and M");
  const Complex zm1 = z - 1.0;
  const Complex sq = zm1 * zm1;
  const Complex pre = (1.0 + z) / (4.0 * z);
  return {-pre * (sq + w), pre * (sq - w)};
}

ParamPair lm_from_z(const EllipticPoint& pt) { return lm_from_root(pt.z, sheet_root(pt)); }

IdentityResiduals identity_residuals(const EllipticPoint& pt) {
  const ParamPair lm = lm_from_z(pt);
  const Complex z = pt.z;
  const Complex diff = -(1.0 + z) * (z - 1.0) * (z - 1.0) / (2.0 * z);
  const Complex prod = -(1.0 + z) * (1.0 + z) * (z - 1.0) / (2.0 * z);
  return {std::abs(lm.L - lm.M - diff), std::abs(lm.L * lm.M - prod)};
}

Complex q_complex(Complex K, Complex L, Complex M) {
  const Complex lm = L - M;
  const Complex lpm = L + M;
  return -K * K * L * lm * lm * M + L * L * L * M * M * M + K * L * L * M * M * (M - L) + K * K * K * lm * lpm * lpm;
}

double psi(const ModuliParams& p) {
  require_finite(p);
  if (p.K * p.M == 0.0) throw Error(ErrorCode::PoleOfPsi, "K M = 0");
  return p.L * p.L / (p.K * p.M);
}

Complex psi(Complex K, Complex L, Complex M) {
  if (K * M == 0.0) throw Error(ErrorCode::PoleOfPsi, "K M = 0");
  return L * L / (K * M);
}

namespace {

// Truncated Taylor series c0 + c1 h + c2 h^2.
struct Jet {
  Complex c0, c1, c2;
};

Jet operator+(const Jet& a, const Jet& b) { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
Jet operator-(const Jet& a, const Jet& b) { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }
Jet operator*(const Jet& a, const Jet& b) {
  return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
}
Jet operator/(const Jet& a, const Jet& b) {
  const Complex q0 = a.c0 / b.c0;
  const Complex q1 = (a.c1 - q0 * b.c1) / b.c0;
  const Complex q2 = (a.c2 - q0 * b.c2 - q1 * b.c1) / b.c0;
  return {q0, q1, q2};
}
Jet constant(Complex c) { return {c, 0.0, 0.0}; }

// Square root whose constant term is the given root w0 of a.c0.
Jet sqrt_through(const Jet& a, Complex w0) {
  const Complex s1 = a.c1 / (2.0 * w0);
  const Complex s2 = (a.c2 - s1 * s1) / (2.0 * w0);
  return {w0, s1, s2};
}

}  // namespace

PsiJet psi_jet(Complex z, Complex w) {
  if (z == 0.0) throw Error(ErrorCode::PoleAtZero, "z = 0 is a pole of L and M");
  if (w == 0.0) throw Error(ErrorCode::InvalidArgument, "branch point of the square root");
  const Jet Z{z, 1.0, 0.0};
  const Jet one = constant(1.0);
  const Jet R = (Z + one) * (one + Z * (constant(3.0) + Z * (constant(-5.0) + Z)));
  const Jet W = sqrt_through(R, w);
  const Jet sq = (Z - one) * (Z - one);
  const Jet pre = (Z + one) / (constant(4.0) * Z);
  const Jet L = constant(-1.0) * pre * (sq + W);
  const Jet M = pre * (sq - W);
  if (M.c0 == 0.0) throw Error(ErrorCode::PoleOfPsi, "M(z) = 0");
  const Jet P = L * L / M;
  return {P.c0, P.c1, 2.0 * P.c2};
}

Complex continue_root(Complex z, Complex w_ref) {
  const Complex w = std::sqrt(radicand(z));
  return std::abs(w - w_ref) <= std::abs(w + w_ref) ? w : -w;
}

PsiJet psi_jet_fd(Complex z, Complex w, double h2) {
  auto value = [&](Complex zz) {
    const ParamPair lm = lm_from_root(zz, continue_root(zz, w));
    return lm.L * lm.L / lm.M;
  };
  const double h = 1e-6 * (1.0 + std::abs(z));
  const double k = h2 * (1.0 + std::abs(z));
  const Complex f0 = value(z);
  return {f0, (value(z + h) - value(z - h)) / (2.0 * h), (value(z + k) - 2.0 * f0 + value(z - k)) / (k * k)};
}

namespace {

bool inside(const ScanRegion& r, Complex z) {
  return z.real() >= r.lo.real() && z.real() <= r.hi.real() && z.imag() >= r.lo.imag() && z.imag() <= r.hi.imag();
}

bool near_excluded(Complex z) {
  if (std::abs(z) < 1e-6) return true;
  return std::abs(radicand(z)) < 1e-10;
}

}  // namespace

CriticalPoint refine_critical_point(Complex z, Complex w, const ScanOptions& opts) {
  for (int it = 0; it < opts.max_iter; ++it) {
    if (near_excluded(z)) throw Error(ErrorCode::NoConvergence, "iterate reached an excluded point");
    const PsiJet j = psi_jet(z, w);
    const double tol = opts.newton_tol * (1.0 + std::abs(j.value));
    if (std::abs(j.d1) <= tol) {
      CriticalPoint cp;
      cp.z = z;
      cp.w = w;
      cp.lm = lm_from_root(z, w);
      cp.psi = j.value;
      cp.d1_abs = std::abs(j.d1);
      cp.d2_abs = std::abs(j.d2);
      cp.order = cp.d2_abs < opts.order_tol ? 2 : 1;
      return cp;
    }
    if (j.d2 == 0.0) break;
    Complex step = j.d1 / j.d2;
    const double cap = 0.25 * (1.0 + std::abs(z));
    if (std::abs(step) > cap) step *= cap / std::abs(step);
    // Continue w along the step in small pieces so the sheet is not lost.
    const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(step) / 0.02)));
    for (int k = 1; k <= pieces; ++k) {
      const Complex zk = z - step * (static_cast<double>(k) / pieces);
      w = continue_root(zk, w);
    }
    z -= step;
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
  }
  throw Error(ErrorCode::NoConvergence, "Newton iteration on dPsi/dz did not converge");
}

ScanResult psi_ramification_scan(const ScanRegion& region, const ScanOptions& opts) {
  if (region.nx < 1 || region.ny < 1 || !(region.lo.real() < region.hi.real()) ||
      region.lo.imag() > region.hi.imag())
    throw Error(ErrorCode::InvalidArgument, "empty scan region");
  ScanResult out;
  auto same = [](const CriticalPoint& a, const CriticalPoint& b) {
    return std::abs(a.z - b.z) < 1e-7 * (1.0 + std::abs(a.z)) && std::abs(a.w - b.w) < 1e-6 * (1.0 + std::abs(a.w));
  };
  for (int ix = 0; ix < region.nx; ++ix) {
    for (int iy = 0; iy < region.ny; ++iy) {
      const double tx = region.nx == 1 ? 0.5 : static_cast<double>(ix) / (region.nx - 1);
      const double ty = region.ny == 1 ? 0.5 : static_cast<double>(iy) / (region.ny - 1);
      const Complex z0(region.lo.real() + tx * (region.hi.real() - region.lo.real()),
                       region.lo.imag() + ty * (region.hi.imag() - region.lo.imag()));
      if (near_excluded(z0)) continue;
      for (int sheet : {1, -1}) {
        try {
          const CriticalPoint cp = refine_critical_point(z0, sheet_root({z0, sheet}), opts);
          if (!inside(region, cp.z)) continue;
          if (std::none_of(out.points.begin(), out.points.end(), [&](const CriticalPoint& q) { return same(q, cp); }))
            out.points.push_back(cp);
        } catch (const Error&) {
          ++out.dropped;
        }
      }
    }
  }
  return out;
}

FlatPointLimits psi_limits_at_flat_point(double M) {
  if (!(M > 0.0)) throw Error(ErrorCode::InvalidArgument, "M must be positive");
  const double L = solve_L_given_M(M, Branch::plus);
  const auto c = cubic_in_L(M);
  const double qL = (3.0 * c[0] * L + 2.0 * c[1]) * L + c[2];
  // Partial derivative of the coefficients with respect to M.
  const double d3 = 2.0 * (M - 1.0) * (M + 1.0) + (M - 1.0) * (M - 1.0);
  const double d2 = (1.0 + M) * (1.0 + M) + 2.0 * M * (1.0 + M);
  const double d1 = -2.0 * M * (1.0 + M) - M * M;
  const double d0 = -3.0 * M * M;
  const double qM = ((d3 * L + d2) * L + d1) * L + d0;
  const double dL = -qM / qL;
  return {L * L / M, 2.0 * L * dL / M - L * L / (M * M)};
}

}  // namespace edm

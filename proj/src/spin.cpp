#include "edm/spin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "edm/error.hpp"

namespace edm {

namespace {

void require_nonflat(const RicciData& r) {
  if (r.S == 0.0) throw Error(ErrorCode::ScalarFlat, "scalar curvature vanishes");
}

}  // namespace

WKNumber wk_number(const ModuliParams& p) {
  const RicciData r = ricci_from_params(p);
  require_nonflat(r);
  const double denom = r.S * r.S - 2.0 * r.ric_norm_sq;
  const double radicand = denom == 0.0 ? -1.0 : r.S / denom;
  if (!(radicand > 0.0)) throw Error(ErrorCode::NoRealWK, "S / (S^2 - 2|Ric|^2) is not positive");
  if (p.M == -p.K) throw Error(ErrorCode::SignUndefined, "M = -K leaves the orientation sign undefined");
  const int sign = -p.K < p.M ? 1 : -1;
  return {sign * r.S / (2.0 * std::numbers::sqrt2) * std::sqrt(radicand), sign};
}

double Theorem1Residuals::r2_max() const { return std::max({r2.x1, r2.x2, r2.x3}); }
double Theorem1Residuals::r3_max() const { return std::max({r3[0], r3[1], r3[2]}); }

Theorem1Residuals theorem1_residuals(const ModuliParams& p, double lambda) {
  const RicciData r = ricci_from_params(p);
  require_nonflat(r);
  const double S = r.S;
  const double l2 = lambda * lambda;
  const SymTensor3 ric = r.tensor();
  const Mat3 t = t_endomorphism(p);
  const auto dric = nabla_ricci(p);

  Theorem1Residuals out;
  out.r1 = 8.0 * l2 * (S * S - 2.0 * r.ric_norm_sq) - S * S * S;

  for (int a = 0; a < 3; ++a) {
    const Vec3 x = Vec3::basis(a);
    const Vec3 rx = ric.apply(x);
    const Vec3 res = 8.0 * l2 * (S * rx - 2.0 * ric.apply(rx)) - 4.0 * lambda * S * t.apply(x) - S * S * rx;
    out.r2[a] = res.norm();
  }

  // Condition 3 with X = e_x, Y = e_y; the right-hand side is read as
  // 2 S^2 sum_{i<j} (Ric_{j y} delta_{i x} + Ric_{i x} delta_{j y}) e_i x e_j.
  const std::array<std::array<int, 2>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [ix, iy] = pairs[k];
    const Vec3 x = Vec3::basis(ix);
    const Vec3 y = Vec3::basis(iy);
    const Vec3 lhs = 8.0 * l2 * cross(2.0 * ric.apply(x) - S * x, 2.0 * ric.apply(y) - S * y) +
                     8.0 * lambda * S * (dric[ix].apply(y) - dric[iy].apply(x)) + S * S * S * cross(x, y);
    Vec3 rhs;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const double coeff = (i == ix ? ric(j, iy) : 0.0) + (j == iy ? ric(i, ix) : 0.0);
        rhs = rhs + coeff * cross(Vec3::basis(i), Vec3::basis(j));
      }
    out.r3[k] = (lhs - 2.0 * S * S * rhs).norm();
  }
  return out;
}

SpinorConnection spinor_connection(const ModuliParams& p, double lambda) {
  const RicciData r = ricci_from_params(p);
  // The potential term carries a factor lambda; S is only needed when it is present.
  if (lambda != 0.0) require_nonflat(r);
  const CliffordRep& cl = clifford_basis();
  SpinorConnection conn;
  for (int a = 0; a < 3; ++a) {
    Mat2C m;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) m += Complex(0.5 * connection_form(p, a, i, j)) * (cl.e[i] * cl.e[j]);
    if (lambda != 0.0) m -= Complex(lambda * (2.0 * r.eigenvalue(a) / r.S - 1.0)) * cl.e[a];
    conn.a[a] = m;
  }
  return conn;
}

CurvatureReport curvature_omega(const ModuliParams& p, double lambda, double tol) {
  const SpinorConnection conn = spinor_connection(p, lambda);
  const StructureConstants sc = structure_constants(p);
  auto omega = [&](int a, int b) {
    Mat2C o = commutator(conn.a[a], conn.a[b]);
    for (int c = 0; c < 3; ++c) o -= Complex(sc.coefficient(a, b, c)) * conn.a[c];
    return o;
  };
  CurvatureReport rep;
  rep.omega12 = omega(0, 1);
  rep.omega13 = omega(0, 2);
  rep.omega23 = omega(1, 2);
  rep.max_norm = std::max({rep.omega12.norm(), rep.omega13.norm(), rep.omega23.norm()});
  rep.tolerance = tol * (1.0 + p.norm_sq() + lambda * lambda);
  rep.flat = rep.max_norm < rep.tolerance;
  return rep;
}

SymTensor3 energy_momentum(const std::array<Spinor, 3>& nabla_psi, const Spinor& psi) {
  const CliffordRep& cl = clifford_basis();
  SymTensor3 t;
  for (int a = 0; a < 3; ++a)
    for (int b = a; b < 3; ++b) {
      const Complex v = inner(cl.e[a] * nabla_psi[b], psi) + inner(cl.e[b] * nabla_psi[a], psi);
      t.set(a, b, v.real());
    }
  return t;
}

EinsteinCheck verify_einstein_from_wk(const ModuliParams& p, double lambda, const Spinor& psi0) {
  if (lambda == 0.0) throw Error(ErrorCode::ZeroLambda, "WK-number must be nonzero");
  if (!psi0.finite() || psi0.norm_sq() == 0.0)
    throw Error(ErrorCode::InvalidArgument, "test spinor must be finite and nonzero");
  const RicciData r = ricci_from_params(p);
  require_nonflat(r);
  const CliffordRep& cl = clifford_basis();

  const double scale = std::sqrt(std::abs(r.S) / (std::abs(lambda) * psi0.norm_sq()));
  const Spinor psi = Complex(scale) * psi0;

  // nabla_X psi = (2 lambda / S) Ric(X) . psi - lambda X . psi
  std::array<Spinor, 3> dpsi;
  for (int a = 0; a < 3; ++a) {
    const Vec3 x = Vec3::basis(a);
    const Vec3 rx = r.tensor().apply(x);
    dpsi[a] = Complex(2.0 * lambda / r.S) * (cl.multiply(rx) * psi) - Complex(lambda) * (cl.multiply(x) * psi);
  }
  const SymTensor3 t = energy_momentum(dpsi, psi);

  EinsteinCheck best{std::numeric_limits<double>::infinity(), 0};
  for (int sign : {1, -1}) {
    double sq = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const double g = i == j ? 1.0 : 0.0;
        const double d = (i == j ? r.eigenvalue(i) : 0.0) - 0.5 * r.S * g - 0.25 * sign * t(i, j);
        sq += d * d;
      }
    if (std::sqrt(sq) < best.residual) best = {std::sqrt(sq), sign};
  }
  return best;
}

double HomothetyInvariant::relative_gap() const {
  return std::abs(direct - closed_form) / std::max(std::abs(closed_form), std::numeric_limits<double>::min());
}

HomothetyInvariant homothety_invariant(const ModuliParams& p, double lambda) {
  const RicciData r = ricci_from_params(p);
  require_nonflat(r);
  const double vol = volume(p);
  HomothetyInvariant h;
  h.direct = lambda * lambda * std::cbrt(vol * vol);
  const double two_pi_sq = 2.0 * std::numbers::pi * std::numbers::pi;
  const double prod = std::abs(p.K - p.L) * std::abs(p.M - p.L) * std::abs(p.K + p.M);
  h.closed_form = std::cbrt(two_pi_sq * two_pi_sq) / 8.0 * r.S * r.S * r.S /
                  (r.S * r.S - 2.0 * r.ric_norm_sq) / std::cbrt(prod * prod);
  return h;
}

}  // namespace edm

#include "edm/space.hpp"

#include <cmath>
#include <numbers>

#include "edm/error.hpp"

namespace edm {

bool ModuliParams::finite() const { return std::isfinite(K) && std::isfinite(L) && std::isfinite(M); }

void require_finite(const ModuliParams& p) {
  if (!p.finite()) throw Error(ErrorCode::NonFinite, "structure parameters must be finite");
}

RicciData ricci_from_params(const ModuliParams& p) {
  require_finite(p);
  RicciData r;
  r.A = -2.0 * p.K * p.L;
  r.B = 2.0 * p.K * p.M;
  r.C = -2.0 * p.L * p.M;
  r.S = r.A + r.B + r.C;
  r.ric_norm_sq = r.A * r.A + r.B * r.B + r.C * r.C;
  return r;
}

StructureConstants structure_constants(const ModuliParams& p) {
  require_finite(p);
  // d s1 = (L-K) s2^s3, d s2 = (M+K) s1^s3, d s3 = (L-M) s1^s2.
  return {p.K - p.L, -(p.M + p.K), p.M - p.L};
}

double StructureConstants::coefficient(int a, int b, int c) const {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  if (a == 1 && b == 2 && c == 0) return sign * c1_23;
  if (a == 0 && b == 2 && c == 1) return sign * c2_13;
  if (a == 0 && b == 1 && c == 2) return sign * c3_12;
  return 0.0;
}

Vec3 StructureConstants::bracket(int a, int b) const {
  return {coefficient(a, b, 0), coefficient(a, b, 1), coefficient(a, b, 2)};
}

double connection_form(const ModuliParams& p, int a, int i, int j) {
  if (i == j) return 0.0;
  if (i > j) return -connection_form(p, a, j, i);
  // w12 = K s3, w13 = L s2, w23 = M s1
  if (i == 0 && j == 1) return a == 2 ? p.K : 0.0;
  if (i == 0 && j == 2) return a == 1 ? p.L : 0.0;
  return a == 0 ? p.M : 0.0;
}

std::array<SymTensor3, 3> nabla_ricci(const ModuliParams& p) {
  const RicciData ric = ricci_from_params(p);
  std::array<SymTensor3, 3> slices;
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        slices[a].set(i, j, (ric.eigenvalue(i) - ric.eigenvalue(j)) * connection_form(p, a, i, j));
  return slices;
}

Mat3 t_endomorphism(const ModuliParams& p) {
  const auto slices = nabla_ricci(p);
  Mat3 t;
  for (int x = 0; x < 3; ++x) {
    Vec3 col;
    for (int i = 0; i < 3; ++i) col = col + cross(Vec3::basis(i), slices[i].apply(Vec3::basis(x)));
    for (int r = 0; r < 3; ++r) t(r, x) = col[r];
  }
  return t;
}

namespace {

struct MetricFactors {
  double kl, ml, km;
};

MetricFactors metric_factors(const ModuliParams& p) {
  require_finite(p);
  const MetricFactors f{std::abs(p.K - p.L), std::abs(p.M - p.L), std::abs(p.K + p.M)};
  if (f.kl == 0.0 || f.ml == 0.0 || f.km == 0.0)
    throw Error(ErrorCode::DegenerateMetric, "one of |K-L|, |M-L|, |K+M| vanishes");
  return f;
}

}  // namespace

SymTensor3 metric_matrix(const ModuliParams& p) {
  const MetricFactors f = metric_factors(p);
  return SymTensor3::diagonal(1.0 / (f.ml * f.km), 1.0 / (f.kl * f.ml), 1.0 / (f.kl * f.km));
}

double volume(const ModuliParams& p) {
  const MetricFactors f = metric_factors(p);
  return 2.0 * std::numbers::pi * std::numbers::pi / (f.kl * f.ml * f.km);
}

SymTensor3 ricci_oracle_via_curvature(const ModuliParams& p) {
  const StructureConstants sc = structure_constants(p);

  // Christoffel symbols G[a][j][k] = <nabla_{e_a} e_j, e_k> from
  // 2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
  double G[3][3][3];
  for (int a = 0; a < 3; ++a)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        G[a][j][k] = 0.5 * (sc.coefficient(a, j, k) - sc.coefficient(j, k, a) + sc.coefficient(k, a, j));

  auto nabla = [&](int a, const Vec3& v) {
    Vec3 out;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[k] += v[j] * G[a][j][k];
    return out;
  };

  // Ric(Y, Z) = sum_a <R(e_a, Y) Z, e_a>,  R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
  SymTensor3 ric;
  for (int y = 0; y < 3; ++y) {
    for (int z = y; z < 3; ++z) {
      const Vec3 ez = Vec3::basis(z);
      double s = 0.0;
      for (int a = 0; a < 3; ++a) {
        Vec3 r = nabla(a, nabla(y, ez)) - nabla(y, nabla(a, ez));
        for (int k = 0; k < 3; ++k) r = r - sc.coefficient(a, y, k) * nabla(k, ez);
        s += r[a];
      }
      ric.set(y, z, s);
    }
  }
  return ric;
}

std::array<double, 3> structure_equation_residuals(const ModuliParams& p) {
  const RicciData r = ricci_from_params(p);
  const StructureConstants sc = structure_constants(p);
  // d s^k(e_a, e_b) = -<[e_a, e_b], e_k>; w_ij = coefficient * s^c.
  const double ds3_12 = -sc.coefficient(0, 1, 2);
  const double ds2_13 = -sc.coefficient(0, 2, 1);
  const double ds1_23 = -sc.coefficient(1, 2, 0);
  auto w = [&](int i, int j, int a) { return connection_form(p, a, i, j); };
  auto wedge = [&](int i1, int j1, int i2, int j2, int a, int b) {
    return w(i1, j1, a) * w(i2, j2, b) - w(i1, j1, b) * w(i2, j2, a);
  };
  // d w12 = w13 ^ w32 + (C-A-B)/2 s1^s2, evaluated on (e1, e2).
  const double r12 = p.K * ds3_12 - (wedge(0, 2, 2, 1, 0, 1) + 0.5 * (r.C - r.A - r.B));
  // d w13 = w12 ^ w23 + (B-A-C)/2 s1^s3, on (e1, e3).
  const double r13 = p.L * ds2_13 - (wedge(0, 1, 1, 2, 0, 2) + 0.5 * (r.B - r.A - r.C));
  // d w23 = w21 ^ w13 + (A-B-C)/2 s2^s3, on (e2, e3).
  const double r23 = p.M * ds1_23 - (wedge(1, 0, 0, 2, 1, 2) + 0.5 * (r.A - r.B - r.C));
  return {r12, r13, r23};
}

}  // namespace edm

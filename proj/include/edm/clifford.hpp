#pragma once

// Small fixed-size linear algebra for three-dimensional spin geometry:
// frame vectors, symmetric and general 3x3 tensors, complex 2x2 matrices and
// the Clifford representation acting on two-component spinors.

#include <array>
#include <cmath>
#include <complex>

namespace edm {

using Complex = std::complex<double>;

struct Vec3 {
  double x1 = 0.0;
  double x2 = 0.0;
  double x3 = 0.0;

  [[nodiscard]] static constexpr Vec3 basis(int i) {
    return {i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0, i == 2 ? 1.0 : 0.0};
  }

  [[nodiscard]] constexpr double operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
  [[nodiscard]] constexpr double& operator[](int i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }

  [[nodiscard]] bool finite() const { return std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3); }
  [[nodiscard]] double norm() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

  friend constexpr Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
  friend constexpr Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
  friend constexpr Vec3 operator*(double s, const Vec3& a) { return {s * a.x1, s * a.x2, s * a.x3}; }
  friend constexpr bool operator==(const Vec3&, const Vec3&) = default;
};

[[nodiscard]] constexpr double dot(const Vec3& a, const Vec3& b) { return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3; }

/// Right-handed cross product in the orthonormal frame: e1 x e2 = e3 cyclically.
[[nodiscard]] constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}

/// General 3x3 real matrix, row-major. Column j is the image of e_j.
class Mat3 {
 public:
  constexpr Mat3() = default;

  [[nodiscard]] static constexpr Mat3 diagonal(double a, double b, double c) {
    Mat3 m;
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = c;
    return m;
  }

  [[nodiscard]] constexpr double operator()(int r, int c) const { return m_[3 * r + c]; }
  [[nodiscard]] constexpr double& operator()(int r, int c) { return m_[3 * r + c]; }

  [[nodiscard]] Vec3 apply(const Vec3& v) const;
  [[nodiscard]] Vec3 column(int j) const { return {m_[j], m_[3 + j], m_[6 + j]}; }
  [[nodiscard]] double max_abs() const;
  [[nodiscard]] double max_off_diagonal() const;

  friend Mat3 operator*(const Mat3& a, const Mat3& b);
  friend Mat3 operator-(const Mat3& a, const Mat3& b);

 private:
  std::array<double, 9> m_{};
};

/// Symmetric 3x3 tensor; the six independent entries are stored once.
class SymTensor3 {
 public:
  constexpr SymTensor3() = default;

  [[nodiscard]] static constexpr SymTensor3 diagonal(double a, double b, double c) {
    SymTensor3 t;
    t.e_[0] = a;
    t.e_[1] = b;
    t.e_[2] = c;
    return t;
  }
  [[nodiscard]] static constexpr SymTensor3 identity() { return diagonal(1.0, 1.0, 1.0); }

  [[nodiscard]] constexpr double operator()(int i, int j) const { return e_[index(i, j)]; }
  constexpr void set(int i, int j, double v) { e_[index(i, j)] = v; }

  [[nodiscard]] Vec3 apply(const Vec3& v) const;
  [[nodiscard]] Mat3 to_matrix() const;
  [[nodiscard]] double max_abs() const;
  [[nodiscard]] double trace() const { return e_[0] + e_[1] + e_[2]; }

 private:
  // xx, yy, zz, xy, xz, yz
  [[nodiscard]] static constexpr int index(int i, int j) {
    if (i == j) return i;
    const int lo = i < j ? i : j;
    const int hi = i < j ? j : i;
    return lo == 0 ? (hi == 1 ? 3 : 4) : 5;
  }
  std::array<double, 6> e_{};
};

struct Spinor {
  Complex s1{};
  Complex s2{};

  [[nodiscard]] double norm_sq() const { return std::norm(s1) + std::norm(s2); }
  [[nodiscard]] bool finite() const;

  friend Spinor operator+(const Spinor& a, const Spinor& b) { return {a.s1 + b.s1, a.s2 + b.s2}; }
  friend Spinor operator-(const Spinor& a, const Spinor& b) { return {a.s1 - b.s1, a.s2 - b.s2}; }
  friend Spinor operator*(Complex c, const Spinor& a) { return {c * a.s1, c * a.s2}; }
};

/// Hermitian product, linear in the first slot and antilinear in the second.
[[nodiscard]] Complex inner(const Spinor& a, const Spinor& b);

/// Complex 2x2 matrix, row-major.
class Mat2C {
 public:
  constexpr Mat2C() = default;
  constexpr Mat2C(Complex a, Complex b, Complex c, Complex d) : m_{a, b, c, d} {}

  [[nodiscard]] static constexpr Mat2C identity() { return {1.0, 0.0, 0.0, 1.0}; }

  [[nodiscard]] constexpr Complex operator()(int r, int c) const { return m_[2 * r + c]; }
  [[nodiscard]] constexpr Complex& operator()(int r, int c) { return m_[2 * r + c]; }

  /// Frobenius norm.
  [[nodiscard]] double norm() const;
  [[nodiscard]] double max_abs() const;
  [[nodiscard]] bool finite() const;

  Mat2C& operator+=(const Mat2C& o);
  Mat2C& operator-=(const Mat2C& o);

  friend Mat2C operator+(Mat2C a, const Mat2C& b) { return a += b; }
  friend Mat2C operator-(Mat2C a, const Mat2C& b) { return a -= b; }
  friend Mat2C operator*(const Mat2C& a, const Mat2C& b);
  friend Mat2C operator*(Complex s, const Mat2C& a);
  friend Spinor operator*(const Mat2C& a, const Spinor& v);

 private:
  std::array<Complex, 4> m_{};
};

[[nodiscard]] Mat2C commutator(const Mat2C& a, const Mat2C& b);

/// Clifford multiplication by the frame vectors e1, e2, e3 on two-component
/// spinors. E_i E_j + E_j E_i = -2 delta_ij, E1 E2 E3 = +Id.
struct CliffordRep {
  std::array<Mat2C, 3> e;

  /// Clifford multiplication by x1 e1 + x2 e2 + x3 e3.
  [[nodiscard]] Mat2C multiply(const Vec3& x) const;
};

[[nodiscard]] const CliffordRep& clifford_basis();

/// Quaternionic structure J(a, b) = (-conj b, conj a): antilinear, J^2 = -Id,
/// commutes with Clifford multiplication by real vectors.
[[nodiscard]] Spinor quaternionic_map(const Spinor& psi);

/// Size of the defect J(A psi) - A J(psi). The defect is antilinear in psi, so
/// evaluating it on the standard basis detects any failure to commute.
[[nodiscard]] double j_commutator_norm(const Mat2C& a);

}  // namespace edm

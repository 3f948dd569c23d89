#include "edm/clifford.hpp"

#include <algorithm>

namespace edm {

Vec3 Mat3::apply(const Vec3& v) const {
  Vec3 out;
  for (int r = 0; r < 3; ++r) out[r] = (*this)(r, 0) * v.x1 + (*this)(r, 1) * v.x2 + (*this)(r, 2) * v.x3;
  return out;
}

double Mat3::max_abs() const {
  double m = 0.0;
  for (double x : m_) m = std::max(m, std::abs(x));
  return m;
}

double Mat3::max_off_diagonal() const {
  double m = 0.0;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      if (r != c) m = std::max(m, std::abs((*this)(r, c)));
  return m;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a(r, k) * b(k, c);
      out(r, c) = s;
    }
  return out;
}

Mat3 operator-(const Mat3& a, const Mat3& b) {
  Mat3 out;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

Vec3 SymTensor3::apply(const Vec3& v) const {
  Vec3 out;
  for (int r = 0; r < 3; ++r) out[r] = (*this)(r, 0) * v.x1 + (*this)(r, 1) * v.x2 + (*this)(r, 2) * v.x3;
  return out;
}

Mat3 SymTensor3::to_matrix() const {
  Mat3 m;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = (*this)(r, c);
  return m;
}

double SymTensor3::max_abs() const {
  double m = 0.0;
  for (double x : e_) m = std::max(m, std::abs(x));
  return m;
}

bool Spinor::finite() const {
  return std::isfinite(s1.real()) && std::isfinite(s1.imag()) && std::isfinite(s2.real()) &&
         std::isfinite(s2.imag());
}

Complex inner(const Spinor& a, const Spinor& b) { return a.s1 * std::conj(b.s1) + a.s2 * std::conj(b.s2); }

double Mat2C::norm() const {
  double s = 0.0;
  for (const Complex& x : m_) s += std::norm(x);
  return std::sqrt(s);
}

double Mat2C::max_abs() const {
  double m = 0.0;
  for (const Complex& x : m_) m = std::max(m, std::abs(x));
  return m;
}

bool Mat2C::finite() const {
  return std::all_of(m_.begin(), m_.end(),
                     [](const Complex& x) { return std::isfinite(x.real()) && std::isfinite(x.imag()); });
}

Mat2C& Mat2C::operator+=(const Mat2C& o) {
  for (std::size_t i = 0; i < 4; ++i) m_[i] += o.m_[i];
  return *this;
}

Mat2C& Mat2C::operator-=(const Mat2C& o) {
  for (std::size_t i = 0; i < 4; ++i) m_[i] -= o.m_[i];
  return *this;
}

Mat2C operator*(const Mat2C& a, const Mat2C& b) {
  return {a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
          a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1)};
}

Mat2C operator*(Complex s, const Mat2C& a) { return {s * a(0, 0), s * a(0, 1), s * a(1, 0), s * a(1, 1)}; }

Spinor operator*(const Mat2C& a, const Spinor& v) {
  return {a(0, 0) * v.s1 + a(0, 1) * v.s2, a(1, 0) * v.s1 + a(1, 1) * v.s2};
}

Mat2C commutator(const Mat2C& a, const Mat2C& b) { return a * b - b * a; }

Mat2C CliffordRep::multiply(const Vec3& x) const {
  return Complex(x.x1) * e[0] + Complex(x.x2) * e[1] + Complex(x.x3) * e[2];
}

const CliffordRep& clifford_basis() {
  // i times the Pauli matrices.
  static const CliffordRep rep{{
      Mat2C{0.0, Complex(0, 1), Complex(0, 1), 0.0},
      Mat2C{0.0, 1.0, -1.0, 0.0},
      Mat2C{Complex(0, 1), 0.0, 0.0, Complex(0, -1)},
  }};
  return rep;
}

Spinor quaternionic_map(const Spinor& psi) { return {-std::conj(psi.s2), std::conj(psi.s1)}; }

double j_commutator_norm(const Mat2C& a) {
  double worst = 0.0;
  for (const Spinor& b : {Spinor{1.0, 0.0}, Spinor{0.0, 1.0}}) {
    const Spinor d = quaternionic_map(a * b) - a * quaternionic_map(b);
    worst = std::max(worst, std::sqrt(d.norm_sq()));
  }
  return worst;
}

}  // namespace edm

#pragma once

#include "srgft/errors.hpp"
#include "srgft/rational.hpp"

#include <cmath>
#include <ostream>

namespace srgft {

/// w + x i + y j + z k over exact rationals or doubles.
template <Scalar T>
struct Quaternion {
  using value_type = T;

  T w{0};
  T x{0};
  T y{0};
  T z{0};

  Quaternion() = default;
  Quaternion(T w_) : w(std::move(w_)) {}  // NOLINT(google-explicit-constructor)
  Quaternion(T w_, T x_, T y_, T z_)
      : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

  static Quaternion i() { return {T(0), T(1), T(0), T(0)}; }
  static Quaternion j() { return {T(0), T(0), T(1), T(0)}; }
  static Quaternion k() { return {T(0), T(0), T(0), T(1)}; }

  const T& real() const { return w; }
  Quaternion imag() const { return {T(0), x, y, z}; }
  Quaternion conj() const { return {w, T(-x), T(-y), T(-z)}; }

  T norm2() const {
    T n = w * w;
    n += x * x;
    n += y * y;
    n += z * z;
    return n;
  }
  T imag_norm2() const {
    T n = x * x;
    n += y * y;
    n += z * z;
    return n;
  }

  bool is_zero() const { return srgft::is_zero(w) && is_real(); }
  bool is_real() const { return srgft::is_zero(x) && srgft::is_zero(y) && srgft::is_zero(z); }

  Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  Quaternion& operator*=(const T& s) {
    w *= s;
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }
  Quaternion& operator/=(const T& s) {
    if (srgft::is_zero(s)) throw DomainError("division by a zero scalar");
    w /= s;
    x /= s;
    y /= s;
    z /= s;
    return *this;
  }

  friend Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend Quaternion operator-(const Quaternion& a) { return {T(-a.w), T(-a.x), T(-a.y), T(-a.z)}; }
  friend Quaternion operator*(Quaternion a, const T& s) { return a *= s; }
  friend Quaternion operator*(const T& s, Quaternion a) { return a *= s; }
  friend Quaternion operator/(Quaternion a, const T& s) { return a /= s; }

  /// Hamilton product.
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {T(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z),
            T(a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y),
            T(a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x),
            T(a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w)};
  }

  friend bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

using QuaternionD = Quaternion<double>;
using QuaternionQ = Quaternion<Rational>;

template <Scalar T>
Quaternion<T> mul(const Quaternion<T>& p, const Quaternion<T>& q) {
  return p * q;
}

template <Scalar T>
Quaternion<T> inverse(const Quaternion<T>& q) {
  const T n = q.norm2();
  if (is_zero(n)) throw DomainError("inverse of the zero quaternion");
  return q.conj() / n;
}

inline double abs(const QuaternionD& q) { return std::sqrt(q.norm2()); }
inline double abs(const QuaternionQ& q) { return std::sqrt(q.norm2().get_d()); }

template <Scalar To, Scalar From>
Quaternion<To> quaternion_cast(const Quaternion<From>& q) {
  return {scalar_cast<To>(q.w), scalar_cast<To>(q.x), scalar_cast<To>(q.y), scalar_cast<To>(q.z)};
}

/// q^n for any integer n (negative powers need q != 0).
template <Scalar T>
Quaternion<T> power(const Quaternion<T>& q, int n) {
  Quaternion<T> base = n < 0 ? inverse(q) : q;
  unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
  Quaternion<T> result(T(1));
  while (e != 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

/// Scalar product of the imaginary parts, -Re(IJ) for units.
template <Scalar T>
T imag_dot(const Quaternion<T>& a, const Quaternion<T>& b) {
  T d = a.x * b.x;
  d += a.y * b.y;
  d += a.z * b.z;
  return d;
}

/// Unit purely imaginary quaternion I (I^2 = -1), the index of the slice C_I.
template <Scalar T>
class ImaginaryUnit {
public:
  /// Canonical unit i.
  ImaginaryUnit() : q_(Quaternion<T>::i()) {}

  /// Validates x^2 + y^2 + z^2 = 1 (exactly for rationals, to 1e-12 for doubles).
  ImaginaryUnit(T x, T y, T z) : q_(T(0), std::move(x), std::move(y), std::move(z)) {
    const T n = q_.imag_norm2();
    if constexpr (is_exact_v<T>) {
      if (n != 1) throw DomainError("imaginary unit must have unit modulus");
    } else {
      if (!(std::fabs(n - 1.0) <= 1e-12)) throw DomainError("imaginary unit must have unit modulus");
    }
  }

  static ImaginaryUnit i() { return {}; }
  static ImaginaryUnit j() { return {T(0), T(1), T(0)}; }
  static ImaginaryUnit k() { return {T(0), T(0), T(1)}; }

  /// Direction of a nonzero vector; exact only when its modulus is rational.
  static ImaginaryUnit along(const Quaternion<T>& v) {
    const T n2 = v.imag_norm2();
    if (is_zero(n2)) throw DomainError("direction of a zero imaginary part");
    const T n = scalar_sqrt(n2);
    return {T(v.x / n), T(v.y / n), T(v.z / n)};
  }

  const Quaternion<T>& quaternion() const { return q_; }
  const T& x() const { return q_.x; }
  const T& y() const { return q_.y; }
  const T& z() const { return q_.z; }

  friend bool operator==(const ImaginaryUnit& a, const ImaginaryUnit& b) { return a.q_ == b.q_; }

private:
  Quaternion<T> q_;
};

/// q = x + y I with y = |Im q| >= 0.
template <Scalar T>
struct SliceCoordinates {
  T x;
  T y;
  ImaginaryUnit<T> unit;
};

/// Splits q along its slice. Real q gets the canonical unit i. For rationals
/// the modulus of Im q must itself be rational.
template <Scalar T>
SliceCoordinates<T> decompose(const Quaternion<T>& q) {
  if (q.is_real()) return {q.w, T(0), ImaginaryUnit<T>::i()};
  const T y = scalar_sqrt(q.imag_norm2());
  return {q.w, y, ImaginaryUnit<T>(T(q.x / y), T(q.y / y), T(q.z / y))};
}

template <Scalar T>
Quaternion<T> recompose(const SliceCoordinates<T>& c) {
  return Quaternion<T>(c.x) + c.unit.quaternion() * c.y;
}

template <Scalar T>
std::ostream& operator<<(std::ostream& os, const Quaternion<T>& q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

}  // namespace srgft

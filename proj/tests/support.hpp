#pragma once

#include "srgft/classes.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace test {

using namespace srgft;

// Product from the basis table e_a e_b = s e_c, independent of Quaternion's
// own formula.
template <class T>
Quaternion<T> table_product(const Quaternion<T>& p, const Quaternion<T>& q) {
  static constexpr int index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  const T a[4] = {p.w, p.x, p.y, p.z};
  const T b[4] = {q.w, q.x, q.y, q.z};
  T c[4] = {T(0), T(0), T(0), T(0)};
  for (int r = 0; r < 4; ++r) {
    for (int s = 0; s < 4; ++s) c[index[r][s]] += T(sign[r][s]) * a[r] * b[s];
  }
  return {c[0], c[1], c[2], c[3]};
}

// Small random rationals p/q with |p| <= 8, 1 <= q <= 6.
class Gen {
public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  Rational rational() {
    std::uniform_int_distribution<int> num(-8, 8);
    std::uniform_int_distribution<int> den(1, 6);
    return make_rational(num(engine_), den(engine_));
  }
  QuaternionQ quaternion() { return {rational(), rational(), rational(), rational()}; }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  QuaternionD point(double max_radius) {
    QuaternionD v(real(-1, 1), real(-1, 1), real(-1, 1), real(-1, 1));
    return v * (real(0.0, max_radius) / abs(v));
  }
  SeriesQ series(int degree, int valuation = 0) {
    std::vector<QuaternionQ> c;
    for (int n = valuation; n <= degree; ++n) c.push_back(quaternion());
    if (c.front().is_zero()) c.front() = QuaternionQ(Rational(1));
    return SeriesQ::from_coefficients(std::move(c), degree - valuation).shifted(valuation);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

private:
  std::mt19937_64 engine_;
};

// sum_n q^n a_n by explicit powers.
template <class T>
Quaternion<T> power_sum(const SliceSeries<T>& f, const Quaternion<T>& q) {
  Quaternion<T> out;
  for (int n = f.valuation(); n <= f.degree(); ++n) out += power(q, n) * f.coeff(n);
  return out;
}

// Regular product evaluated pointwise: (f * g)(q) = f(q) g(f(q)^{-1} q f(q)).
inline QuaternionD star_value(const QuaternionD& fq, const SliceFunction& g, const QuaternionD& q) {
  if (abs(fq) == 0.0) return QuaternionD();
  return fq * g.value(inverse(fq) * q * fq);
}

inline double distance(const QuaternionD& a, const QuaternionD& b) { return abs(a - b); }

}  // namespace test

#include "srgft/random.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace srgft {

double Rng::uniform() { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53; }

std::int64_t Rng::integer(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1U;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r = 0;
  do {
    r = engine_();
  } while (r >= limit);
  return lo + static_cast<std::int64_t>(r % span);
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

ImaginaryUnit<double> Rng::imaginary_unit() {
  for (;;) {
    const double x = gaussian();
    const double y = gaussian();
    const double z = gaussian();
    const double n = std::sqrt(x * x + y * y + z * z);
    if (n > 1e-6) return {x / n, y / n, z / n};
  }
}

QuaternionD Rng::unit_quaternion() {
  for (;;) {
    QuaternionD q{gaussian(), gaussian(), gaussian(), gaussian()};
    const double n = abs(q);
    if (n > 1e-6) return q / n;
  }
}

namespace {

// Inverse stereographic projection from the pole (0, ..., 0, 1): the image of
// a rational point is rational and lies exactly on the unit sphere.
template <std::size_t N>
std::array<Rational, N + 1> lift(const std::array<Rational, N>& s) {
  Rational n2 = 0;
  for (const auto& v : s) n2 += v * v;
  const Rational den = n2 + 1;
  std::array<Rational, N + 1> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = 2 * s[i] / den;
  out[N] = (n2 - 1) / den;
  return out;
}

}  // namespace

ImaginaryUnit<Rational> Rng::rational_imaginary_unit(std::int64_t denominator) {
  for (;;) {
    const auto u = imaginary_unit();
    if (u.z() > 0.99) continue;  // keep the projection bounded
    const std::array<Rational, 2> s{rationalize(u.x() / (1.0 - u.z()), denominator),
                                   rationalize(u.y() / (1.0 - u.z()), denominator)};
    const auto p = lift(s);
    return {p[0], p[1], p[2]};
  }
}

QuaternionQ Rng::rational_unit_quaternion(std::int64_t denominator) {
  for (;;) {
    const auto u = unit_quaternion();
    if (u.z > 0.99) continue;
    const double d = 1.0 - u.z;
    const std::array<Rational, 3> s{rationalize(u.w / d, denominator), rationalize(u.x / d, denominator),
                                   rationalize(u.y / d, denominator)};
    const auto p = lift(s);
    return {p[0], p[1], p[2], p[3]};
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  auto splitmix = [](std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31U);
  };
  return splitmix(splitmix(seed ^ h) + index);
}

}  // namespace srgft

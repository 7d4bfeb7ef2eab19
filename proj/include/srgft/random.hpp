#pragma once

#include "srgft/quaternion.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace srgft {

/// Seedable generator whose streams are identical on every platform: the
/// engine is mt19937_64 (fully specified by the standard) and all
/// distributions are implemented here rather than taken from <random>.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// Standard normal via Box-Muller.
  double gaussian();

  /// Uniform point of the unit 2-sphere of imaginary units (normalized
  /// Gaussian triple).
  ImaginaryUnit<double> imaginary_unit();
  /// Uniform point of the unit 3-sphere of quaternions.
  QuaternionD unit_quaternion();

  /// Exact rational point of the 2-sphere near imaginary_unit(): the float
  /// point is stereographically projected, rounded to the given denominator
  /// and mapped back, which keeps it exactly on the sphere.
  ImaginaryUnit<Rational> rational_imaginary_unit(std::int64_t denominator = 1000);
  /// Exact rational point of the 3-sphere, same construction.
  QuaternionQ rational_unit_quaternion(std::int64_t denominator = 1000);

private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Platform independent seed derivation (splitmix64 over an FNV-1a tag hash).
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

}  // namespace srgft

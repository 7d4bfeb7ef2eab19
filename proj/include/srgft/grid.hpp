#pragma once

#include "srgft/quaternion.hpp"

#include <vector>

namespace srgft {

struct GridPoint {
  std::size_t index;      // position in the lexicographic (radius, direction) order
  std::size_t radius;     // index into radii()
  std::size_t direction;  // index into directions()
  QuaternionD q;
};

/// Deterministic finite subset of the open unit ball: every point is
/// r (cos t + I sin t) for a radius r, a unit I and an angle t. Directions
/// repeated across units (t = 0 and t = pi are real) are kept once.
class SamplingGrid {
public:
  SamplingGrid(std::vector<double> radii, std::vector<ImaginaryUnit<double>> units, std::vector<double> angles);

  /// Radii {0.1, ..., 0.9, 0.95, 0.99}, units i, j, k plus `unit_count - 3`
  /// Fibonacci sphere units, `angle_count` equally spaced angles.
  static SamplingGrid standard(int unit_count = 9, int angle_count = 24);
  static SamplingGrid with(std::vector<double> radii, int unit_count, int angle_count);
  static std::vector<double> default_radii();
  static std::vector<ImaginaryUnit<double>> default_units(int count);

  const std::vector<double>& radii() const { return radii_; }
  const std::vector<ImaginaryUnit<double>>& units() const { return units_; }
  const std::vector<double>& angles() const { return angles_; }
  const std::vector<QuaternionD>& directions() const { return directions_; }
  const std::vector<GridPoint>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double max_radius() const { return radii_.back(); }

private:
  std::vector<double> radii_;
  std::vector<ImaginaryUnit<double>> units_;
  std::vector<double> angles_;
  std::vector<QuaternionD> directions_;
  std::vector<GridPoint> points_;
};

}  // namespace srgft

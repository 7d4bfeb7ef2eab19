#include "srgft/grid.hpp"

#include "srgft/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace srgft {

namespace {

bool same_direction(const QuaternionD& a, const QuaternionD& b) { return (a - b).norm2() < 1e-24; }

}  // namespace

SamplingGrid::SamplingGrid(std::vector<double> radii, std::vector<ImaginaryUnit<double>> units,
                           std::vector<double> angles)
    : radii_(std::move(radii)), units_(std::move(units)), angles_(std::move(angles)) {
  if (radii_.empty() || units_.empty() || angles_.empty()) throw PreconditionError("sampling grid must be nonempty");
  for (std::size_t n = 0; n < radii_.size(); ++n) {
    if (!(radii_[n] > 0.0 && radii_[n] < 1.0)) throw PreconditionError("grid radii must lie in (0, 1)");
    if (n > 0 && !(radii_[n] > radii_[n - 1])) throw PreconditionError("grid radii must be strictly increasing");
  }
  for (double t : angles_) {
    if (!(t >= 0.0 && t < 2.0 * std::numbers::pi)) throw PreconditionError("grid angles must lie in [0, 2 pi)");
  }
  for (const auto& unit : units_) {
    for (double t : angles_) {
      QuaternionD d = QuaternionD(std::cos(t)) + unit.quaternion() * std::sin(t);
      if (std::abs(std::sin(t)) < 1e-15) d = QuaternionD(std::cos(t) > 0 ? 1.0 : -1.0);
      const bool seen = std::any_of(directions_.begin(), directions_.end(),
                                    [&](const QuaternionD& e) { return same_direction(e, d); });
      if (!seen) directions_.push_back(d);
    }
  }
  for (std::size_t r = 0; r < radii_.size(); ++r) {
    for (std::size_t d = 0; d < directions_.size(); ++d) {
      points_.push_back({points_.size(), r, d, directions_[d] * radii_[r]});
    }
  }
}

std::vector<double> SamplingGrid::default_radii() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.99};
}

std::vector<ImaginaryUnit<double>> SamplingGrid::default_units(int count) {
  if (count < 1) throw PreconditionError("grid needs at least one unit");
  std::vector<ImaginaryUnit<double>> units{ImaginaryUnit<double>::i(), ImaginaryUnit<double>::j(),
                                          ImaginaryUnit<double>::k()};
  units.resize(std::min<std::size_t>(units.size(), static_cast<std::size_t>(count)), ImaginaryUnit<double>::i());
  const int extra = count - static_cast<int>(units.size());
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int n = 0; n < extra; ++n) {
    const double z = 1.0 - 2.0 * (n + 0.5) / extra;
    const double rho = std::sqrt(1.0 - z * z);
    const double t = golden * n;
    units.push_back(ImaginaryUnit<double>(rho * std::cos(t), rho * std::sin(t), z));
  }
  return units;
}

SamplingGrid SamplingGrid::with(std::vector<double> radii, int unit_count, int angle_count) {
  if (angle_count < 1) throw PreconditionError("grid needs at least one angle");
  std::vector<double> angles;
  for (int n = 0; n < angle_count; ++n) angles.push_back(2.0 * std::numbers::pi * n / angle_count);
  return {std::move(radii), default_units(unit_count), std::move(angles)};
}

SamplingGrid SamplingGrid::standard(int unit_count, int angle_count) {
  return with(default_radii(), unit_count, angle_count);
}

}  // namespace srgft

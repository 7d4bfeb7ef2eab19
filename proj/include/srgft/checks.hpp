#pragma once

#include "srgft/classes.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace srgft {

struct Witness {
  std::string assertion;
  std::optional<QuaternionD> q;
  std::optional<int> n;
  std::optional<QuaternionD> lambda;
  double lhs = 0.0;
  double rhs = 0.0;
};

enum class Status { Passed, Failed, Inconclusive };

std::string_view status_name(Status s);

struct CheckReport {
  std::string check;
  std::string function;
  bool passed = true;
  Status status = Status::Passed;
  double worst_margin = 0.0;
  long samples = 0;
  std::optional<int> valid_degree;
  int equalities = 0;
  long skipped = 0;
  std::vector<Witness> witnesses;
  /// Exact quantities, formatted as literals.
  std::vector<std::pair<std::string, std::string>> values;
};

struct CheckConfig {
  int degree = 48;
  double tolerance = 1e-9;
  double equality_band = 1e-9;
  Mode mode = Mode::Exact;
  SamplingGrid grid = SamplingGrid::standard();
};

/// Points where an extremal function attains the upper and the lower bound
/// of a check, as unit directions scaled by every grid radius and by 1/2.
struct Extremal {
  QuaternionD upper;
  QuaternionD lower;
};

CheckReport check_bieberbach(const SliceFunction& f, const CheckConfig& config, bool extremal = false);
CheckReport check_convex_coefficients(const SliceFunction& f, const CheckConfig& config, bool extremal = false);
/// |a_3 - lambda a_2^2| <= max{1, |4 lambda - 3|} with lambda acting on the
/// left. With `extremal`, equality |3 - 4 lambda| is required for real
/// lambda with |4 lambda - 3| >= 1.
CheckReport check_fekete_szego(const SliceFunction& f, const std::vector<QuaternionQ>& lambdas,
                               const CheckConfig& config, bool extremal = false);
CheckReport check_sharper_caratheodory(const SliceFunction& p, const CheckConfig& config, bool extremal = false);
CheckReport check_caratheodory_bounds(const SliceFunction& p, const CheckConfig& config,
                                      std::optional<Extremal> extremal = {});
CheckReport check_growth_distortion(const SliceFunction& f, const CheckConfig& config,
                                    std::optional<Extremal> extremal = {});

enum class OrderVariant { Growth, Distortion };
/// Gap form q + sum_{n > m} q^n a_n is required (PreconditionError).
CheckReport check_growth_order_m(const SliceFunction& f, int m, OrderVariant variant, const CheckConfig& config,
                                 std::optional<Extremal> extremal = {});
/// a_0 = ... = a_{m-1} = 0 is required (PreconditionError).
CheckReport check_schwarz(const SliceFunction& f, int m, const CheckConfig& config, bool extremal = false);
CheckReport check_schwarz_pick_coefficient(const SliceFunction& f, const CheckConfig& config, bool extremal = false);
/// Exact computation with a = i/2 and q0 = j/2.
CheckReport check_schwarz_pick_counterexample();
CheckReport check_rogosinski(const SliceFunction& f, const std::vector<QuaternionD>& points, const CheckConfig& config,
                             bool boundary = false);
CheckReport check_bohr(const SliceFunction& f, const CheckConfig& config);
CheckReport check_monotone_modulus(const SliceFunction& f, double alpha, const CheckConfig& config);
CheckReport check_hayman(const SliceFunction& f, const CheckConfig& config, bool extremal = false);
/// With `koebe_slit` the function must be q (1 - q)^{-*2}; the slice images
/// are checked to avoid the slit (-inf, -1/4].
CheckReport check_koebe_quarter(const SliceFunction& f, const CheckConfig& config, bool koebe_slit = false);
CheckReport check_convex_covering_examples(const CheckConfig& config);
CheckReport check_subordination_growth(const SliceFunction& f, const SliceFunction& w, const CheckConfig& config);
/// Both functions must have rational closed forms.
CheckReport check_quotient_equivalences(const SliceFunction& f, const SliceFunction& g, const CheckConfig& config);

inline constexpr double kMonotoneSlackClosedForm = 1e-12;
inline constexpr double kMonotoneSlackSampled = 1e-6;
inline constexpr double kQuotientSingularThreshold = 1e-8;
inline constexpr double kKoebeSlitDelta = 1e-3;

}  // namespace srgft

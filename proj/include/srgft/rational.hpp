#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace srgft {

/// Arbitrary precision fraction, always kept in lowest terms with a positive
/// denominator.
using Rational = mpq_class;

template <typename T>
concept Scalar = std::same_as<T, Rational> || std::same_as<T, double>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1);

/// Nearest fraction with the given denominator (ties away from zero).
Rational rationalize(double value, std::int64_t denominator);

/// Exact square root when the argument is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }
inline double to_double(double value) { return value; }

inline bool is_zero(const Rational& value) { return sgn(value) == 0; }
inline bool is_zero(double value) { return value == 0.0; }

inline int sign_of(const Rational& value) { return sgn(value); }
inline int sign_of(double value) { return (value > 0.0) - (value < 0.0); }

/// Square root in the scalar's own field. Throws DomainError for negative
/// input, and for rationals that are not perfect squares.
double scalar_sqrt(double value);
Rational scalar_sqrt(const Rational& value);

/// Scalar conversion used when moving an exact computation to the float
/// evaluation path.
template <Scalar To>
To scalar_cast(const Rational& value) {
  if constexpr (is_exact_v<To>) {
    return value;
  } else {
    return value.get_d();
  }
}

template <Scalar To>
To scalar_cast(double value) {
  if constexpr (is_exact_v<To>) {
    return Rational(value);
  } else {
    return value;
  }
}

/// "p/q" (or "p" for integers).
std::string format_scalar(const Rational& value);
/// Shortest decimal representation that round-trips.
std::string format_scalar(double value);

/// Decimal ("0.25", "-1e-3") or fraction ("-3/4") literal, converted exactly.
Rational parse_rational(std::string_view text);
double parse_double(std::string_view text);

}  // namespace srgft

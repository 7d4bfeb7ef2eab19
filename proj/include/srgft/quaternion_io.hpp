#pragma once

#include "srgft/quaternion.hpp"

#include <string>
#include <string_view>
#include <variant>

namespace srgft {

// Literal grammar: terms [+-] c [i|j|k], c a decimal or p/q fraction. The
// coefficient may be omitted in front of a unit ("-k"), components may come
// in any order but each unit at most once.

/// Parses into the requested scalar field; decimals become exact rationals in
/// exact mode.
template <Scalar T>
Quaternion<T> parse_quaternion(std::string_view text);

/// Exact when every coefficient is an integer or fraction, float as soon as a
/// decimal point or exponent appears.
using AnyQuaternion = std::variant<QuaternionQ, QuaternionD>;
AnyQuaternion parse_quaternion_auto(std::string_view text);

std::string format_quaternion(const QuaternionQ& q);
std::string format_quaternion(const QuaternionD& q);

extern template QuaternionQ parse_quaternion<Rational>(std::string_view);
extern template QuaternionD parse_quaternion<double>(std::string_view);

}  // namespace srgft

#pragma once

#include "srgft/checks.hpp"

#include "json.hpp"
#include <variant>

namespace srgft {

using Json = nlohmann::ordered_json;

/// [w, x, y, z]: rationals as "p/q" strings, floats as numbers.
Json to_json(const QuaternionQ& q);
Json to_json(const QuaternionD& q);
/// Accepts strings (decimal or p/q) and numbers. Floats are rejected in
/// exact mode.
template <Scalar T>
Quaternion<T> quaternion_from_json(const Json& j);

Json to_json(const SeriesQ& f);
Json to_json(const SeriesD& f);
using AnySeries = std::variant<SeriesQ, SeriesD>;
AnySeries series_from_json(const Json& j);

Json to_json(const ClassVerdict& v);
Json to_json(const CheckReport& r);
Json to_json(const std::vector<CheckReport>& reports);

extern template QuaternionQ quaternion_from_json<Rational>(const Json&);
extern template QuaternionD quaternion_from_json<double>(const Json&);

}  // namespace srgft

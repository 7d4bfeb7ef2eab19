#include "srgft/json_io.hpp"

#include "srgft/quaternion_io.hpp"

namespace srgft {

namespace {

template <Scalar T>
T scalar_from_json(const Json& j) {
  if (j.is_string()) {
    const std::string text = j.get<std::string>();
    if constexpr (is_exact_v<T>) {
      return parse_rational(text);
    } else {
      if (text.find('/') != std::string::npos) return to_double(parse_rational(text));
      return parse_double(text);
    }
  }
  if (j.is_number_integer()) return T(j.get<long>());
  if (j.is_number_float()) {
    if constexpr (is_exact_v<T>) {
      throw ParseError("floating point number in exact data", 0);
    } else {
      return j.get<double>();
    }
  }
  throw ParseError("expected a scalar", 0);
}

Json scalar_json(const Rational& v) { return format_scalar(v); }

template <Scalar T>
Json series_json(const SliceSeries<T>& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coefficients()) coeffs.push_back(to_json(c));
  return Json{{"valuation", f.valuation()},
              {"degree", f.degree()},
              {"mode", is_exact_v<T> ? "exact" : "float"},
              {"coeffs", std::move(coeffs)}};
}

template <Scalar T>
SliceSeries<T> series_from(const Json& j) {
  const int v = j.at("valuation").get<int>();
  const int n = j.at("degree").get<int>();
  std::vector<Quaternion<T>> c;
  for (const auto& e : j.at("coeffs")) c.push_back(quaternion_from_json<T>(e));
  if (static_cast<int>(c.size()) != n - v + 1) throw ParseError("coefficient count does not match degree", 0);
  return SliceSeries<T>::from_coefficients(std::move(c), n - v).shifted(v);
}

}  // namespace

template <Scalar T>
Quaternion<T> quaternion_from_json(const Json& j) {
  if (j.is_string()) return parse_quaternion<T>(j.get<std::string>());
  if (!j.is_array() || j.size() != 4) throw ParseError("expected a quaternion [w, x, y, z]", 0);
  return {scalar_from_json<T>(j[0]), scalar_from_json<T>(j[1]), scalar_from_json<T>(j[2]), scalar_from_json<T>(j[3])};
}

template QuaternionQ quaternion_from_json<Rational>(const Json&);
template QuaternionD quaternion_from_json<double>(const Json&);

Json to_json(const QuaternionQ& q) {
  return Json::array({scalar_json(q.w), scalar_json(q.x), scalar_json(q.y), scalar_json(q.z)});
}

Json to_json(const QuaternionD& q) { return Json::array({q.w, q.x, q.y, q.z}); }

Json to_json(const SeriesQ& f) { return series_json(f); }
Json to_json(const SeriesD& f) { return series_json(f); }

AnySeries series_from_json(const Json& j) {
  const std::string mode = j.value("mode", "exact");
  if (mode == "exact") return series_from<Rational>(j);
  if (mode == "float") return series_from<double>(j);
  throw ParseError("unknown series mode '" + mode + "'", 0);
}

Json to_json(const ClassVerdict& v) {
  Json witness = nullptr;
  if (v.witness || v.witness_index) {
    witness = Json::object();
    if (v.witness) witness["q"] = to_json(*v.witness);
    if (v.witness_index) witness["n"] = *v.witness_index;
  }
  Json out{{"class", v.class_name},
           {"member", v.member},
           {"certificate", std::string(certificate_name(v.certificate))},
           {"margin", v.margin},
           {"witness", witness}};
  if (v.unit) out["unit"] = to_json(*v.unit);
  return out;
}

Json to_json(const CheckReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json entry = Json::object();
    entry["assertion"] = w.assertion;
    if (w.q) entry["q"] = to_json(*w.q);
    if (w.n) entry["n"] = *w.n;
    if (w.lambda) entry["lambda"] = to_json(*w.lambda);
    entry["lhs"] = w.lhs;
    entry["rhs"] = w.rhs;
    witnesses.push_back(std::move(entry));
  }
  Json out{{"check", r.check},
           {"function", r.function},
           {"passed", r.passed},
           {"status", std::string(status_name(r.status))},
           {"worst_margin", r.worst_margin},
           {"samples", r.samples},
           {"valid_degree", r.valid_degree ? Json(*r.valid_degree) : Json(nullptr)},
           {"equalities", r.equalities},
           {"skipped", r.skipped},
           {"witnesses", std::move(witnesses)}};
  if (!r.values.empty()) {
    Json values = Json::object();
    for (const auto& [k, v] : r.values) values[k] = v;
    out["values"] = std::move(values);
  }
  return out;
}

Json to_json(const std::vector<CheckReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

}  // namespace srgft

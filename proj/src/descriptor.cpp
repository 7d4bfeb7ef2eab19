#include "srgft/descriptor.hpp"

#include "srgft/quaternion_io.hpp"

namespace srgft {

namespace {

template <Scalar T>
SliceRational<T> rational_closed_form(const Json& d) {
  const std::string kind = d.at("kind").get<std::string>();
  if (kind == "koebe") return koebe_rational(quaternion_from_json<T>(d.at("u")));
  if (kind == "mobius") {
    auto f = mobius_rational(quaternion_from_json<T>(d.at("a")));
    if (d.contains("u")) {
      const auto u = quaternion_from_json<T>(d.at("u"));
      require_unit(u);
      f = f.right_mul(u);
    }
    return f;
  }
  if (kind == "caratheodory") {
    std::vector<T> weights;
    std::vector<Quaternion<T>> units;
    for (const auto& w : d.at("weights")) weights.push_back(quaternion_from_json<T>(Json::array({w, 0, 0, 0})).w);
    for (const auto& u : d.at("units")) units.push_back(quaternion_from_json<T>(u));
    return caratheodory_combination(weights, units);
  }
  if (kind == "rogosinski") return rogosinski_rational(quaternion_from_json<T>(d.at("b")), quaternion_from_json<T>(d.at("p")));
  if (kind == "convex-extremal") return convex_extremal_rational<T>();
  if (kind == "odd-starlike") return odd_starlike_rational<T>();
  if (kind == "identity") return SliceRational<T>(SlicePolynomial<T>::identity());
  if (kind == "polynomial") {
    std::vector<Quaternion<T>> c;
    for (const auto& a : d.at("coeffs")) c.push_back(quaternion_from_json<T>(a));
    return SliceRational<T>(SlicePolynomial<T>(std::move(c)));
  }
  throw PreconditionError("unknown closed form kind '" + kind + "'");
}

std::string literal(const Json& q) {
  if (q.is_string()) return q.get<std::string>();
  try {
    return format_quaternion(quaternion_from_json<Rational>(q));
  } catch (const ParseError&) {
    return format_quaternion(quaternion_from_json<double>(q));
  }
}

}  // namespace

SliceFunction function_from_descriptor(const Json& d, Mode mode) {
  const std::string kind = d.at("kind").get<std::string>();
  const std::string id = describe(d);
  if (kind == "bloch") return bloch_function().renamed(id);
  if (kind == "class-c") {
    const SliceFunction h = function_from_descriptor(d.at("h"), mode);
    const SliceFunction p = function_from_descriptor(d.at("p"), mode);
    return class_c_function(h, p, id, SamplingGrid::standard());
  }
  if (mode == Mode::Exact) {
    try {
      return SliceFunction::from_rational(id, rational_closed_form<Rational>(d));
    } catch (const ParseError&) {
      // floating point parameters
    } catch (const DomainError&) {
      // e.g. irrational |b|; the floating build below rechecks the domain
    }
  }
  return SliceFunction::from_rational(id, rational_closed_form<double>(d));
}

std::string describe(const Json& d) {
  const std::string kind = d.at("kind").get<std::string>();
  std::string args;
  auto add = [&](const std::string& name, const std::string& value) {
    if (!args.empty()) args += ",";
    args += name + "=" + value;
  };
  if (kind == "class-c") {
    add("h", describe(d.at("h")));
    add("p", describe(d.at("p")));
  } else if (kind == "polynomial") {
    add("degree", std::to_string(static_cast<int>(d.at("coeffs").size()) - 1));
  } else if (kind == "caratheodory") {
    add("k", std::to_string(d.at("units").size()));
  } else {
    for (const char* key : {"u", "a", "b", "p"}) {
      if (d.contains(key)) add(key, literal(d.at(key)));
    }
  }
  return args.empty() ? kind : kind + "(" + args + ")";
}

}  // namespace srgft

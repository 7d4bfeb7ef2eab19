#include "srgft/quaternion_io.hpp"

#include <array>
#include <cctype>
#include <vector>

namespace srgft {

namespace {

struct Term {
  std::string coefficient;  // with sign, empty magnitude means 1
  std::size_t position;     // offset of the coefficient in the literal
  int component;            // 0 = real, 1..3 = i, j, k
};

std::vector<Term> tokenize(std::string_view text) {
  std::string compact;
  std::vector<std::size_t> origin;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
    compact += text[i];
    origin.push_back(i);
  }
  if (compact.empty()) throw ParseError("empty quaternion literal", 0);
  auto at = [&](std::size_t p) { return p < origin.size() ? origin[p] : text.size(); };

  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < compact.size()) {
    const std::size_t start = pos;
    std::string coefficient;
    if (compact[pos] == '+' || compact[pos] == '-') {
      coefficient += compact[pos++];
    } else if (!terms.empty()) {
      throw ParseError("expected '+' or '-' between terms", at(pos));
    }
    while (pos < compact.size()) {
      const char c = compact[pos];
      if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '/') {
        coefficient += c;
        ++pos;
      } else if (c == 'e' || c == 'E') {
        coefficient += c;
        ++pos;
        if (pos < compact.size() && (compact[pos] == '+' || compact[pos] == '-')) coefficient += compact[pos++];
      } else {
        break;
      }
    }
    int component = 0;
    if (pos < compact.size() && (compact[pos] == 'i' || compact[pos] == 'j' || compact[pos] == 'k')) {
      component = 1 + (compact[pos] - 'i');
      ++pos;
    }
    const bool has_magnitude = coefficient.find_first_not_of("+-") != std::string::npos;
    if (!has_magnitude && component == 0) {
      throw ParseError("expected a coefficient or unit", at(pos));
    }
    if (pos < compact.size() && compact[pos] != '+' && compact[pos] != '-') {
      throw ParseError(std::string("unexpected character '") + compact[pos] + "'", at(pos));
    }
    for (const Term& t : terms) {
      if (t.component == component) throw ParseError("repeated component", at(start));
    }
    terms.push_back({coefficient, at(start), component});
  }
  return terms;
}

template <Scalar T>
T coefficient_value(const Term& term) {
  std::string_view c = term.coefficient;
  const bool negative = !c.empty() && c.front() == '-';
  if (!c.empty() && (c.front() == '+' || c.front() == '-')) c.remove_prefix(1);
  T value(1);
  if (!c.empty()) {
    try {
      if constexpr (is_exact_v<T>) {
        value = parse_rational(c);
      } else {
        value = parse_double(c);
      }
    } catch (const ParseError& e) {
      throw ParseError("malformed coefficient", term.position + e.position() + (negative ? 1 : 0));
    }
  }
  return negative ? T(-value) : value;
}

bool has_float_syntax(std::string_view text) {
  return text.find_first_of(".eE") != std::string_view::npos;
}

template <Scalar T>
std::string format_impl(const Quaternion<T>& q) {
  const std::array<const T*, 4> parts{&q.w, &q.x, &q.y, &q.z};
  static constexpr std::array<const char*, 4> suffix{"", "i", "j", "k"};
  std::string out;
  for (std::size_t c = 0; c < 4; ++c) {
    const T& v = *parts[c];
    if (is_zero(v)) continue;
    const bool negative = sign_of(v) < 0;
    const T magnitude = negative ? T(-v) : v;
    std::string body;
    if (c != 0 && magnitude == T(1)) {
      body = suffix[c];
    } else {
      body = format_scalar(magnitude) + suffix[c];
    }
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    out += body;
  }
  return out.empty() ? std::string("0") : out;
}

}  // namespace

template <Scalar T>
Quaternion<T> parse_quaternion(std::string_view text) {
  Quaternion<T> q;
  for (const Term& term : tokenize(text)) {
    T v = coefficient_value<T>(term);
    switch (term.component) {
      case 0: q.w = v; break;
      case 1: q.x = v; break;
      case 2: q.y = v; break;
      default: q.z = v; break;
    }
  }
  return q;
}

template QuaternionQ parse_quaternion<Rational>(std::string_view);
template QuaternionD parse_quaternion<double>(std::string_view);

AnyQuaternion parse_quaternion_auto(std::string_view text) {
  if (has_float_syntax(text)) return parse_quaternion<double>(text);
  return parse_quaternion<Rational>(text);
}

std::string format_quaternion(const QuaternionQ& q) { return format_impl(q); }
std::string format_quaternion(const QuaternionD& q) { return format_impl(q); }

}  // namespace srgft

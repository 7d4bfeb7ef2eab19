#include "srgft/rational.hpp"

#include "srgft/errors.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace srgft {

Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  Rational r(mpz_class(std::to_string(numerator), 10), mpz_class(std::to_string(denominator), 10));
  r.canonicalize();
  return r;
}

Rational rationalize(double value, std::int64_t denominator) {
  if (!std::isfinite(value)) throw DomainError("cannot rationalize a non-finite value");
  return make_rational(static_cast<std::int64_t>(std::llround(value * static_cast<double>(denominator))),
                       denominator);
}

std::optional<Rational> exact_sqrt(const Rational& value) {
  if (sgn(value) < 0) return std::nullopt;
  mpz_class num = value.get_num();
  mpz_class den = value.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

double scalar_sqrt(double value) {
  if (value < 0.0) throw DomainError("square root of a negative scalar");
  return std::sqrt(value);
}

Rational scalar_sqrt(const Rational& value) {
  auto root = exact_sqrt(value);
  if (!root) {
    throw DomainError("square root of " + value.get_str() + " is not rational");
  }
  return *root;
}

std::string format_scalar(const Rational& value) { return value.get_str(); }

std::string format_scalar(double value) {
  if (value == 0.0) return "0";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw DomainError("cannot format scalar");
  return std::string(buf, ptr);
}

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Decimal literal [sign] digits [. digits] [e [sign] digits] -> exact rational.
Rational parse_decimal(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  std::string digits;
  long exponent = 0;
  bool any = false;
  while (pos < text.size() && is_digit(text[pos])) {
    digits += text[pos++];
    any = true;
  }
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    while (pos < text.size() && is_digit(text[pos])) {
      digits += text[pos++];
      --exponent;
      any = true;
    }
  }
  if (!any) throw ParseError("expected digits", pos);
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    const std::size_t start = pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    if (pos >= text.size() || !is_digit(text[pos])) throw ParseError("malformed exponent", pos);
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    long e = 0;
    auto sv = text.substr(start, pos - start);
    if (!sv.empty() && sv.front() == '+') sv.remove_prefix(1);
    auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), e);
    if (ec != std::errc() || p != sv.data() + sv.size()) throw ParseError("malformed exponent", start);
    exponent += e;
  }
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  if (exponent > 4096 || exponent < -4096) throw ParseError("exponent out of range", pos);
  mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return parse_decimal(text);
  Rational num = parse_decimal(text.substr(0, slash));
  Rational den;
  try {
    den = parse_decimal(text.substr(slash + 1));
  } catch (const ParseError& e) {
    throw ParseError("malformed denominator", slash + 1 + e.position());
  }
  if (sgn(den) == 0) throw ParseError("zero denominator", slash + 1);
  Rational r = num / den;
  return r;
}

double parse_double(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) return parse_rational(text).get_d();
  // Validate through the exact grammar, then convert with correct rounding.
  (void)parse_decimal(text);
  double value = 0.0;
  auto sv = text;
  if (!sv.empty() && sv.front() == '+') sv.remove_prefix(1);
  auto [p, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
  if (ec != std::errc() || p != sv.data() + sv.size() || !std::isfinite(value)) {
    throw ParseError("scalar out of range", 0);
  }
  return value;
}

}  // namespace srgft

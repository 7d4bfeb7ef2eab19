#include "srgft/classes.hpp"

#include <cmath>
#include <limits>

namespace srgft {

std::string_view certificate_name(Certificate c) {
  switch (c) {
    case Certificate::AnalyticSufficient: return "analytic-sufficient";
    case Certificate::Sampled: return "sampled";
    case Certificate::Refuted: return "refuted";
  }
  return "sampled";
}

SliceFunction bloch_function() {
  return SliceFunction::slice_preserving(
      "bloch", [](std::complex<double> z) { return std::atanh(z); },
      [](std::complex<double> z) { return 1.0 / (1.0 - z * z); },
      [](int n) { return n % 2 == 1 ? Rational(1, n) : Rational(0); });
}

SliceFunction identity_function() {
  return SliceFunction::from_rational("identity", SliceRational<Rational>(SlicePolynomial<Rational>::identity()));
}

namespace {

constexpr double kZeroGuard = 1e-8;

// Normalization from the low coefficients: exact where possible.
bool coefficient_equals(const SliceFunction& f, int n, int expected) {
  if (auto s = f.exact_series(n)) return s->coeff(n) == QuaternionQ(Rational(expected));
  const QuaternionD c = f.series(n).coeff(n);
  return abs(c - QuaternionD(static_cast<double>(expected))) <= 1e-12;
}

struct Minimum {
  double value = std::numeric_limits<double>::infinity();
  std::optional<QuaternionD> at;

  void offer(double v, const QuaternionD& q) {
    if (v < value) {
      value = v;
      at = q;
    }
  }
};

ClassVerdict verdict(std::string name, const Minimum& m, double threshold) {
  ClassVerdict v;
  v.class_name = std::move(name);
  v.margin = m.value - threshold;
  v.member = v.margin > 0.0;
  v.certificate = v.member ? Certificate::Sampled : Certificate::Refuted;
  v.witness = m.at;
  return v;
}

ClassVerdict refuted(std::string name, std::optional<QuaternionD> at, double margin) {
  ClassVerdict v;
  v.class_name = std::move(name);
  v.member = false;
  v.certificate = Certificate::Refuted;
  v.margin = margin;
  v.witness = at;
  return v;
}

// sum (n - alpha)|a_n| <= 1 - alpha for an exactly known polynomial. The
// moduli are bounded above by rational square root enclosures.
bool small_coefficient_certificate(const SliceFunction& f, double alpha) {
  const auto* r = f.exact_rational();
  if (r == nullptr || !r->is_polynomial()) return false;
  const auto& p = r->numerator();
  if (p.coeff(0) != QuaternionQ() || p.coeff(1) != QuaternionQ(Rational(1))) return false;
  const Rational a = rationalize(alpha, 1 << 20);
  if (a != Rational(alpha)) return false;
  Rational total = 0;
  for (int n = 2; n <= p.degree(); ++n) {
    const Rational n2 = p.coeff(n).norm2();
    if (sgn(n2) == 0) continue;
    Rational modulus;
    if (auto s = exact_sqrt(n2)) {
      modulus = *s;
    } else {
      // Upper bound: a rational x with x^2 >= |a_n|^2.
      modulus = rationalize(std::sqrt(n2.get_d()) * (1 + 1e-12), 1LL << 40);
      while (modulus * modulus < n2) modulus *= Rational(1000001, 1000000);
    }
    total += (n - a) * modulus;
  }
  return total <= 1 - a;
}

}  // namespace

ClassVerdict is_caratheodory(const SliceFunction& p, const SamplingGrid& grid) {
  if (!coefficient_equals(p, 0, 1)) return refuted("P", QuaternionD(), -1.0);
  Minimum m;
  for (const auto& point : grid.points()) m.offer(p.value(point.q).w, point.q);
  return verdict("P", m, 0.0);
}

ClassVerdict is_sstar(const SliceFunction& f, const SamplingGrid& grid, double alpha) {
  if (!(alpha < 1.0)) throw DomainError("S*(alpha) is empty for alpha >= 1");
  const std::string name = alpha == 0.0 ? "S*" : "S*(" + format_scalar(alpha) + ")";
  if (!coefficient_equals(f, 0, 0) || !coefficient_equals(f, 1, 1)) return refuted(name, QuaternionD(), -1.0);
  Minimum m;
  for (const auto& point : grid.points()) {
    const QuaternionD v = f.value(point.q);
    if (abs(v) < kZeroGuard) return refuted(name, point.q, -std::numeric_limits<double>::infinity());
    m.offer((inverse(v) * point.q * f.derivative(point.q)).w, point.q);
  }
  ClassVerdict out = verdict(name, m, alpha);
  if (out.member && small_coefficient_certificate(f, alpha)) out.certificate = Certificate::AnalyticSufficient;
  return out;
}

ClassVerdict is_class_c(const SliceFunction& f, const SliceFunction& h, const SamplingGrid& grid) {
  if (!is_sstar(h, grid).member) throw PreconditionError("comparison function is not in S*");
  Minimum m;
  for (const auto& point : grid.points()) {
    m.offer((inverse(h.value(point.q)) * point.q * f.derivative(point.q)).w, point.q);
  }
  return verdict("C", m, 0.0);
}

SeriesQ generate_small_coeff_sstar(std::uint64_t seed, int degree, const Rational& alpha, int gap) {
  if (degree < 2) throw PreconditionError("generator needs degree >= 2");
  if (gap < 1 || gap >= degree) throw PreconditionError("gap must lie in [1, degree)");
  if (!(alpha < 1)) throw DomainError("S*(alpha) is empty for alpha >= 1");
  Rng rng(seed);
  const Rational budget = rng.integer(0, 3) == 0 ? Rational(1) : rationalize(rng.uniform(0.5, 1.0), 1000);
  std::vector<Rational> weight(static_cast<std::size_t>(degree + 1));
  Rational total = 0;
  for (int n = gap + 1; n <= degree; ++n) {
    if (rng.uniform() < 0.3) continue;
    const double u = rng.uniform();
    weight[static_cast<std::size_t>(n)] = rationalize(u * u * u, 1000);
    total += (n - alpha) * weight[static_cast<std::size_t>(n)];
  }
  if (sgn(total) == 0) {
    weight[static_cast<std::size_t>(gap + 1)] = 1;
    total = gap + 1 - alpha;
  }
  const Rational scale = budget * (1 - alpha) / total;
  std::vector<QuaternionQ> c(static_cast<std::size_t>(degree + 1));
  c[1] = QuaternionQ(Rational(1));
  for (int n = gap + 1; n <= degree; ++n) {
    const auto& w = weight[static_cast<std::size_t>(n)];
    const QuaternionQ direction = rng.rational_unit_quaternion(64);
    if (sgn(w) != 0) c[static_cast<std::size_t>(n)] = direction * Rational(w * scale);
  }
  return SeriesQ::from_coefficients(std::move(c), degree);
}

CaratheodoryMixture generate_caratheodory_mixture(std::uint64_t seed, int k) {
  if (k < 1) throw PreconditionError("k must be at least 1");
  Rng rng(seed);
  CaratheodoryMixture out;
  Rational total = 0;
  for (int m = 0; m < k; ++m) {
    out.weights.emplace_back(static_cast<long>(rng.integer(1, 16)));
    total += out.weights.back();
    out.units.push_back(rng.rational_unit_quaternion(64));
  }
  for (auto& w : out.weights) w /= total;
  return out;
}

SliceRational<Rational> generate_caratheodory_rational(std::uint64_t seed, int k) {
  const CaratheodoryMixture m = generate_caratheodory_mixture(seed, k);
  return caratheodory_combination(m.weights, m.units);
}

SeriesQ generate_caratheodory(std::uint64_t seed, int degree, int k) {
  return generate_caratheodory_rational(seed, k).series(degree);
}

SliceFunction class_c_function(const SliceFunction& h, const SliceFunction& p, std::string id,
                               const SamplingGrid& grid) {
  if (!is_sstar(h, grid).member) throw PreconditionError("first factor is not in S*");
  if (!is_caratheodory(p, grid).member) throw PreconditionError("second factor is not in P");
  const auto* he = h.exact_rational();
  const auto* pe = p.exact_rational();
  if (he != nullptr && pe != nullptr) {
    return SliceFunction::primitive(std::move(id), star_mul(*he, *pe).divided_by_q());
  }
  const auto* hd = h.rational();
  const auto* pd = p.rational();
  if (hd == nullptr || pd == nullptr) throw PreconditionError("class C construction needs rational factors");
  return SliceFunction::primitive(std::move(id), star_mul(*hd, *pd).divided_by_q());
}

}  // namespace srgft

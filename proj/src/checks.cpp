#include "srgft/checks.hpp"

#include "srgft/quaternion_io.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace srgft {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Passed: return "passed";
    case Status::Failed: return "failed";
    case Status::Inconclusive: return "inconclusive";
  }
  return "failed";
}

namespace {

constexpr std::size_t kMaxFailureWitnesses = 8;

double relative_margin(double lhs, double rhs) { return (rhs - lhs) / std::max(1.0, std::fabs(rhs)); }

Witness at_point(std::string assertion, const QuaternionD& q) {
  Witness w;
  w.assertion = std::move(assertion);
  w.q = q;
  return w;
}

Witness at_index(std::string assertion, int n) {
  Witness w;
  w.assertion = std::move(assertion);
  w.n = n;
  return w;
}

Witness plain(std::string assertion) {
  Witness w;
  w.assertion = std::move(assertion);
  return w;
}

/// Accumulates assertions of one check into a report.
class Tally {
public:
  Tally(std::string check, std::string function, const CheckConfig& config) : config_(config) {
    report_.check = std::move(check);
    report_.function = std::move(function);
  }

  /// lhs <= rhs within the relative tolerance.
  void leq(double lhs, double rhs, Witness w) { record(relative_margin(lhs, rhs), -config_.tolerance, lhs, rhs, std::move(w)); }

  /// lhs <= rhs with an explicit relative slack replacing the tolerance.
  void leq_slack(double lhs, double rhs, double slack, Witness w) {
    record(relative_margin(lhs, rhs), -slack, lhs, rhs, std::move(w));
  }

  /// value > 0.
  void positive(double value, Witness w) {
    const double m = value / std::max(1.0, std::fabs(value));
    if (!(value > 0.0)) {
      record_failure(m, 0.0, value, std::move(w));
    } else {
      record(m, -config_.tolerance, 0.0, value, std::move(w));
    }
  }

  /// Outcome decided exactly by the caller; lhs/rhs are for reporting.
  void holds(bool ok, double lhs, double rhs, Witness w) {
    double m = relative_margin(lhs, rhs);
    if (ok) {
      record(std::max(m, 0.0), -config_.tolerance, lhs, rhs, std::move(w));
    } else {
      record_failure(std::min(m, -std::numeric_limits<double>::min()), lhs, rhs, std::move(w));
    }
  }

  /// |lhs| <= |rhs| given squared moduli; exact comparison for rationals.
  template <Scalar T>
  void leq_squared(const T& lhs2, const T& rhs2, Witness w) {
    const double lhs = std::sqrt(to_double(lhs2));
    const double rhs = std::sqrt(to_double(rhs2));
    if constexpr (is_exact_v<T>) {
      holds(lhs2 <= rhs2, lhs, rhs, std::move(w));
    } else {
      leq(lhs, rhs, std::move(w));
    }
  }

  /// Equality within the relative band (exact for rationals). Counted when
  /// met; a failure when required and missed.
  void equal(double lhs, double rhs, bool required, Witness w) {
    equal_outcome(std::fabs(lhs - rhs) <= config_.equality_band * std::max(1.0, std::fabs(rhs)), lhs, rhs, required,
                  std::move(w));
  }

  template <Scalar T>
  void equal_squared(const T& lhs2, const T& rhs2, bool required, Witness w) {
    const double lhs = std::sqrt(to_double(lhs2));
    const double rhs = std::sqrt(to_double(rhs2));
    if constexpr (is_exact_v<T>) {
      equal_outcome(lhs2 == rhs2, lhs, rhs, required, std::move(w));
    } else {
      equal(lhs, rhs, required, std::move(w));
    }
  }

  /// a = b as quaternions within the band, relative to max(1, |b|).
  void close(const QuaternionD& a, const QuaternionD& b, Witness w) {
    const double diff = abs(a - b) / std::max(1.0, abs(b));
    const double band = config_.equality_band;
    if (diff <= band) {
      record(band - diff, -config_.tolerance, diff, band, std::move(w));
    } else {
      record_failure(band - diff, diff, band, std::move(w));
    }
  }

  void skip() { ++report_.skipped; }
  void value(std::string name, std::string literal) { report_.values.emplace_back(std::move(name), std::move(literal)); }
  void valid_degree(int n) { report_.valid_degree = n; }
  void inconclusive() { inconclusive_ = true; }
  long samples() const { return report_.samples; }
  long skipped() const { return report_.skipped; }

  CheckReport finish() {
    if (report_.samples == 0) report_.worst_margin = 0.0;
    if (failed_) {
      report_.passed = false;
      report_.status = Status::Failed;
      report_.witnesses = std::move(failures_);
    } else {
      report_.passed = !inconclusive_;
      report_.status = inconclusive_ ? Status::Inconclusive : Status::Passed;
      if (worst_) report_.witnesses.push_back(*worst_);
    }
    return std::move(report_);
  }

private:
  void record(double margin, double floor, double lhs, double rhs, Witness w) {
    if (margin < floor) {
      record_failure(margin, lhs, rhs, std::move(w));
      return;
    }
    ++report_.samples;
    offer(margin, lhs, rhs, std::move(w));
  }

  void record_failure(double margin, double lhs, double rhs, Witness w) {
    ++report_.samples;
    failed_ = true;
    w.lhs = lhs;
    w.rhs = rhs;
    if (failures_.size() < kMaxFailureWitnesses) failures_.push_back(w);
    offer(margin, lhs, rhs, std::move(w));
  }

  void offer(double margin, double lhs, double rhs, Witness w) {
    if (!worst_ || margin < report_.worst_margin) {
      report_.worst_margin = margin;
      w.lhs = lhs;
      w.rhs = rhs;
      worst_ = std::move(w);
    }
  }

  void equal_outcome(bool met, double lhs, double rhs, bool required, Witness w) {
    if (met) {
      ++report_.equalities;
    } else if (required) {
      w.assertion += " (equality)";
      record_failure(-std::fabs(relative_margin(lhs, rhs)), lhs, rhs, std::move(w));
    }
  }

  const CheckConfig& config_;
  CheckReport report_;
  std::optional<Witness> worst_;
  std::vector<Witness> failures_;
  bool failed_ = false;
  bool inconclusive_ = false;
};

/// Calls body with the exact expansion in exact mode when one exists,
/// otherwise with the floating expansion.
template <class Body>
void with_series(const SliceFunction& f, const CheckConfig& config, int degree, Body&& body) {
  if (config.mode == Mode::Exact) {
    if (auto s = f.exact_series(degree)) {
      body(*s);
      return;
    }
  }
  body(f.series(degree));
}

/// a_0 = 0 and a_1 = 1.
template <Scalar T>
void require_normalized(Tally& t, const SliceSeries<T>& s) {
  t.equal_squared(s.coeff(0).norm2(), T(0), true, at_index("a_0 = 0", 0));
  t.equal_squared((s.coeff(1) - Quaternion<T>(T(1))).norm2(), T(0), true, at_index("a_1 = 1", 1));
}

std::vector<double> extremal_radii(const CheckConfig& config) {
  std::vector<double> r = config.grid.radii();
  if (std::find(r.begin(), r.end(), 0.5) == r.end()) r.push_back(0.5);
  return r;
}

QuaternionD to_d(const QuaternionQ& q) { return quaternion_cast<double>(q); }

}  // namespace

CheckReport check_bieberbach(const SliceFunction& f, const CheckConfig& config, bool extremal) {
  Tally t("bieberbach", f.id(), config);
  with_series(f, config, config.degree, [&](const auto& s) {
    using T = typename std::decay_t<decltype(s)>::Coefficient::value_type;
    require_normalized(t, s);
    for (int n = 2; n <= s.degree(); ++n) {
      const T n2(n * n);
      t.leq_squared(s.coeff(n).norm2(), n2, at_index("|a_n| <= n", n));
      t.equal_squared(s.coeff(n).norm2(), n2, extremal, at_index("|a_n| = n", n));
    }
    t.valid_degree(s.degree());
  });
  return t.finish();
}

CheckReport check_convex_coefficients(const SliceFunction& f, const CheckConfig& config, bool extremal) {
  Tally t("convex-coefficients", f.id(), config);
  with_series(f, config, config.degree, [&](const auto& s) {
    using T = typename std::decay_t<decltype(s)>::Coefficient::value_type;
    require_normalized(t, s);
    for (int n = 2; n <= s.degree(); ++n) {
      t.leq_squared(s.coeff(n).norm2(), T(1), at_index("|a_n| <= 1", n));
      t.equal_squared(s.coeff(n).norm2(), T(1), extremal, at_index("|a_n| = 1", n));
    }
    t.valid_degree(s.degree());
  });
  return t.finish();
}

CheckReport check_fekete_szego(const SliceFunction& f, const std::vector<QuaternionQ>& lambdas,
                               const CheckConfig& config, bool extremal) {
  Tally t("fekete-szego", f.id(), config);
  with_series(f, config, 3, [&](const auto& s) {
    using T = typename std::decay_t<decltype(s)>::Coefficient::value_type;
    require_normalized(t, s);
    const auto a2 = s.coeff(2);
    const auto a3 = s.coeff(3);
    for (const auto& lq : lambdas) {
      const Quaternion<T> lambda = quaternion_cast<T>(lq);
      const Quaternion<T> x = a3 - lambda * (a2 * a2);
      const T k2 = (lambda * T(4) - Quaternion<T>(T(3))).norm2();
      const T bound2 = k2 > T(1) ? k2 : T(1);
      Witness w = plain("|a_3 - lambda a_2^2| <= max{1, |4 lambda - 3|}");
      w.lambda = to_d(lq);
      t.leq_squared(x.norm2(), bound2, w);
      const bool sharp = extremal && lq.is_real() && k2 >= T(1);
      if (sharp) {
        w.assertion = "|a_3 - lambda a_2^2| = |4 lambda - 3|";
        t.equal_squared(x.norm2(), k2, true, w);
      }
    }
    t.valid_degree(3);
  });
  return t.finish();
}

CheckReport check_sharper_caratheodory(const SliceFunction& p, const CheckConfig& config, bool extremal) {
  Tally t("sharper-caratheodory", p.id(), config);
  with_series(p, config, 2, [&](const auto& s) {
    using T = typename std::decay_t<decltype(s)>::Coefficient::value_type;
    t.equal_squared((s.coeff(0) - Quaternion<T>(T(1))).norm2(), T(0), true, at_index("p(0) = 1", 0));
    const auto a1 = s.coeff(1);
    const auto a2 = s.coeff(2);
    const Quaternion<T> x = a2 - (a1 * a1) / T(2);
    const T bound = T(2) - a1.norm2() / T(2);
    const double lhs = std::sqrt(to_double(x.norm2()));
    const Witness w = at_index("|a_2 - a_1^2/2| <= 2 - |a_1|^2/2", 2);
    if constexpr (is_exact_v<T>) {
      t.holds(sgn(bound) >= 0 && x.norm2() <= bound * bound, lhs, to_double(bound), w);
      if (sgn(bound) >= 0) t.equal_squared(x.norm2(), T(bound * bound), extremal, w);
    } else {
      t.leq(lhs, bound, w);
      t.equal(lhs, bound, extremal, w);
    }
    t.valid_degree(2);
  });
  return t.finish();
}

CheckReport check_caratheodory_bounds(const SliceFunction& p, const CheckConfig& config,
                                      std::optional<Extremal> extremal) {
  Tally t("caratheodory-bounds", p.id(), config);
  with_series(p, config, config.degree, [&](const auto& s) {
    using T = typename std::decay_t<decltype(s)>::Coefficient::value_type;
    t.equal_squared((s.coeff(0) - Quaternion<T>(T(1))).norm2(), T(0), true, at_index("p(0) = 1", 0));
    for (int n = 1; n <= s.degree(); ++n) {
      t.leq_squared(s.coeff(n).norm2(), T(4), at_index("|p_n| <= 2", n));
      t.equal_squared(s.coeff(n).norm2(), T(4), extremal.has_value(), at_index("|p_n| = 2", n));
    }
    t.valid_degree(s.degree());
  });
  for (const auto& point : config.grid.points()) {
    const double r = abs(point.q);
    const QuaternionD v = p.value(point.q);
    t.leq((1 - r) / (1 + r), v.w, at_point("(1-|q|)/(1+|q|) <= Re p(q)", point.q));
    t.leq(v.w, abs(v), at_point("Re p(q) <= |p(q)|", point.q));
    t.leq(abs(v), (1 + r) / (1 - r), at_point("|p(q)| <= (1+|q|)/(1-|q|)", point.q));
  }
  if (extremal) {
    for (double r : extremal_radii(config)) {
      const QuaternionD qu = extremal->upper * r;
      const QuaternionD ql = extremal->lower * r;
      t.equal(abs(p.value(qu)), (1 + r) / (1 - r), true, at_point("|p(q)| = (1+|q|)/(1-|q|)", qu));
      t.equal(p.value(ql).w, (1 - r) / (1 + r), true, at_point("Re p(q) = (1-|q|)/(1+|q|)", ql));
    }
  }
  return t.finish();
}

CheckReport check_growth_distortion(const SliceFunction& f, const CheckConfig& config,
                                    std::optional<Extremal> extremal) {
  Tally t("growth-distortion", f.id(), config);
  with_series(f, config, 1, [&](const auto& s) { require_normalized(t, s); });
  auto bands = [](double r) {
    struct {
      double f_lo, f_hi, d_lo, d_hi, q_lo, q_hi;
    } b{r / ((1 + r) * (1 + r)), r / ((1 - r) * (1 - r)), (1 - r) / std::pow(1 + r, 3),
        (1 + r) / std::pow(1 - r, 3), (1 - r) / (1 + r), (1 + r) / (1 - r)};
    return b;
  };
  for (const auto& point : config.grid.points()) {
    const double r = abs(point.q);
    const QuaternionD v = f.value(point.q);
    const QuaternionD d = f.derivative(point.q);
    const double ratio = abs(point.q * d) / abs(v);
    const auto b = bands(r);
    t.leq(b.f_lo, abs(v), at_point("|q|/(1+|q|)^2 <= |f(q)|", point.q));
    t.leq(abs(v), b.f_hi, at_point("|f(q)| <= |q|/(1-|q|)^2", point.q));
    t.leq(b.d_lo, abs(d), at_point("(1-|q|)/(1+|q|)^3 <= |f'(q)|", point.q));
    t.leq(abs(d), b.d_hi, at_point("|f'(q)| <= (1+|q|)/(1-|q|)^3", point.q));
    t.leq(b.q_lo, ratio, at_point("(1-|q|)/(1+|q|) <= |q f'(q)|/|f(q)|", point.q));
    t.leq(ratio, b.q_hi, at_point("|q f'(q)|/|f(q)| <= (1+|q|)/(1-|q|)", point.q));
  }
  if (extremal) {
    for (double r : extremal_radii(config)) {
      const auto b = bands(r);
      const QuaternionD qu = extremal->upper * r;
      const QuaternionD ql = extremal->lower * r;
      const QuaternionD vu = f.value(qu), du = f.derivative(qu);
      const QuaternionD vl = f.value(ql), dl = f.derivative(ql);
      t.equal(abs(vu), b.f_hi, true, at_point("|f(q)| = |q|/(1-|q|)^2", qu));
      t.equal(abs(du), b.d_hi, true, at_point("|f'(q)| = (1+|q|)/(1-|q|)^3", qu));
      t.equal(abs(qu * du) / abs(vu), b.q_hi, true, at_point("|q f'(q)|/|f(q)| = (1+|q|)/(1-|q|)", qu));
      t.equal(abs(vl), b.f_lo, true, at_point("|f(q)| = |q|/(1+|q|)^2", ql));
      t.equal(abs(dl), b.d_lo, true, at_point("|f'(q)| = (1-|q|)/(1+|q|)^3", ql));
      t.equal(abs(ql * dl) / abs(vl), b.q_lo, true, at_point("|q f'(q)|/|f(q)| = (1-|q|)/(1+|q|)", ql));
    }
  }
  return t.finish();
}

CheckReport check_growth_order_m(const SliceFunction& f, int m, OrderVariant variant, const CheckConfig& config,
                                 std::optional<Extremal> extremal) {
  if (m < 1) throw PreconditionError("order m must be at least 1");
  const std::string label = variant == OrderVariant::Growth ? " growth" : " distortion";
  Tally t("growth-order-m", f.id() + label + " m=" + std::to_string(m), config);
  with_series(f, config, m, [&](const auto& s) {
    for (int n = 2; n <= m; ++n) {
      if (!s.coeff(n).is_zero()) throw PreconditionError("function is not of the form q + sum_{n>m} q^n a_n");
    }
    require_normalized(t, s);
  });
  const double e = 2.0 / m;
  auto lower = [&](double r) { return (variant == OrderVariant::Growth ? r : 1.0) / std::pow(1 + std::pow(r, m), e); };
  auto upper = [&](double r) { return (variant == OrderVariant::Growth ? r : 1.0) / std::pow(1 - std::pow(r, m), e); };
  auto measure = [&](const QuaternionD& q) { return abs(variant == OrderVariant::Growth ? f.value(q) : f.derivative(q)); };
  const std::string what = variant == OrderVariant::Growth ? "|f(q)|" : "|f'(q)|";
  for (const auto& point : config.grid.points()) {
    const double r = abs(point.q);
    const double v = measure(point.q);
    t.leq(lower(r), v, at_point("lower band <= " + what, point.q));
    t.leq(v, upper(r), at_point(what + " <= upper band", point.q));
  }
  if (extremal) {
    for (double r : extremal_radii(config)) {
      const QuaternionD qu = extremal->upper * r;
      const QuaternionD ql = extremal->lower * r;
      t.equal(measure(qu), upper(r), true, at_point(what + " = upper band", qu));
      t.equal(measure(ql), lower(r), true, at_point(what + " = lower band", ql));
    }
  }
  return t.finish();
}

CheckReport check_schwarz(const SliceFunction& f, int m, const CheckConfig& config, bool extremal) {
  if (m < 1) throw PreconditionError("order m must be at least 1");
  Tally t("schwarz", f.id() + " m=" + std::to_string(m), config);
  with_series(f, config, m, [&](const auto& s) {
    using T = typename std::decay_t<decltype(s)>::Coefficient::value_type;
    for (int n = 0; n < m; ++n) {
      if (!s.coeff(n).is_zero()) throw PreconditionError("Schwarz lemma needs a_0 = ... = a_{m-1} = 0");
    }
    t.leq_squared(s.coeff(m).norm2(), T(1), at_index("|f^(m)(0)|/m! <= 1", m));
    t.equal_squared(s.coeff(m).norm2(), T(1), extremal, at_index("|f^(m)(0)|/m! = 1", m));
  });
  for (const auto& point : config.grid.points()) {
    const double r = abs(point.q);
    const double v = abs(f.value(point.q));
    const double bound = std::pow(r, m);
    t.leq(v, bound, at_point("|f(q)| <= |q|^m", point.q));
    t.equal(v, bound, extremal, at_point("|f(q)| = |q|^m", point.q));
  }
  return t.finish();
}

CheckReport check_schwarz_pick_coefficient(const SliceFunction& f, const CheckConfig& config, bool extremal) {
  Tally t("schwarz-pick-coefficient", f.id(), config);
  for (const auto& point : config.grid.points()) t.leq(abs(f.value(point.q)), 1.0, at_point("|f(q)| <= 1", point.q));
  with_series(f, config, 1, [&](const auto& s) {
    using T = typename std::decay_t<decltype(s)>::Coefficient::value_type;
    const T bound = T(1) - s.coeff(0).norm2();
    const Witness w = at_index("|f'(0)| <= 1 - |f(0)|^2", 1);
    const double lhs = std::sqrt(to_double(s.coeff(1).norm2()));
    if constexpr (is_exact_v<T>) {
      t.holds(sgn(bound) >= 0 && s.coeff(1).norm2() <= bound * bound, lhs, to_double(bound), w);
      if (sgn(bound) >= 0) t.equal_squared(s.coeff(1).norm2(), T(bound * bound), extremal, w);
    } else {
      t.leq(lhs, bound, w);
      t.equal(lhs, bound, extremal, w);
    }
    t.valid_degree(1);
  });
  return t.finish();
}

CheckReport check_schwarz_pick_counterexample() {
  const CheckConfig config;
  Tally t("schwarz-pick-counterexample", "mobius(1/2i)", config);
  const QuaternionQ a(Rational(0), Rational(1, 2), Rational(0), Rational(0));
  const QuaternionQ q0(Rational(0), Rational(0), Rational(1, 2), Rational(0));
  const auto phi = mobius_rational(a);
  const QuaternionQ v = phi.value(q0);
  const QuaternionQ d = phi.derivative_value(q0);
  const QuaternionQ v_expected(Rational(0), Rational(2, 5), Rational(-2, 5), Rational(0));
  const QuaternionQ d_expected(make_rational(-204, 225), Rational(0), Rational(0), make_rational(-96, 225));
  const Rational d2 = d.norm2();
  const Rational bound = (1 - v.norm2()) / (1 - q0.norm2());
  t.holds(v == v_expected, abs(v - v_expected), 0.0, plain("phi_a(q0) = 2/5(i - j)"));
  t.holds(d == d_expected, abs(d - d_expected), 0.0, plain("phi_a'(q0) = -204/225 - 96/225 k"));
  t.holds(d2 == make_rational(50832, 50625), d2.get_d(), 50832.0 / 50625.0, plain("|phi_a'(q0)|^2 = 50832/50625"));
  t.holds(bound == Rational(68, 75), bound.get_d(), 68.0 / 75.0, plain("(1-|phi_a(q0)|^2)/(1-|q0|^2) = 68/75"));
  t.holds(d2 > bound * bound, bound.get_d(), std::sqrt(d2.get_d()), plain("|phi_a'(q0)| > 68/75"));
  t.value("a", format_quaternion(a));
  t.value("q0", format_quaternion(q0));
  t.value("phi", format_quaternion(v));
  t.value("phi_prime", format_quaternion(d));
  t.value("phi_prime_norm2", format_scalar(d2));
  t.value("classical_bound", format_scalar(bound));
  t.value("classical_bound_squared", format_scalar(Rational(bound * bound)));
  return t.finish();
}

CheckReport check_rogosinski(const SliceFunction& f, const std::vector<QuaternionD>& points, const CheckConfig& config,
                             bool boundary) {
  Tally t("rogosinski", f.id(), config);
  QuaternionD b;
  with_series(f, config, 1, [&](const auto& s) {
    using T = typename std::decay_t<decltype(s)>::Coefficient::value_type;
    t.equal_squared(s.coeff(0).norm2(), T(0), true, at_index("f(0) = 0", 0));
    b = quaternion_cast<double>(s.coeff(1));
  });
  for (const auto& point : config.grid.points()) t.leq(abs(f.value(point.q)), 1.0, at_point("|f(q)| <= 1", point.q));
  const double b2 = b.norm2();
  for (const auto& q0 : points) {
    const double r2 = q0.norm2();
    const double den = 1 - r2 * b2;
    const QuaternionD c = q0 * b * ((1 - r2) / den);
    const double radius = r2 * (1 - b2) / den;
    const double dist = abs(f.value(q0) - c);
    t.leq(dist, radius, at_point("|f(q0) - c| <= r", q0));
    t.equal(dist, radius, boundary, at_point("|f(q0) - c| = r", q0));
  }
  return t.finish();
}

CheckReport check_bohr(const SliceFunction& f, const CheckConfig& config) {
  Tally t("bohr", f.id(), config);
  for (const auto& point : config.grid.points()) t.leq(abs(f.value(point.q)), 1.0, at_point("|f(q)| <= 1", point.q));
  const SeriesD s = f.series(config.degree);
  double sum = 0.0;
  double weight = 1.0;
  for (int n = 0; n <= s.degree(); ++n) {
    sum += weight * abs(s.coeff(n));
    weight /= 3.0;
  }
  t.leq(sum, 1.0, plain("sum 3^-n |a_n| <= 1"));
  t.valid_degree(s.degree());
  return t.finish();
}

CheckReport check_monotone_modulus(const SliceFunction& f, double alpha, const CheckConfig& config) {
  Tally t("monotone-modulus", f.id() + " alpha=" + format_scalar(alpha), config);
  const auto& radii = config.grid.radii();
  for (const auto& d : config.grid.directions()) {
    double previous = 0.0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
      const QuaternionD q = d * radii[k];
      const double m = abs(f.value(q)) / std::pow(radii[k], alpha);
      if (k > 0) t.leq_slack(previous, m, kMonotoneSlackClosedForm, at_point("M(r) increasing", q));
      previous = m;
    }
  }
  return t.finish();
}

CheckReport check_hayman(const SliceFunction& f, const CheckConfig& config, bool extremal) {
  Tally t("hayman", f.id(), config);
  const auto& radii = config.grid.radii();
  double previous = 0.0;
  for (std::size_t k = 0; k < radii.size(); ++k) {
    const double r = radii[k];
    double m = 0.0;
    QuaternionD arg;
    for (const auto& d : config.grid.directions()) {
      const double v = abs(f.value(d * r));
      if (v > m) {
        m = v;
        arg = d * r;
      }
    }
    const double phi = (1 - r) * (1 - r) * m / r;
    if (k > 0) t.leq_slack(phi, previous, kMonotoneSlackSampled, at_point("phi(r) non-increasing", arg));
    t.equal(phi, 1.0, extremal, at_point("phi(r) = 1", arg));
    if (k + 1 == radii.size()) {
      t.leq(0.0, phi, at_point("0 <= phi(r)", arg));
      t.leq(phi, 1.0, at_point("phi(r) <= 1", arg));
    }
    previous = phi;
  }
  return t.finish();
}

CheckReport check_koebe_quarter(const SliceFunction& f, const CheckConfig& config, bool koebe_slit) {
  Tally t("koebe-quarter", f.id(), config);
  const double r = config.grid.max_radius();
  double low = std::numeric_limits<double>::infinity();
  QuaternionD arg;
  for (const auto& d : config.grid.directions()) {
    const double v = abs(f.value(d * r));
    if (v < low) {
      low = v;
      arg = d * r;
    }
  }
  t.leq(r / ((1 + r) * (1 + r)), low, at_point("r/(1+r)^2 <= min |f(ru)|", arg));
  if (koebe_slit) {
    const auto& radii = config.grid.radii();
    double previous_floor = std::numeric_limits<double>::infinity();
    const QuaternionD target(-0.25 - kKoebeSlitDelta);
    for (std::size_t k = 0; k < radii.size(); ++k) {
      double floor = std::numeric_limits<double>::infinity();
      QuaternionD at;
      for (const auto& d : config.grid.directions()) {
        const QuaternionD q = d * radii[k];
        const QuaternionD v = f.value(q);
        t.positive(std::max(std::sqrt(v.imag_norm2()), v.w + 0.25), at_point("f(q) avoids (-inf, -1/4]", q));
        const double gap = abs(v + QuaternionD(0.25));
        if (gap < floor) {
          floor = gap;
          at = q;
        }
        if (d.is_real()) {
          t.leq(kKoebeSlitDelta / 2, abs(v - target), at_point("|f(q) - (-1/4 - delta)| >= delta/2", q));
        }
      }
      t.positive(floor, at_point("min |f(q) + 1/4| > 0", at));
      t.leq_slack(floor, previous_floor, kMonotoneSlackClosedForm, at_point("min |f(q) + 1/4| shrinks with r", at));
      previous_floor = floor;
    }
  }
  return t.finish();
}

CheckReport check_convex_covering_examples(const CheckConfig& config) {
  Tally t("convex-covering-examples", "convex-extremal; bloch", config);
  const SliceFunction convex = SliceFunction::from_rational("convex-extremal", convex_extremal_rational<Rational>());
  const SliceFunction bloch = bloch_function();
  for (const auto* f : {&convex, &bloch}) {
    const SeriesQ s = *f->exact_series(1);
    t.holds(s.coeff(0).is_zero() && s.coeff(1) == QuaternionQ(Rational(1)), abs(quaternion_cast<double>(s.coeff(1))), 1.0,
            plain(f->id() + ": f(0) = 0, f'(0) = 1"));
  }
  for (const auto& point : config.grid.points()) {
    const double re = convex.value(point.q).w;
    t.leq(-0.5, re, at_point("convex-extremal: Re f(q) >= -1/2", point.q));
    t.positive(re + 0.5, at_point("convex-extremal: Re f(q) > -1/2", point.q));
    const double im = std::sqrt(bloch.value(point.q).imag_norm2());
    t.leq(im, std::numbers::pi / 4, at_point("bloch: |Im f(q)| <= pi/4", point.q));
    t.positive(std::numbers::pi / 4 - im, at_point("bloch: |Im f(q)| < pi/4", point.q));
  }
  // Along q -> -1 the margin to the half space tends to 0.
  double previous = 0.5;
  for (double r : config.grid.radii()) {
    const QuaternionD q(-r);
    const double margin = convex.value(q).w + 0.5;
    t.leq_slack(margin, previous, kMonotoneSlackClosedForm, at_point("convex-extremal: margin decreases to 0", q));
    t.equal(margin, (1 - r) / (2 * (1 + r)), true, at_point("convex-extremal: Re f(-r) + 1/2 = (1-r)/(2(1+r))", q));
    previous = margin;
  }
  return t.finish();
}

CheckReport check_subordination_growth(const SliceFunction& f, const SliceFunction& w, const CheckConfig& config) {
  const SliceFunction g = f.compose(w, f.id() + " o " + w.id());
  Tally t("subordination-growth", g.id(), config);
  for (const auto& point : config.grid.points()) {
    const double r = abs(point.q);
    t.leq(abs(w.value(point.q)), 1.0, at_point("|w(q)| <= 1", point.q));
    t.leq(abs(g.value(point.q)), r / ((1 - r) * (1 - r)), at_point("|g(q)| <= |q|/(1-|q|)^2", point.q));
    t.leq(abs(g.derivative(point.q)), (1 + r) / std::pow(1 - r, 3), at_point("|g'(q)| <= (1+|q|)/(1-|q|)^3", point.q));
  }
  return t.finish();
}

CheckReport check_quotient_equivalences(const SliceFunction& f, const SliceFunction& g, const CheckConfig& config) {
  const auto* fr = f.rational();
  const auto* gr = g.rational();
  if (fr == nullptr || gr == nullptr) throw PreconditionError("quotient check needs rational closed forms");
  Tally t("quotient-equivalences", f.id() + " / " + g.id(), config);
  const SliceRational<double> h = star_mul(fr->reciprocal(), *gr);
  const SliceRational<double> fc = fr->conj();
  const SlicePolynomial<double> fs = symmetrize(fr->numerator());
  double min_pointwise = std::numeric_limits<double>::infinity();
  double min_star = min_pointwise;
  bool modulus_pointwise = true;   // |g| < |f| everywhere
  bool modulus_star = true;        // |f^{-*} * g| < 1 everywhere
  for (const auto& point : config.grid.points()) {
    // Zeros of f^s: those of the numerator's symmetrization (the
    // denominator factors have real coefficients and are nonzero in B).
    if (abs(fs(point.q)) < kQuotientSingularThreshold) {
      t.skip();
      continue;
    }
    const QuaternionD c = fc.value(point.q);
    const QuaternionD tq = inverse(c) * point.q * c;
    const QuaternionD hv = h.value(point.q);
    const QuaternionD fv = fr->value(point.q);
    const QuaternionD gv = gr->value(point.q);
    t.close(hv, inverse(fr->value(tq)) * gr->value(tq), at_point("(f^-* * g)(q) = f(T(q))^-1 g(T(q))", point.q));
    min_pointwise = std::min(min_pointwise, (inverse(fv) * gv).w);
    min_star = std::min(min_star, hv.w);
    modulus_pointwise = modulus_pointwise && abs(gv) < abs(fv);
    modulus_star = modulus_star && abs(hv) < 1.0;
  }
  const long total = static_cast<long>(config.grid.size());
  if (10 * t.skipped() > total) t.inconclusive();
  // Sampled minima straddling 0 within the band cannot be compared.
  constexpr double kBorderline = 1e-3;
  if (std::fabs(min_pointwise) > kBorderline && std::fabs(min_star) > kBorderline) {
    t.holds((min_pointwise > 0) == (min_star > 0), min_pointwise, min_star,
            plain("min Re f^-1 g > 0  <=>  min Re f^-* * g > 0"));
  }
  t.holds(modulus_pointwise == modulus_star, modulus_pointwise ? 1.0 : 0.0, modulus_star ? 1.0 : 0.0,
          plain("|g| < |f|  <=>  |f^-* * g| < 1"));
  t.value("min_re_pointwise", format_scalar(min_pointwise));
  t.value("min_re_star", format_scalar(min_star));
  return t.finish();
}

}  // namespace srgft

#include "srgft/registry.hpp"

#include "srgft/quaternion_io.hpp"

#include <algorithm>
#include <atomic>
#include <memory>
#include <thread>

namespace srgft {

CheckConfig RunConfig::check_config() const {
  if (degree < 8) throw PreconditionError("degree must be at least 8");
  if (!(tolerance > 0.0)) throw PreconditionError("tolerance must be positive");
  CheckConfig c{degree, tolerance, 1e-9, mode, SamplingGrid::with(radii, units, angles)};
  return c;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"bieberbach", "fekete-szego", "caratheodory", "growth",
                                              "convex",     "schwarz",      "rogosinski",   "bohr",
                                              "hayman",     "koebe",        "subordination", "quotient"};
  return names;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{
      "bieberbach",         "fekete-szego",           "sharper-caratheodory",   "caratheodory-bounds",
      "growth-distortion",  "growth-order-m",         "monotone-modulus",       "convex-coefficients",
      "convex-covering-examples", "schwarz",          "schwarz-pick-coefficient", "schwarz-pick-counterexample",
      "rogosinski",         "bohr",                   "hayman",                 "koebe-quarter",
      "subordination-growth", "quotient-equivalences"};
  return names;
}

bool is_known_selection(std::string_view selection) {
  if (selection == "all") return true;
  const auto& s = suite_names();
  const auto& c = check_names();
  return std::find(s.begin(), s.end(), selection) != s.end() || std::find(c.begin(), c.end(), selection) != c.end();
}

namespace {

QuaternionQ q_of(std::string_view literal) { return parse_quaternion<Rational>(literal); }

/// Builds a rational closed form in the scalar type of the mode.
template <class Build>
SliceFunction rational(const std::string& id, Mode mode, Build build) {
  const SliceRational<Rational> exact = build();
  if (mode == Mode::Exact) return SliceFunction::from_rational(id, exact);
  return SliceFunction::from_rational(id, rational_cast<double>(exact));
}

SliceFunction polynomial(const std::string& id, Mode mode, const SeriesQ& s) {
  if (mode == Mode::Exact) return SliceFunction::from_series(id, s);
  return SliceFunction::from_series(id, series_cast<double>(s));
}

class Catalog {
public:
  explicit Catalog(RunConfig config) : config_(std::move(config)), mode_(config_.mode) {}

  SliceFunction koebe(std::string_view u) const {
    return rational("koebe(u=" + std::string(u) + ")", mode_, [&] { return koebe_rational(q_of(u)); });
  }
  /// Koebe function along (i + j)/sqrt 2, a unit with irrational entries.
  SliceFunction koebe_irrational() const {
    const double s = 1.0 / std::sqrt(2.0);
    return SliceFunction::from_rational("koebe(u=(i+j)/sqrt2)", koebe_rational(QuaternionD(0.0, s, s, 0.0)));
  }
  SliceFunction caratheodory(std::string_view u) const {
    return rational("caratheodory(u=" + std::string(u) + ")", mode_, [&] { return caratheodory_rational(q_of(u)); });
  }
  SliceFunction caratheodory_pm_i() const {
    return rational("caratheodory(u=+-i)", mode_, [] {
      return caratheodory_combination<Rational>({Rational(1, 2), Rational(1, 2)}, {q_of("i"), q_of("-i")});
    });
  }
  SliceFunction constant(std::string_view c) const {
    const QuaternionQ v = q_of(c);
    return rational("constant(" + std::string(c) + ")", mode_,
                    [&] { return SliceRational<Rational>(SlicePolynomial<Rational>::constant(v)); });
  }
  SliceFunction monomial(int n, std::string_view c) const { return monomial(n, q_of(c)); }
  SliceFunction monomial(int n, const QuaternionQ& v) const {
    return rational("q^" + std::to_string(n) + "*(" + format_quaternion(v) + ")", mode_,
                    [&] { return SliceRational<Rational>(SlicePolynomial<Rational>::monomial(n, v)); });
  }
  SliceFunction identity() const { return rational("identity", mode_, [] { return SliceRational<Rational>(SlicePolynomial<Rational>::identity()); }); }
  SliceFunction convex_extremal() const { return rational("convex-extremal", mode_, [] { return convex_extremal_rational<Rational>(); }); }
  SliceFunction odd_starlike() const { return rational("odd-starlike", mode_, [] { return odd_starlike_rational<Rational>(); }); }
  SliceFunction mobius(const QuaternionQ& a, const QuaternionQ& u) const {
    return rational("mobius(a=" + format_quaternion(a) + ",u=" + format_quaternion(u) + ")", mode_,
                    [&] { return mobius_rational(a).right_mul(u); });
  }
  SliceFunction rogosinski(const QuaternionQ& b, const QuaternionQ& p) const {
    return rational("rogosinski(b=" + format_quaternion(b) + ",p=" + format_quaternion(p) + ")", mode_,
                    [&] { return rogosinski_rational(b, p); });
  }
  SliceFunction linear(std::string_view c0, std::string_view c1, const std::string& id) const {
    const QuaternionQ a = q_of(c0), b = q_of(c1);
    return rational(id, mode_, [&] { return SliceRational<Rational>(SlicePolynomial<Rational>({a, b})); });
  }

  std::uint64_t seed(std::string_view tag, int index) const {
    return derive_seed(config_.seed, tag, static_cast<std::uint64_t>(index));
  }

  SliceFunction sstar(int index, const Rational& alpha = 0, int gap = 1) const {
    const std::string tag = gap > 1 ? "sstar-gap" : (sgn(alpha) != 0 ? "sstar-alpha" : "sstar");
    const SeriesQ s = generate_small_coeff_sstar(seed(tag, index), config_.degree, alpha, gap);
    return polynomial(tag + "#" + std::to_string(index), mode_, s);
  }
  /// f with q f' a small coefficient S* member.
  SliceFunction convex_small(int index) const {
    const SeriesQ h = generate_small_coeff_sstar(seed("convex", index), config_.degree);
    std::vector<QuaternionQ> c(static_cast<std::size_t>(h.degree() + 1));
    for (int n = 1; n <= h.degree(); ++n) c[static_cast<std::size_t>(n)] = h.coeff(n) / Rational(n);
    return polynomial("convex#" + std::to_string(index), mode_, SeriesQ::from_coefficients(std::move(c), h.degree()));
  }
  SliceFunction caratheodory_random(int index) const {
    const int k = 1 + index % 3;
    return rational("caratheodory#" + std::to_string(index), mode_,
                    [&] { return generate_caratheodory_rational(seed("caratheodory", index), k); });
  }
  SliceFunction class_c(int index, const SamplingGrid& grid) const {
    const SliceFunction h = sstar(index);
    const SliceFunction p = rational("p", mode_, [&] { return generate_caratheodory_rational(seed("class-c", index), 1 + index % 3); });
    return class_c_function(h, p, "class-c#" + std::to_string(index), grid);
  }
  QuaternionQ random_b(int index) const {
    Rng rng(seed("b", index));
    const Rational m = rationalize(rng.uniform(0.05, 0.95), 100);
    return rng.rational_unit_quaternion(64) * m;
  }
  QuaternionQ random_a(int index) const {
    Rng rng(seed("a", index));
    const Rational m = rationalize(rng.uniform(0.0, 0.9), 100);
    return rng.rational_unit_quaternion(64) * m;
  }
  QuaternionQ random_unit(std::string_view tag, int index) const {
    Rng rng(seed(tag, index));
    return rng.rational_unit_quaternion(64);
  }
  std::vector<QuaternionD> random_points(int index, int count) const {
    Rng rng(seed("q0", index));
    std::vector<QuaternionD> out;
    for (int n = 0; n < count; ++n) out.push_back(rng.unit_quaternion() * rng.uniform(0.1, 0.95));
    return out;
  }
  std::vector<QuaternionQ> lambdas(int count) const {
    std::vector<QuaternionQ> out;
    for (const char* l : {"0", "1/2", "3/4", "1", "2", "-1", "4", "-4", "i", "1+1/2j", "3/4+k"}) out.push_back(q_of(l));
    Rng rng(seed("lambda", 0));
    for (int n = 0; n < count; ++n) {
      if (n % 2 == 0) {
        out.emplace_back(rationalize(rng.uniform(-4.0, 4.0), 64));
      } else {
        out.emplace_back(rationalize(rng.uniform(-2, 2), 64), rationalize(rng.uniform(-2, 2), 64),
                         rationalize(rng.uniform(-2, 2), 64), rationalize(rng.uniform(-2, 2), 64));
      }
    }
    return out;
  }
  /// 1 + sum_{n<=3} q^n c_n with |c_n| <= 4^-n / 6, so f^s has no zero in |q| < 4.
  SliceFunction quotient_denominator(int index) const {
    Rng rng(seed("quotient-f", index));
    std::vector<QuaternionQ> c{QuaternionQ(Rational(1))};
    Rational scale(1, 6);
    for (int n = 1; n <= 3; ++n) {
      scale /= 4;
      c.push_back(rng.rational_unit_quaternion(64) * Rational(scale * rationalize(rng.uniform(), 100)));
    }
    return polynomial("quotient-f#" + std::to_string(index), mode_, SeriesQ::from_coefficients(c, 3));
  }
  SliceFunction quotient_numerator(int index) const {
    Rng rng(seed("quotient-g", index));
    std::vector<QuaternionQ> c;
    for (int n = 0; n <= 3; ++n) {
      c.emplace_back(rationalize(rng.uniform(-1, 1), 16), rationalize(rng.uniform(-1, 1), 16),
                     rationalize(rng.uniform(-1, 1), 16), rationalize(rng.uniform(-1, 1), 16));
    }
    return polynomial("quotient-g#" + std::to_string(index), mode_, SeriesQ::from_coefficients(c, 3));
  }

private:
  RunConfig config_;
  Mode mode_;
};

QuaternionD dir(std::string_view literal) { return quaternion_cast<double>(q_of(literal)); }

Extremal along(std::string_view unit_conjugate) {
  const QuaternionD d = dir(unit_conjugate);
  return {d, -d};
}

class Builder {
public:
  Builder(std::string_view selection, const RunConfig& config)
      : selection_(selection), config_(config), shared_(std::make_shared<CheckConfig>(config.check_config())),
        catalog_(std::make_shared<const Catalog>(config)) {}

  std::vector<Task> build() {
    const int k = config_.random;
    const Catalog& c = *catalog_;
    const auto cat = catalog_;
    const auto cfg = shared_;

    suite("bieberbach");
    add("bieberbach", c.koebe("1"), [](auto& f, auto& g) { return check_bieberbach(f, g, true); });
    add("bieberbach", c.koebe("i"), [](auto& f, auto& g) { return check_bieberbach(f, g, true); });
    add("bieberbach", c.koebe("k"), [](auto& f, auto& g) { return check_bieberbach(f, g, true); });
    add("bieberbach", c.koebe_irrational(), [](auto& f, auto& g) { return check_bieberbach(f, g, true); });
    add("bieberbach", c.identity(), [](auto& f, auto& g) { return check_bieberbach(f, g); });
    for (int n = 0; n < k; ++n) add("bieberbach", lazy([cat, n] { return cat->sstar(n); }), "sstar#" + std::to_string(n), [](auto& f, auto& g) { return check_bieberbach(f, g); });
    for (int n = 0; n < k; ++n) {
      add("bieberbach", lazy([cat, cfg, n] { return cat->class_c(n, cfg->grid); }), "class-c#" + std::to_string(n),
          [](auto& f, auto& g) { return check_bieberbach(f, g); });
    }

    suite("fekete-szego");
    const auto lambdas = c.lambdas(20);
    for (const char* u : {"1", "i", "-j"}) {
      add("fekete-szego", c.koebe(u), [lambdas](auto& f, auto& g) { return check_fekete_szego(f, lambdas, g, true); });
    }
    add("fekete-szego", c.koebe_irrational(), [lambdas](auto& f, auto& g) { return check_fekete_szego(f, lambdas, g, true); });
    add("fekete-szego", c.identity(), [lambdas](auto& f, auto& g) { return check_fekete_szego(f, lambdas, g); });
    for (int n = 0; n < k; ++n) {
      add("fekete-szego", lazy([cat, n] { return cat->sstar(n); }), "sstar#" + std::to_string(n),
          [lambdas](auto& f, auto& g) { return check_fekete_szego(f, lambdas, g); });
    }

    suite("caratheodory");
    for (const char* check : {"sharper-caratheodory", "caratheodory-bounds"}) {
      const bool sharp = std::string_view(check) == "sharper-caratheodory";
      auto run = [sharp](std::optional<Extremal> e) {
        return [sharp, e](const SliceFunction& f, const CheckConfig& g) {
          return sharp ? check_sharper_caratheodory(f, g, e.has_value()) : check_caratheodory_bounds(f, g, e);
        };
      };
      add(check, c.constant("1"), run(std::nullopt));
      add(check, c.caratheodory("i"), run(along("-i")));
      add(check, c.caratheodory("1"), run(along("1")));
      add(check, c.caratheodory_pm_i(), run(std::nullopt));
      for (int n = 0; n < k; ++n) {
        add(check, lazy([cat, n] { return cat->caratheodory_random(n); }), "caratheodory#" + std::to_string(n), run(std::nullopt));
      }
    }

    suite("growth");
    add("growth-distortion", c.koebe("1"), [](auto& f, auto& g) { return check_growth_distortion(f, g, along("1")); });
    add("growth-distortion", c.koebe("i"), [](auto& f, auto& g) { return check_growth_distortion(f, g, along("-i")); });
    add("growth-distortion", c.identity(), [](auto& f, auto& g) { return check_growth_distortion(f, g); });
    for (int n = 0; n < k; ++n) {
      add("growth-distortion", lazy([cat, n] { return cat->sstar(n); }), "sstar#" + std::to_string(n),
          [](auto& f, auto& g) { return check_growth_distortion(f, g); });
    }
    const Extremal rotated{dir("1"), dir("i")};
    add("growth-order-m", c.convex_extremal(),
        [](auto& f, auto& g) { return check_growth_order_m(f, 1, OrderVariant::Distortion, g, along("1")); });
    add("growth-order-m", bloch_function(),
        [rotated](auto& f, auto& g) { return check_growth_order_m(f, 2, OrderVariant::Distortion, g, rotated); });
    add("growth-order-m", c.odd_starlike(),
        [rotated](auto& f, auto& g) { return check_growth_order_m(f, 2, OrderVariant::Growth, g, rotated); });
    for (int m = 1; m <= 3; ++m) {
      add("growth-order-m", c.identity(), [m](auto& f, auto& g) { return check_growth_order_m(f, m, OrderVariant::Growth, g); });
    }
    for (int n = 0; n < k; ++n) {
      add("growth-order-m", lazy([cat, n] { return cat->sstar(n, 0, 2); }), "sstar-gap#" + std::to_string(n),
          [](auto& f, auto& g) { return check_growth_order_m(f, 2, OrderVariant::Growth, g); });
    }
    add("monotone-modulus", c.identity(), [](auto& f, auto& g) { return check_monotone_modulus(f, 0.0, g); });
    add("monotone-modulus", c.koebe("1"), [](auto& f, auto& g) { return check_monotone_modulus(f, 0.0, g); });
    for (int n = 0; n < k; ++n) {
      add("monotone-modulus", lazy([cat, n] { return cat->sstar(n); }), "sstar#" + std::to_string(n),
          [](auto& f, auto& g) { return check_monotone_modulus(f, 0.0, g); });
      add("monotone-modulus", lazy([cat, n] { return cat->sstar(n, Rational(1, 2)); }), "sstar-alpha#" + std::to_string(n),
          [](auto& f, auto& g) { return check_monotone_modulus(f, 0.5, g); });
    }

    suite("convex");
    add("convex-coefficients", c.convex_extremal(), [](auto& f, auto& g) { return check_convex_coefficients(f, g, true); });
    add("convex-coefficients", c.identity(), [](auto& f, auto& g) { return check_convex_coefficients(f, g); });
    for (int n = 0; n < k; ++n) {
      add("convex-coefficients", lazy([cat, n] { return cat->convex_small(n); }), "convex#" + std::to_string(n),
          [](auto& f, auto& g) { return check_convex_coefficients(f, g); });
    }
    fixed("convex-covering-examples", "convex-extremal; bloch", [](const CheckConfig& g) { return check_convex_covering_examples(g); });

    suite("schwarz");
    add("schwarz", c.monomial(2, "k"), [](auto& f, auto& g) { return check_schwarz(f, 2, g, true); });
    add("schwarz", c.monomial(2, "1/2"), [](auto& f, auto& g) { return check_schwarz(f, 2, g); });
    for (int n = 0; n < k; ++n) {
      const QuaternionQ b = c.random_b(n);
      add("schwarz", lazy([cat, b] { return cat->rogosinski(b, q_of("1")); }), "rogosinski#" + std::to_string(n),
          [](auto& f, auto& g) { return check_schwarz(f, 1, g); });
    }
    add("schwarz-pick-coefficient", c.mobius(q_of("1/2i"), q_of("j")),
        [](auto& f, auto& g) { return check_schwarz_pick_coefficient(f, g, true); });
    add("schwarz-pick-coefficient", c.constant("1/2"), [](auto& f, auto& g) { return check_schwarz_pick_coefficient(f, g); });
    add("schwarz-pick-coefficient", c.monomial(1, "1/2"), [](auto& f, auto& g) { return check_schwarz_pick_coefficient(f, g); });
    for (int n = 0; n < k; ++n) {
      const QuaternionQ a = c.random_a(n);
      const QuaternionQ u = c.random_unit("mobius-u", n);
      add("schwarz-pick-coefficient", lazy([cat, a, u] { return cat->mobius(a, u); }), "mobius#" + std::to_string(n),
          [](auto& f, auto& g) { return check_schwarz_pick_coefficient(f, g, true); });
    }
    fixed("schwarz-pick-counterexample", "mobius(1/2i)", [](const CheckConfig&) { return check_schwarz_pick_counterexample(); });

    suite("rogosinski");
    for (int n = 0; n < std::max(k, 1); ++n) {
      const QuaternionQ b = c.random_b(n);
      const auto points = c.random_points(n, 6);
      for (const char* p : {"1", "-1", "i"}) {
        const bool boundary = true;
        add("rogosinski", lazy([cat, b, p] { return cat->rogosinski(b, q_of(p)); }),
            "rogosinski#" + std::to_string(n) + "(p=" + p + ")",
            [points, boundary](auto& f, auto& g) { return check_rogosinski(f, points, g, boundary); });
      }
      add("rogosinski", lazy([cat, b] { return cat->monomial(1, b); }), "q*b#" + std::to_string(n),
          [points](auto& f, auto& g) { return check_rogosinski(f, points, g); });
    }
    add("rogosinski", c.monomial(2, "j"), [points = c.random_points(100, 6)](auto& f, auto& g) { return check_rogosinski(f, points, g, true); });

    suite("bohr");
    add("bohr", c.identity(), [](auto& f, auto& g) { return check_bohr(f, g); });
    add("bohr", c.constant("1/2"), [](auto& f, auto& g) { return check_bohr(f, g); });
    add("bohr", c.mobius(q_of("1/2i"), q_of("1")), [](auto& f, auto& g) { return check_bohr(f, g); });
    for (int n = 0; n < k; ++n) {
      const QuaternionQ b = c.random_b(n);
      add("bohr", lazy([cat, b] { return cat->rogosinski(b, q_of("i")); }), "rogosinski#" + std::to_string(n),
          [](auto& f, auto& g) { return check_bohr(f, g); });
    }

    suite("hayman");
    add("hayman", c.koebe("1"), [](auto& f, auto& g) { return check_hayman(f, g, true); });
    add("hayman", c.identity(), [](auto& f, auto& g) { return check_hayman(f, g); });
    for (int n = 0; n < k; ++n) {
      add("hayman", lazy([cat, n] { return cat->sstar(n); }), "sstar#" + std::to_string(n), [](auto& f, auto& g) { return check_hayman(f, g); });
    }

    suite("koebe");
    add("koebe-quarter", c.koebe("1"), [](auto& f, auto& g) { return check_koebe_quarter(f, g, true); });
    add("koebe-quarter", c.identity(), [](auto& f, auto& g) { return check_koebe_quarter(f, g); });
    for (int n = 0; n < k; ++n) {
      add("koebe-quarter", lazy([cat, n] { return cat->sstar(n); }), "sstar#" + std::to_string(n), [](auto& f, auto& g) { return check_koebe_quarter(f, g); });
    }

    suite("subordination");
    const SliceFunction w_half = c.monomial(1, "1/2");
    const SliceFunction w_square = c.monomial(2, "1");
    const SliceFunction w_mix = rational("q(1+q)/2", config_.mode, [] {
      return SliceRational<Rational>(SlicePolynomial<Rational>({QuaternionQ(), QuaternionQ(Rational(1, 2)), QuaternionQ(Rational(1, 2))}));
    });
    for (const SliceFunction& w : {c.identity(), w_square, w_half, w_mix}) {
      add("subordination-growth", c.koebe("1"), [w](auto& f, auto& g) { return check_subordination_growth(f, w, g); });
    }
    for (int n = 0; n < k; ++n) {
      add("subordination-growth", lazy([cat, cfg, n] { return cat->class_c(n, cfg->grid); }), "class-c#" + std::to_string(n),
          [w_mix](auto& f, auto& g) { return check_subordination_growth(f, w_mix, g); });
      add("subordination-growth", lazy([cat, n] { return cat->sstar(n); }), "sstar#" + std::to_string(n),
          [w_square](auto& f, auto& g) { return check_subordination_growth(f, w_square, g); });
    }

    suite("quotient");
    add2("quotient-equivalences", c.constant("1"), c.linear("1", "1/2", "1+q/2"));
    add2("quotient-equivalences", c.linear("1", "-i", "1-qi"), c.linear("1", "i", "1+qi"));
    for (int n = 0; n < k; ++n) add2("quotient-equivalences", c.quotient_denominator(n), c.quotient_numerator(n));

    if (tasks_.empty() && !is_known_selection(selection_)) {
      throw PreconditionError("unknown suite '" + std::string(selection_) + "'");
    }
    return std::move(tasks_);
  }

private:
  using Factory = std::function<SliceFunction()>;

  template <class F>
  static Factory lazy(F f) {
    return Factory(std::move(f));
  }

  void suite(std::string name) { suite_ = std::move(name); }

  bool selected(std::string_view check) const {
    return selection_ == "all" || selection_ == suite_ || selection_ == check;
  }

  template <class Run>
  void add(const std::string& check, const SliceFunction& f, Run run) {
    if (!selected(check)) return;
    auto cfg = shared_;
    tasks_.push_back({suite_, check, f.id(), [f, run, cfg] { return run(f, *cfg); }});
  }

  template <class Run>
  void add(const std::string& check, Factory make, const std::string& id, Run run) {
    if (!selected(check)) return;
    auto cfg = shared_;
    tasks_.push_back({suite_, check, id, [make, run, cfg] {
                        const SliceFunction f = make();
                        return run(f, *cfg);
                      }});
  }

  void add2(const std::string& check, const SliceFunction& f, const SliceFunction& g) {
    if (!selected(check)) return;
    auto cfg = shared_;
    tasks_.push_back({suite_, check, f.id() + " / " + g.id(), [f, g, cfg] { return check_quotient_equivalences(f, g, *cfg); }});
  }

  template <class Run>
  void fixed(const std::string& check, const std::string& id, Run run) {
    if (!selected(check)) return;
    auto cfg = shared_;
    tasks_.push_back({suite_, check, id, [run, cfg] { return run(*cfg); }});
  }

  std::string_view selection_;
  const RunConfig& config_;
  std::shared_ptr<const CheckConfig> shared_;
  std::shared_ptr<const Catalog> catalog_;
  std::string suite_;
  std::vector<Task> tasks_;
};

}  // namespace

std::vector<Task> build_tasks(std::string_view selection, const RunConfig& config) {
  if (!is_known_selection(selection)) throw PreconditionError("unknown suite '" + std::string(selection) + "'");
  return Builder(selection, config).build();
}

std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, int jobs) {
  std::vector<CheckReport> out(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t n = next++; n < tasks.size(); n = next++) {
      try {
        out[n] = tasks[n].run();
      } catch (const std::exception& e) {
        CheckReport r;
        r.check = tasks[n].check;
        r.function = tasks[n].function;
        r.passed = false;
        r.status = Status::Failed;
        Witness w;
        w.assertion = std::string("error: ") + e.what();
        r.witnesses.push_back(std::move(w));
        out[n] = std::move(r);
      }
    }
  };
  const int count = std::clamp(jobs, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  std::vector<std::thread> pool;
  for (int n = 1; n < count; ++n) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace srgft

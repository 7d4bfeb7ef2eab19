#include "support.hpp"

#include "srgft/checks.hpp"
#include "srgft/json_io.hpp"
#include "srgft/quaternion_io.hpp"

#include "doctest.h"

#include <numbers>

using namespace srgft;

namespace {

QuaternionQ lit(const char* s) { return parse_quaternion<Rational>(s); }

SliceFunction rational_fn(const std::string& id, const SliceRational<Rational>& r) {
  return SliceFunction::from_rational(id, r);
}

SliceFunction poly_fn(std::initializer_list<const char*> coeffs) {
  std::vector<QuaternionQ> c;
  for (const char* s : coeffs) c.push_back(lit(s));
  return rational_fn("p", SliceRational<Rational>(SlicePolynomial<Rational>(std::move(c))));
}

SliceFunction koebe_fn(const char* u) { return rational_fn("koebe", koebe_rational(lit(u))); }

CheckConfig small_config() {
  CheckConfig c;
  c.degree = 24;
  c.grid = SamplingGrid::standard(4, 12);
  return c;
}

bool has_witness(const CheckReport& r, std::string_view assertion) {
  for (const auto& w : r.witnesses) {
    if (w.assertion.find(assertion) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Bieberbach") {
  const CheckConfig c = small_config();
  for (const char* u : {"1", "i", "3/5j+4/5k"}) {
    const auto r = check_bieberbach(koebe_fn(u), c, true);
    CHECK(r.passed);
    CHECK(r.worst_margin == 0.0);
    CHECK(r.equalities >= c.degree - 1);
    CHECK(r.valid_degree == c.degree);
  }
  const auto id = check_bieberbach(poly_fn({"0", "1"}), c);
  CHECK(id.passed);
  CHECK(id.worst_margin == doctest::Approx(1.0));
  const auto s = check_bieberbach(SliceFunction::from_series("s", generate_small_coeff_sstar(3, 24)), c);
  CHECK(s.passed);
  CHECK(s.worst_margin > 0.0);
  const auto bad = check_bieberbach(poly_fn({"0", "1", "3"}), c);
  CHECK_FALSE(bad.passed);
  REQUIRE_FALSE(bad.witnesses.empty());
  CHECK(bad.witnesses.front().n == 2);
  CHECK_FALSE(check_bieberbach(poly_fn({"0", "1", "0"}), c, true).passed);
}

TEST_CASE("convex coefficients") {
  const CheckConfig c = small_config();
  const auto e = check_convex_coefficients(rational_fn("cv", convex_extremal_rational<Rational>()), c, true);
  CHECK(e.passed);
  CHECK(e.worst_margin == 0.0);
  CHECK(check_convex_coefficients(poly_fn({"0", "1"}), c).worst_margin == doctest::Approx(1.0));
  CHECK_FALSE(check_convex_coefficients(koebe_fn("1"), c).passed);
}

TEST_CASE("Fekete-Szego") {
  const CheckConfig c = small_config();
  const auto k = koebe_fn("1");
  const auto zero = check_fekete_szego(k, {QuaternionQ()}, c, true);
  CHECK(zero.passed);
  CHECK(zero.equalities >= 1);
  const auto three_quarters = check_fekete_szego(k, {lit("3/4")}, c, true);
  CHECK(three_quarters.passed);
  CHECK(three_quarters.worst_margin == doctest::Approx(1.0));
  std::vector<QuaternionQ> lambdas;
  test::Gen gen(41);
  for (int n = 0; n < 30; ++n) lambdas.push_back(gen.quaternion() * make_rational(1, 2));
  for (const char* u : {"i", "2/3i+2/3j+1/3k"}) CHECK(check_fekete_szego(koebe_fn(u), lambdas, c, true).passed);
  CHECK_FALSE(check_fekete_szego(poly_fn({"0", "1", "0", "5"}), {QuaternionQ()}, c).passed);
}

TEST_CASE("sharper Caratheodory") {
  const CheckConfig c = small_config();
  const auto one = check_sharper_caratheodory(poly_fn({"1"}), c);
  CHECK(one.passed);
  CHECK(one.worst_margin == doctest::Approx(1.0));
  const auto e = check_sharper_caratheodory(rational_fn("p", caratheodory_rational(lit("j"))), c, true);
  CHECK(e.passed);
  CHECK(e.worst_margin == 0.0);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CHECK(check_sharper_caratheodory(rational_fn("p", generate_caratheodory_rational(seed, 3)), c).passed);
  }
  CHECK(check_sharper_caratheodory(poly_fn({"1", "1", "2"}), c).worst_margin == 0.0);
  CHECK_FALSE(check_sharper_caratheodory(poly_fn({"1", "1", "3"}), c).passed);
}

TEST_CASE("Caratheodory bounds") {
  const CheckConfig c = small_config();
  const auto p = rational_fn("p", caratheodory_rational(lit("i")));
  const auto e = check_caratheodory_bounds(p, c, Extremal{quaternion_cast<double>(lit("-i")), quaternion_cast<double>(lit("i"))});
  CHECK(e.passed);
  CHECK(e.equalities > 0);
  CHECK(abs(p.value(QuaternionD(0, -0.5, 0, 0))) == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(check_caratheodory_bounds(poly_fn({"1"}), c).passed);
  CHECK_FALSE(check_caratheodory_bounds(poly_fn({"1", "3"}), c).passed);
}

TEST_CASE("growth and distortion") {
  const CheckConfig c = small_config();
  const auto k = koebe_fn("1");
  CHECK(k.value(QuaternionD(0.5)).w == doctest::Approx(2.0));
  CHECK(k.derivative(QuaternionD(0.5)).w == doctest::Approx(12.0));
  CHECK(k.value(QuaternionD(-0.5)).w == doctest::Approx(-2.0 / 9.0));
  const auto r = check_growth_distortion(k, c, Extremal{QuaternionD(1.0), QuaternionD(-1.0)});
  CHECK(r.passed);
  CHECK(r.equalities > 0);
  CHECK(check_growth_distortion(poly_fn({"0", "1"}), c).passed);
  CHECK_FALSE(check_growth_distortion(poly_fn({"0", "1", "1"}), c).passed);
}

TEST_CASE("growth of order m") {
  const CheckConfig c = small_config();
  const auto cv = rational_fn("cv", convex_extremal_rational<Rational>());
  const Extremal real{QuaternionD(1.0), QuaternionD(-1.0)};
  CHECK(check_growth_order_m(cv, 1, OrderVariant::Distortion, c, real).passed);
  const Extremal rotated{QuaternionD(1.0), QuaternionD::i()};
  CHECK(check_growth_order_m(rational_fn("o", odd_starlike_rational<Rational>()), 2, OrderVariant::Growth, c, rotated).passed);
  CHECK(check_growth_order_m(bloch_function(), 2, OrderVariant::Distortion, c, rotated).passed);
  for (int m = 1; m <= 4; ++m) {
    CHECK(check_growth_order_m(poly_fn({"0", "1"}), m, OrderVariant::Growth, c).passed);
    CHECK(check_growth_order_m(poly_fn({"0", "1"}), m, OrderVariant::Distortion, c).passed);
  }
  CHECK_THROWS_AS(check_growth_order_m(koebe_fn("1"), 2, OrderVariant::Growth, c), PreconditionError);
}

TEST_CASE("Schwarz lemma") {
  const CheckConfig c = small_config();
  const auto eq = check_schwarz(poly_fn({"0", "0", "k"}), 2, c, true);
  CHECK(eq.passed);
  CHECK(eq.equalities == static_cast<int>(c.grid.size() + 1));
  const auto half = check_schwarz(poly_fn({"0", "0", "1/2"}), 2, c);
  CHECK(half.passed);
  CHECK(half.worst_margin > 0.0);
  CHECK(check_schwarz(rational_fn("r", rogosinski_rational(lit("1/3j"), lit("i"))), 1, c).passed);
  CHECK_THROWS_AS(check_schwarz(poly_fn({"0", "1"}), 2, c), PreconditionError);
  CHECK_FALSE(check_schwarz(poly_fn({"0", "0", "2"}), 2, c).passed);
}

TEST_CASE("Schwarz-Pick coefficient bound") {
  const CheckConfig c = small_config();
  const auto half = check_schwarz_pick_coefficient(poly_fn({"1/2"}), c);
  CHECK(half.passed);
  CHECK(half.worst_margin == doctest::Approx(0.5));
  CHECK(check_schwarz_pick_coefficient(poly_fn({"0", "1/2"}), c).passed);
  CHECK(check_schwarz_pick_coefficient(rational_fn("m", mobius_rational(lit("1/2i"))), c, true).passed);
}

TEST_CASE("Schwarz-Pick counterexample") {
  const auto r = check_schwarz_pick_counterexample();
  CHECK(r.passed);
  std::map<std::string, std::string> v(r.values.begin(), r.values.end());
  CHECK(parse_quaternion<Rational>(v.at("phi")) == lit("2/5i-2/5j"));
  CHECK(parse_quaternion<Rational>(v.at("phi_prime")) == lit("-204/225-96/225k"));
  CHECK(parse_rational(v.at("phi_prime_norm2")) == make_rational(50832, 50625));
  CHECK(parse_rational(v.at("classical_bound")) == make_rational(68, 75));
}

TEST_CASE("Rogosinski") {
  const CheckConfig c = small_config();
  const QuaternionQ b = lit("1/3i+1/3j+1/3k");
  std::vector<QuaternionD> points{QuaternionD(0.5), QuaternionD(0, 0.3, 0.4, 0), QuaternionD(0.1, -0.2, 0.6, 0.3)};
  const auto e = check_rogosinski(rational_fn("r", rogosinski_rational(lit("3/5i"), lit("1"))), points, c, true);
  CHECK(e.passed);
  CHECK(e.equalities == 4);
  const auto line = check_rogosinski(SliceFunction::from_rational("qb", SliceRational<Rational>(SlicePolynomial<Rational>::monomial(1, b))), points, c);
  CHECK(line.passed);
  CHECK(line.worst_margin > 0.0);
  CHECK_FALSE(check_rogosinski(poly_fn({"0", "1/2", "1"}), points, c).passed);
}

TEST_CASE("Bohr") {
  const CheckConfig c = small_config();
  const auto id = check_bohr(poly_fn({"0", "1"}), c);
  CHECK(id.passed);
  const auto half = check_bohr(poly_fn({"1/2"}), c);
  CHECK(half.worst_margin == doctest::Approx(0.5));
  CHECK(check_bohr(rational_fn("m", mobius_rational(lit("1/2i"))), c).passed);
}

TEST_CASE("monotone modulus") {
  const CheckConfig c = small_config();
  CHECK(check_monotone_modulus(poly_fn({"0", "1"}), 0.0, c).passed);
  CHECK(check_monotone_modulus(koebe_fn("1"), 0.0, c).passed);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(check_monotone_modulus(SliceFunction::from_series("s", generate_small_coeff_sstar(seed, 24)), 0.0, c).passed);
  }
}

TEST_CASE("Hayman") {
  const CheckConfig c = small_config();
  const auto k = check_hayman(koebe_fn("1"), c, true);
  CHECK(k.passed);
  CHECK(k.equalities == static_cast<int>(c.grid.radii().size()));
  CHECK(check_hayman(poly_fn({"0", "1"}), c).passed);
}

TEST_CASE("Koebe quarter") {
  const CheckConfig c = small_config();
  const auto k = check_koebe_quarter(koebe_fn("1"), c, true);
  CHECK(k.passed);
  const SliceFunction kf = koebe_fn("1");
  double low = 1e9;
  for (const auto& d : c.grid.directions()) low = std::min(low, abs(kf.value(d * 0.99)));
  CHECK(low >= 0.99 / (1.99 * 1.99) - 1e-6);
  CHECK(check_koebe_quarter(poly_fn({"0", "1"}), c).passed);
}

TEST_CASE("covering examples") {
  const CheckConfig c = small_config();
  CHECK(check_convex_covering_examples(c).passed);
  const SliceFunction cv = SliceFunction::from_rational("cv", convex_extremal_rational<Rational>());
  CHECK(cv.value(QuaternionD(-0.99)).w + 0.5 == doctest::Approx(0.5 - 0.99 / 1.99));
  const QuaternionD b = bloch_function().value(QuaternionD(0, 0.99, 0, 0));
  CHECK(b.w == doctest::Approx(0.0));
  CHECK(b.x == doctest::Approx(std::atan(0.99)));
  CHECK(b.x < std::numbers::pi / 4);
}

TEST_CASE("subordination growth") {
  const CheckConfig c = small_config();
  const auto k = koebe_fn("1");
  CHECK(check_subordination_growth(k, poly_fn({"0", "1"}), c).passed);
  CHECK(check_subordination_growth(k, poly_fn({"0", "0", "1"}), c).passed);
  CHECK(check_subordination_growth(k, poly_fn({"0", "1/2"}), c).passed);
  CHECK_THROWS_AS(check_subordination_growth(k, poly_fn({"0", "i"}), c), DomainError);
}

TEST_CASE("quotient equivalences") {
  const CheckConfig c = small_config();
  const auto both = check_quotient_equivalences(poly_fn({"1"}), poly_fn({"1", "1/2"}), c);
  CHECK(both.passed);
  CHECK(check_quotient_equivalences(poly_fn({"1", "-i"}), poly_fn({"1", "i"}), c).passed);
  test::Gen gen(42);
  for (int n = 0; n < 10; ++n) {
    const QuaternionQ a = gen.quaternion() * make_rational(1, 40);
    const QuaternionQ b = gen.quaternion(), d = gen.quaternion();
    const SliceFunction f = rational_fn("f", SliceRational<Rational>(SlicePolynomial<Rational>({lit("1"), a})));
    const SliceFunction g = rational_fn("g", SliceRational<Rational>(SlicePolynomial<Rational>({b, d})));
    CHECK(check_quotient_equivalences(f, g, c).passed);
  }
  CHECK_THROWS_AS(check_quotient_equivalences(bloch_function(), poly_fn({"1"}), c), PreconditionError);
}

TEST_CASE("report serialization") {
  const auto r = check_schwarz_pick_counterexample();
  const Json j = to_json(r);
  CHECK(j.at("check") == "schwarz-pick-counterexample");
  CHECK(j.at("passed") == true);
  CHECK(j.at("values").at("phi") == "2/5i-2/5j");
  const Json s = to_json(koebe(lit("1"), 4));
  const auto back = series_from_json(s);
  REQUIRE(std::holds_alternative<SeriesQ>(back));
  CHECK(std::get<SeriesQ>(back) == koebe(lit("1"), 4));
  Json bad = s;
  bad["coeffs"][0] = Json::array({0.5, 0, 0, 0});
  CHECK_THROWS_AS(series_from_json(bad), ParseError);
}

#include "support.hpp"

#include "srgft/quaternion_io.hpp"

#include "doctest.h"

using namespace srgft;

namespace {

QuaternionQ lit(const char* s) { return parse_quaternion<Rational>(s); }

SliceFunction poly_fn(std::initializer_list<const char*> coeffs) {
  std::vector<QuaternionQ> c;
  for (const char* s : coeffs) c.push_back(lit(s));
  return SliceFunction::from_rational("p", SliceRational<Rational>(SlicePolynomial<Rational>(std::move(c))));
}

const SamplingGrid& grid() {
  static const SamplingGrid g = SamplingGrid::standard();
  return g;
}

}  // namespace

TEST_CASE("sampling grid") {
  const SamplingGrid& g = grid();
  CHECK(g.radii().size() == 11);
  CHECK(g.max_radius() == 0.99);
  CHECK(g.units().size() == 9);
  // 2 real directions plus 22 per unit
  CHECK(g.directions().size() == 2 + 9 * 22);
  CHECK(g.size() == 11 * g.directions().size());
  for (const auto& p : g.points()) CHECK(abs(p.q) == doctest::Approx(g.radii()[p.radius]));
  CHECK_THROWS_AS(SamplingGrid::with({0.5, 0.4}, 3, 8), PreconditionError);
  CHECK_THROWS_AS(SamplingGrid::with({1.0}, 3, 8), PreconditionError);
}

TEST_CASE("Caratheodory predicate") {
  const auto one = is_caratheodory(poly_fn({"1"}), grid());
  CHECK(one.member);
  CHECK(one.margin == 1.0);
  CHECK(is_caratheodory(SliceFunction::from_rational("p", caratheodory_rational(lit("i"))), grid()).member);
  const auto bad = is_caratheodory(poly_fn({"1", "3"}), grid());
  CHECK_FALSE(bad.member);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->w < -0.9 + 1e-12);
  CHECK(bad.witness->is_real());
  CHECK_FALSE(is_caratheodory(poly_fn({"2"}), grid()).member);
}

TEST_CASE("S* predicate") {
  for (double alpha : {0.0, 0.5, -2.0}) CHECK(is_sstar(poly_fn({"0", "1"}), grid(), alpha).member);
  const auto example = is_sstar(poly_fn({"0", "1", "1/2"}), grid());
  CHECK(example.member);
  CHECK(example.certificate == Certificate::AnalyticSufficient);
  const auto zero = is_sstar(poly_fn({"0", "1", "2"}), grid());
  CHECK_FALSE(zero.member);
  CHECK_FALSE(is_sstar(poly_fn({"0", "2"}), grid()).member);
  CHECK_THROWS_AS(is_sstar(poly_fn({"0", "1"}), grid(), 1.0), DomainError);
  CHECK(is_sstar(SliceFunction::from_rational("k", koebe_rational(lit("k"))), grid()).member);
}

TEST_CASE("class C predicate") {
  const SliceFunction h = poly_fn({"0", "1", "1/3i"});
  CHECK(is_class_c(h, h, grid()).member);
  CHECK_FALSE(is_class_c(poly_fn({"0", "-1"}), poly_fn({"0", "1"}), grid()).member);
  CHECK_THROWS_AS(is_class_c(h, poly_fn({"0", "1", "2"}), grid()), PreconditionError);
  const SliceFunction p = SliceFunction::from_rational("p", generate_caratheodory_rational(3, 2));
  const SliceFunction f = class_c_function(h, p, "f", grid());
  CHECK(is_class_c(f, h, grid()).member);
}

TEST_CASE("slice preserving and one-slice predicates") {
  CHECK(is_slice_preserving(koebe(QuaternionQ(Rational(1)), 10)).member);
  CHECK_FALSE(is_slice_preserving(SeriesQ::monomial(1, lit("i"), 3)).member);
  CHECK(is_slice_preserving(SeriesQ::zero(3)).member);
  const std::vector<QuaternionQ> c{lit("1"), lit("i"), lit("3i")};
  const auto one = is_one_slice(SeriesQ::from_coefficients(c, 2));
  CHECK(one.member);
  CHECK(*one.unit == QuaternionD::i());
  const std::vector<QuaternionQ> d{lit("i"), lit("j")};
  CHECK_FALSE(is_one_slice(SeriesQ::from_coefficients(d, 1)).member);
  const auto real = is_one_slice(koebe(QuaternionQ(Rational(1)), 4));
  CHECK(real.member);
  CHECK(*real.unit == QuaternionD::i());
}

TEST_CASE("small coefficient S* generator") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SeriesQ s = generate_small_coeff_sstar(seed, 24);
    CHECK(s.coeff(0).is_zero());
    CHECK(s.coeff(1) == lit("1"));
    double total = 0.0;
    for (int n = 2; n <= 24; ++n) total += n * abs(s.coeff(n));
    CHECK(total <= 1.0 + 1e-12);
    const auto v = is_sstar(SliceFunction::from_series("s", s), grid());
    CHECK(v.member);
    CHECK(v.certificate == Certificate::AnalyticSufficient);
  }
  CHECK(generate_small_coeff_sstar(42, 16) == generate_small_coeff_sstar(42, 16));
  const SeriesQ gap = generate_small_coeff_sstar(1, 16, 0, 3);
  for (int n = 2; n <= 3; ++n) CHECK(gap.coeff(n).is_zero());
  const SeriesQ half = generate_small_coeff_sstar(2, 16, make_rational(1, 2));
  CHECK(is_sstar(SliceFunction::from_series("h", half), grid(), 0.5).member);
  CHECK_THROWS_AS(generate_small_coeff_sstar(1, 1), PreconditionError);
  CHECK_THROWS_AS(generate_small_coeff_sstar(1, 8, 1), DomainError);
}

TEST_CASE("Caratheodory generator") {
  const SeriesQ e = caratheodory_rational(lit("i")).series(12);
  for (int n = 1; n <= 12; ++n) {
    CHECK(e.coeff(n) == power(lit("i"), n) * Rational(2));
    CHECK(e.coeff(n).norm2() == 4);
  }
  const auto sym = caratheodory_combination<Rational>({make_rational(1, 2), make_rational(1, 2)}, {lit("i"), lit("-i")});
  CHECK(all_real(sym.series(12)));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = SliceFunction::from_rational("p", generate_caratheodory_rational(seed, 1 + seed % 4));
    CHECK(is_caratheodory(p, grid()).member);
  }
  CHECK_THROWS_AS(caratheodory_combination<Rational>({Rational(1), Rational(1)}, {lit("i"), lit("j")}),
                  PreconditionError);
}

TEST_CASE("class C generator") {
  const SeriesQ id = SeriesQ::monomial(1, lit("1"), 12);
  CHECK(generate_class_c(id, SeriesQ::constant(lit("1"), 12)) == id.truncated(12));
  // h = Koebe(u), p = (1 + qu)(1 - qu)^{-*} reproduces f with f' = q^{-1} h * p
  const QuaternionQ u = lit("4/5j-3/5k");
  const SeriesQ h = koebe(u, 16);
  const SeriesQ p = caratheodory_rational(u).series(16);
  const SeriesQ f = generate_class_c(h, p);
  const SeriesQ expected = integrate_radial(star_mul(koebe_rational(u), caratheodory_rational(u)).divided_by_q().series(15));
  CHECK(f.truncated(15) == expected.truncated(15));
  // n a_n = sum_{k=1}^{n} h_k p_{n-k}
  for (int n = 1; n <= 15; ++n) {
    QuaternionQ acc;
    for (int k = 1; k <= n; ++k) acc += h.coeff(k) * p.coeff(n - k);
    CHECK(f.coeff(n) * Rational(n) == acc);
  }
}

TEST_CASE("Koebe family") {
  CHECK(koebe(lit("1"), 6).coeff(5) == lit("5"));
  CHECK(koebe(lit("k"), 6).coeff(3) == lit("-3"));
  CHECK_THROWS_AS(koebe(lit("1/2"), 6), DomainError);
}

TEST_CASE("Rogosinski family") {
  const QuaternionQ b = lit("1/2i");
  const SeriesQ r = rogosinski_extremal(b, QuaternionQ(), 8);
  CHECK(r == SeriesQ::monomial(1, b, 8));
  const SeriesQ e = rogosinski_extremal(b, lit("1"), 8);
  CHECK(e.coeff(1) == b);
  CHECK_THROWS_AS(rogosinski_rational(QuaternionQ(), lit("1")), DomainError);
  CHECK_THROWS_AS(rogosinski_rational(lit("i"), lit("1")), DomainError);
  CHECK_THROWS_AS(rogosinski_rational(lit("1/2"), lit("2")), DomainError);
  const auto f = SliceFunction::from_rational("r", rogosinski_rational(b, lit("j")));
  for (const auto& point : grid().points()) CHECK(abs(f.value(point.q)) <= 1.0);
}

TEST_CASE("Bloch function") {
  const SliceFunction f = bloch_function();
  const SeriesQ s = *f.exact_series(9);
  CHECK(s.coeff(1) == lit("1"));
  CHECK(s.coeff(2).is_zero());
  CHECK(s.coeff(9) == lit("1/9"));
  const QuaternionD q(0.1, 0.2, -0.3, 0.1);
  CHECK(test::distance(f.value(q), eval(f.series(200), q)) < 1e-14);
  CHECK(test::distance(f.derivative(q), eval(slice_derivative(f.series(200)), q)) < 1e-13);
}

TEST_CASE("primitive functions") {
  const auto h = generate_small_coeff_sstar(4, 12);
  const SliceFunction hf = SliceFunction::from_series("h", h);
  const SliceFunction p = SliceFunction::from_rational("p", generate_caratheodory_rational(5, 2));
  const SliceFunction f = class_c_function(hf, p, "f", grid());
  const SeriesQ direct = generate_class_c(h, p.exact_series(40)->truncated(40));
  const SeriesQ fs = *f.exact_series(20);
  CHECK(direct.degree() == 12);
  CHECK(fs.truncated(12) == direct);
  const QuaternionD q(0.3, 0.1, 0.2, -0.4);
  CHECK(test::distance(f.value(q), eval(f.series(400), q)) < 1e-12);
  // f' = (q^{-1} h) * p pointwise
  CHECK(test::distance(f.derivative(q), test::star_value(inverse(q) * hf.value(q), p, q)) < 1e-12);
}

#include "support.hpp"

#include "srgft/quaternion_io.hpp"

#include "doctest.h"

using namespace srgft;

namespace {

QuaternionQ lit(const char* s) { return parse_quaternion<Rational>(s); }

SlicePolynomial<Rational> poly(std::initializer_list<const char*> coeffs) {
  std::vector<QuaternionQ> c;
  for (const char* s : coeffs) c.push_back(lit(s));
  return SlicePolynomial<Rational>(std::move(c));
}

}  // namespace

TEST_CASE("polynomial basics") {
  const auto p = poly({"1", "i", "0", "0"});
  CHECK(p.degree() == 1);
  CHECK(SlicePolynomial<Rational>().degree() == -1);
  CHECK(p(lit("1/2j")) == lit("1-1/2k"));
  CHECK(p.derivative() == poly({"i"}));
  CHECK(symmetrize(p) == poly({"1", "0", "1"}));
  CHECK(poly({"0", "2", "i"}).divided_by_q() == poly({"2", "i"}));
  CHECK_THROWS_AS(poly({"1", "1"}).divided_by_q(), DomainError);
}

TEST_CASE("polynomial symmetrization matches the regular product") {
  test::Gen gen(31);
  for (int n = 0; n < 30; ++n) {
    std::vector<QuaternionQ> c;
    for (int m = 0; m <= 5; ++m) c.push_back(gen.quaternion());
    const SlicePolynomial<Rational> p(c);
    CHECK(symmetrize(p) == star_mul(p, p.conj()));
  }
}

TEST_CASE("denominator factors must be real and nonzero at the origin") {
  CHECK_THROWS_AS(SliceRational<Rational>(poly({"1", "i"}), poly({"1"})), DomainError);
  CHECK_THROWS_AS(SliceRational<Rational>(poly({"0", "1"}), poly({"1"})), DomainError);
}

TEST_CASE("closed forms agree with their expansions") {
  const QuaternionQ u = lit("3/5i+4/5j");
  const auto k = koebe_rational(u);
  CHECK(k.series(20) == koebe(u, 20));
  const auto c = caratheodory_rational(u);
  const SeriesQ cs = c.series(16);
  CHECK(cs.coeff(0) == lit("1"));
  for (int n = 1; n <= 16; ++n) CHECK(cs.coeff(n) == power(u, n) * Rational(2));
  const QuaternionQ a = lit("1/3j-1/3k");
  CHECK(mobius_rational(a).series(20) == mobius(a, 20));
}

TEST_CASE("values avoid cancellation near boundary zeros") {
  const auto k = koebe_rational(QuaternionQ(Rational(1)));
  const SliceRational<double> kd = rational_cast<double>(k);
  const double r = 0.999;
  CHECK(kd.value(QuaternionD(r)).w == doctest::Approx(r / ((1 - r) * (1 - r))).epsilon(1e-13));
  CHECK(kd.derivative_value(QuaternionD(r)).w == doctest::Approx((1 + r) / std::pow(1 - r, 3)).epsilon(1e-12));
  CHECK_THROWS_AS(k.value(lit("1")), SingularityError);
}

TEST_CASE("sums, products and reciprocals") {
  test::Gen gen(32);
  for (int n = 0; n < 20; ++n) {
    std::vector<QuaternionQ> a, b;
    for (int m = 0; m <= 3; ++m) {
      a.push_back(gen.quaternion());
      b.push_back(gen.quaternion());
    }
    a[0] = lit("1");
    const SliceRational<Rational> f{SlicePolynomial<Rational>(a)};
    const SliceRational<Rational> g = SliceRational<Rational>::reciprocal(SlicePolynomial<Rational>(a));
    const SliceRational<Rational> h{SlicePolynomial<Rational>(b)};
    const SeriesQ fs = f.series(12), gs = g.series(12), hs = h.series(12);
    CHECK(star_mul(g, h).series(12) == star_mul(gs, hs));
    CHECK((g + h).series(12) == gs + hs);
    CHECK(g.series(12) == star_reciprocal(fs.truncated(12)).truncated(12));
    CHECK(g.reciprocal().series(12) == fs);
    CHECK(star_mul(g, f).series(12) == SeriesQ::constant(lit("1"), 12));
    CHECK(g.derivative().series(11) == slice_derivative(gs));
    const QuaternionQ q = gen.quaternion() * make_rational(1, 40);
    CHECK(g.derivative().value(q) == g.derivative_value(q));
  }
}

TEST_CASE("pointwise derivative with separate factors") {
  const auto r = rogosinski_rational(lit("3/5i"), lit("j"));
  const auto rd = rational_cast<double>(r);
  const QuaternionD q(0.2, 0.3, -0.1, 0.4);
  const double h = 1e-6;
  // a real step stays in the slice of q, where f' is the complex derivative
  const QuaternionD step(h);
  const QuaternionD numeric = (rd.value(q + step) - rd.value(q - step)) / (2 * h);
  CHECK(abs(numeric - rd.derivative_value(q)) < 1e-8);
}

#pragma once

#include "srgft/function.hpp"
#include "srgft/grid.hpp"
#include "srgft/random.hpp"

#include <optional>
#include <string>

namespace srgft {

enum class Certificate { AnalyticSufficient, Sampled, Refuted };

std::string_view certificate_name(Certificate c);

struct ClassVerdict {
  std::string class_name;
  bool member = false;
  Certificate certificate = Certificate::Sampled;
  double margin = 0.0;
  std::optional<QuaternionD> witness;   // grid point
  std::optional<int> witness_index;     // coefficient index
  std::optional<QuaternionD> unit;      // common slice of a one-slice function
};

template <Scalar T>
void require_unit(const Quaternion<T>& u) {
  if constexpr (is_exact_v<T>) {
    if (u.norm2() != 1) throw DomainError("expected a unit quaternion");
  } else {
    if (!(std::fabs(u.norm2() - 1.0) <= 1e-12)) throw DomainError("expected a unit quaternion");
  }
}

// Closed forms --------------------------------------------------------------

/// (1 - q u)^{-*}.
template <Scalar T>
SliceRational<T> linear_reciprocal(const Quaternion<T>& u) {
  using P = SlicePolynomial<T>;
  return SliceRational<T>::reciprocal(P({Quaternion<T>(T(1)), -u}));
}

/// q (1 - q u)^{-*2}, coefficients n u^{n-1}.
template <Scalar T>
SliceRational<T> koebe_rational(const Quaternion<T>& u) {
  require_unit(u);
  const auto r = linear_reciprocal(u);
  return star_mul(r, r).shifted(1);
}

/// (1 - q u)^{-*} * (1 + q u), coefficients 2 u^n.
template <Scalar T>
SliceRational<T> caratheodory_rational(const Quaternion<T>& u) {
  require_unit(u);
  using P = SlicePolynomial<T>;
  return star_mul(linear_reciprocal(u), SliceRational<T>(P({Quaternion<T>(T(1)), u})));
}

/// sum_m w_m (1 - q u_m)^{-*} * (1 + q u_m).
template <Scalar T>
SliceRational<T> caratheodory_combination(const std::vector<T>& weights, const std::vector<Quaternion<T>>& units) {
  if (weights.empty() || weights.size() != units.size()) throw PreconditionError("weights and units must match");
  T total(0);
  for (const auto& w : weights) {
    if (sign_of(w) < 0) throw PreconditionError("weights must be nonnegative");
    total += w;
  }
  if constexpr (is_exact_v<T>) {
    if (total != 1) throw PreconditionError("weights must sum to 1");
  } else {
    if (!(std::fabs(total - 1.0) <= 1e-12)) throw PreconditionError("weights must sum to 1");
  }
  SliceRational<T> acc = caratheodory_rational(units[0]).scaled(weights[0]);
  for (std::size_t m = 1; m < units.size(); ++m) acc = acc + caratheodory_rational(units[m]).scaled(weights[m]);
  return acc;
}

/// phi_a = (1 - q abar)^{-*} * (a - q).
template <Scalar T>
SliceRational<T> mobius_rational(const Quaternion<T>& a) {
  if constexpr (is_exact_v<T>) {
    if (a.norm2() > 1) throw DomainError("Moebius parameter must satisfy |a| <= 1");
  } else {
    if (!(a.norm2() <= 1.0)) throw DomainError("Moebius parameter must satisfy |a| <= 1");
  }
  using P = SlicePolynomial<T>;
  return star_mul(linear_reciprocal(a.conj()), SliceRational<T>(P({a, Quaternion<T>(T(-1))})));
}

/// q (1 - q|b|p)^{-*} * (|b| - q p) b/|b|.
template <Scalar T>
SliceRational<T> rogosinski_rational(const Quaternion<T>& b, const Quaternion<T>& p) {
  if (b.is_zero()) throw DomainError("Rogosinski extremal needs b != 0 (use q^2 u for b = 0)");
  const T nb = scalar_sqrt(b.norm2());
  if (!(nb < T(1))) throw DomainError("Rogosinski extremal needs |b| < 1");
  if (!(p.norm2() <= T(1))) throw DomainError("Rogosinski extremal needs |p| <= 1");
  using P = SlicePolynomial<T>;
  const Quaternion<T> c = b / nb;
  return star_mul(linear_reciprocal(p * nb), SliceRational<T>(P({Quaternion<T>(nb), -p})))
      .shifted(1)
      .right_mul(c);
}

/// q (1 - q)^{-*}, the convex extremal.
template <Scalar T>
SliceRational<T> convex_extremal_rational() {
  return linear_reciprocal(Quaternion<T>(T(1))).shifted(1);
}

/// q (1 - q^2)^{-*}, odd starlike extremal.
template <Scalar T>
SliceRational<T> odd_starlike_rational() {
  using Q = Quaternion<T>;
  return {SlicePolynomial<T>({Q(T(1)), Q(), Q(T(-1))}), SlicePolynomial<T>::identity()};
}

/// Series of q (1 - q u)^{-*2}: a_n = n u^{n-1} for 1 <= n <= degree.
template <Scalar T>
SliceSeries<T> koebe(const Quaternion<T>& u, int degree) {
  require_unit(u);
  std::vector<Quaternion<T>> c(static_cast<std::size_t>(std::max(degree, 0) + 1));
  Quaternion<T> pw(T(1));
  for (int n = 1; n <= degree; ++n) {
    c[static_cast<std::size_t>(n)] = pw * T(n);
    pw = pw * u;
  }
  return SliceSeries<T>::from_coefficients(std::move(c), degree);
}

template <Scalar T>
SliceSeries<T> rogosinski_extremal(const Quaternion<T>& b, const Quaternion<T>& p, int degree) {
  return rogosinski_rational(b, p).series(degree);
}

/// f' = q^{-1} h * p integrated from 0; n a_n = p_{n-1} + h_2 p_{n-2} + ... + h_n.
template <Scalar T>
SliceSeries<T> generate_class_c(const SliceSeries<T>& h, const SliceSeries<T>& p) {
  return integrate_radial(star_mul(h, p).shifted(-1));
}

/// The function whose coefficients are 1/n on odd n: artanh on each slice.
SliceFunction bloch_function();
SliceFunction identity_function();

// Predicates ----------------------------------------------------------------

/// p(0) = 1 and Re p > 0 on the grid.
ClassVerdict is_caratheodory(const SliceFunction& p, const SamplingGrid& grid);
/// f(0) = 0, f'(0) = 1, no grid zero and Re(f^{-1} q f') > alpha on the
/// grid. Polynomials with sum (n - alpha)|a_n| <= 1 - alpha are reported as
/// analytically certified.
ClassVerdict is_sstar(const SliceFunction& f, const SamplingGrid& grid, double alpha = 0.0);
/// Re(h^{-1} q f') > 0 on the grid; h must pass is_sstar.
ClassVerdict is_class_c(const SliceFunction& f, const SliceFunction& h, const SamplingGrid& grid);

template <Scalar T>
ClassVerdict is_slice_preserving(const SliceSeries<T>& f) {
  ClassVerdict v{"N(B)", true, Certificate::AnalyticSufficient, 0.0, {}, {}, {}};
  for (int n = f.valuation(); n <= f.degree(); ++n) {
    if (!f.coeff(n).is_real()) {
      v.member = false;
      v.certificate = Certificate::Refuted;
      v.witness_index = n;
      v.margin = -std::sqrt(to_double(f.coeff(n).imag_norm2()));
      return v;
    }
  }
  return v;
}

template <Scalar T>
ClassVerdict is_one_slice(const SliceSeries<T>& f) {
  ClassVerdict v{"V(B)", true, Certificate::AnalyticSufficient, 0.0, {}, {}, QuaternionD::i()};
  std::optional<Quaternion<T>> axis;
  for (int n = f.valuation(); n <= f.degree(); ++n) {
    const Quaternion<T> im = f.coeff(n).imag();
    if (im.is_zero()) continue;
    if (!axis) {
      axis = im;
      const QuaternionD d = quaternion_cast<double>(im);
      v.unit = d / std::sqrt(d.imag_norm2());
      continue;
    }
    const Quaternion<T> cross = mul(*axis, im).imag();  // vector part of the product is the cross product
    if (!cross.is_zero()) {
      v.member = false;
      v.certificate = Certificate::Refuted;
      v.witness_index = n;
      v.unit.reset();
      return v;
    }
  }
  return v;
}

// Generators ----------------------------------------------------------------

/// q + sum_{n > gap} q^n a_n with random quaternion directions and exact
/// rational moduli rescaled so that sum (n - alpha)|a_n| <= 1 - alpha.
SeriesQ generate_small_coeff_sstar(std::uint64_t seed, int degree, const Rational& alpha = 0, int gap = 1);

struct CaratheodoryMixture {
  std::vector<Rational> weights;
  std::vector<QuaternionQ> units;
};

/// Convex combination of k Caratheodory extremals with random rational
/// weights and rational unit directions.
CaratheodoryMixture generate_caratheodory_mixture(std::uint64_t seed, int k);
SliceRational<Rational> generate_caratheodory_rational(std::uint64_t seed, int k);
SeriesQ generate_caratheodory(std::uint64_t seed, int degree, int k);

/// Class C member with f' = q^{-1} h * p. Both factors are screened with
/// their predicates on the grid first.
SliceFunction class_c_function(const SliceFunction& h, const SliceFunction& p, std::string id,
                               const SamplingGrid& grid);

}  // namespace srgft

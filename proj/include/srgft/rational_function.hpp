#pragma once

#include "srgft/series.hpp"

#include <vector>

namespace srgft {

/// Finite left polynomial sum_{n=0}^{d} q^n c_n (no truncation: every
/// coefficient past d is zero).
template <Scalar T>
class SlicePolynomial {
public:
  using Coefficient = Quaternion<T>;

  SlicePolynomial() = default;
  explicit SlicePolynomial(std::vector<Coefficient> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static SlicePolynomial constant(const Coefficient& c) { return SlicePolynomial({c}); }
  static SlicePolynomial monomial(int power, const Coefficient& c) {
    std::vector<Coefficient> v(static_cast<std::size_t>(power + 1));
    v.back() = c;
    return SlicePolynomial(std::move(v));
  }
  static SlicePolynomial identity() { return monomial(1, Coefficient(T(1))); }
  /// Treats the stored coefficients of a series with nonnegative valuation as
  /// the complete coefficient list.
  static SlicePolynomial from_series(const SliceSeries<T>& f) {
    if (f.valuation() < 0) throw DomainError("polynomial from a series with negative powers");
    std::vector<Coefficient> v(static_cast<std::size_t>(f.valuation()));
    v.insert(v.end(), f.coefficients().begin(), f.coefficients().end());
    return SlicePolynomial(std::move(v));
  }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Coefficient> coefficients() const { return coeffs_; }
  Coefficient coeff(int n) const {
    return n >= 0 && n <= degree() ? coeffs_[static_cast<std::size_t>(n)] : Coefficient();
  }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_real() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return c.is_real(); });
  }

  Coefficient operator()(const Quaternion<T>& q) const { return detail::horner<T>(coeffs_, q); }

  SlicePolynomial derivative() const {
    std::vector<Coefficient> out;
    for (std::size_t n = 1; n < coeffs_.size(); ++n) out.push_back(coeffs_[n] * T(static_cast<long>(n)));
    return SlicePolynomial(std::move(out));
  }
  SlicePolynomial conj() const {
    std::vector<Coefficient> out;
    for (const auto& c : coeffs_) out.push_back(c.conj());
    return SlicePolynomial(std::move(out));
  }
  SlicePolynomial right_mul(const Coefficient& c) const {
    std::vector<Coefficient> out;
    for (const auto& a : coeffs_) out.push_back(a * c);
    return SlicePolynomial(std::move(out));
  }
  SlicePolynomial scaled(const T& s) const {
    std::vector<Coefficient> out;
    for (const auto& a : coeffs_) out.push_back(a * s);
    return SlicePolynomial(std::move(out));
  }
  /// q^k p for k >= 0.
  SlicePolynomial shifted(int k) const {
    std::vector<Coefficient> out(static_cast<std::size_t>(k));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return SlicePolynomial(std::move(out));
  }
  /// q^{-1} p, defined when p(0) = 0.
  SlicePolynomial divided_by_q() const {
    if (is_zero()) return {};
    if (!coeffs_.front().is_zero()) throw DomainError("polynomial does not vanish at 0");
    return SlicePolynomial(std::vector<Coefficient>(coeffs_.begin() + 1, coeffs_.end()));
  }

  SliceSeries<T> to_series(int degree) const {
    return SliceSeries<T>::from_coefficients(coeffs_, degree);
  }

  friend SlicePolynomial operator+(const SlicePolynomial& a, const SlicePolynomial& b) {
    std::vector<Coefficient> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = a.coeff(static_cast<int>(n)) + b.coeff(static_cast<int>(n));
    return SlicePolynomial(std::move(out));
  }
  friend SlicePolynomial operator-(const SlicePolynomial& a, const SlicePolynomial& b) {
    return a + b.scaled(T(-1));
  }
  friend bool operator==(const SlicePolynomial& a, const SlicePolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }
  std::vector<Coefficient> coeffs_;
};

/// Regular product of polynomials.
template <Scalar T>
SlicePolynomial<T> star_mul(const SlicePolynomial<T>& f, const SlicePolynomial<T>& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const std::size_t len = f.coefficients().size() + g.coefficients().size() - 1;
  return SlicePolynomial<T>(detail::convolve<T>(f.coefficients(), g.coefficients(), len));
}

template <Scalar T>
SlicePolynomial<T> symmetrize(const SlicePolynomial<T>& f) {
  // (f * f^c)_n = sum_k a_k conj(a_{n-k}); the imaginary parts cancel in
  // pairs, so only the real parts a_k . a_{n-k} are accumulated.
  const auto& a = f.coefficients();
  if (a.empty()) return {};
  std::vector<Quaternion<T>> out(2 * a.size() - 1);
  for (std::size_t n = 0; n < out.size(); ++n) {
    T sum(0);
    for (std::size_t k = n + 1 > a.size() ? n + 1 - a.size() : 0; k <= n && k < a.size(); ++k) {
      const auto& x = a[k];
      const auto& y = a[n - k];
      sum += x.w * y.w + x.x * y.x + x.y * y.y + x.z * y.z;
    }
    out[n] = Quaternion<T>(sum);
  }
  return SlicePolynomial<T>(std::move(out));
}

/// Slice regular function S^{-1} M with S = F_1 ... F_k a product of
/// polynomials with real coefficients. Real coefficient factors are central
/// for the regular product, so this family is closed under sums, regular
/// products and regular reciprocals, and pointwise S(q)^{-1} M(q) is exactly
/// the value: S(q) lies in the slice of q and commutes with everything there.
/// The factors are kept separate so that values near a boundary zero are not
/// computed from an expanded, cancellation prone product.
template <Scalar T>
class SliceRational {
public:
  using Coefficient = Quaternion<T>;
  using Polynomial = SlicePolynomial<T>;

  SliceRational() = default;
  SliceRational(std::vector<Polynomial> factors, Polynomial numerator)
      : factors_(std::move(factors)), num_(std::move(numerator)) {
    for (const auto& f : factors_) {
      if (!f.is_real()) throw DomainError("denominator factors must have real coefficients");
      if (f.coeff(0).is_zero()) throw DomainError("denominator must not vanish at 0");
    }
  }
  SliceRational(Polynomial denominator, Polynomial numerator)
      : SliceRational(std::vector<Polynomial>{std::move(denominator)}, std::move(numerator)) {}
  explicit SliceRational(Polynomial numerator) : num_(std::move(numerator)) {}

  /// p^{-*} = (p^s)^{-1} p^c; a real coefficient p is its own denominator.
  static SliceRational reciprocal(const Polynomial& p) {
    if (p.is_zero()) throw DomainError("regular reciprocal of the zero function");
    if (p.is_real()) return {p, Polynomial::constant(Coefficient(T(1)))};
    return {symmetrize(p), p.conj()};
  }

  std::span<const Polynomial> factors() const { return factors_; }
  Polynomial denominator() const {
    Polynomial s = Polynomial::constant(Coefficient(T(1)));
    for (const auto& f : factors_) s = star_mul(s, f);
    return s;
  }
  const Polynomial& numerator() const { return num_; }
  bool is_polynomial() const { return factors_.empty(); }

  /// Pointwise S(q)^{-1} M(q). Points with |S(q)| below the threshold are
  /// refused (exactly zero in exact mode).
  Coefficient value(const Quaternion<T>& q, double singular_threshold = kSingularThreshold) const {
    return denominator_inverse(q, singular_threshold) * num_(q);
  }
  /// (S^{-1} M)' = S^{-1} (M' - (S'/S) M) with S'/S = sum F_i'/F_i, all
  /// real factors commuting in the slice of q.
  Coefficient derivative_value(const Quaternion<T>& q, double singular_threshold = kSingularThreshold) const {
    const Coefficient s_inv = denominator_inverse(q, singular_threshold);
    Coefficient log_derivative;
    for (const auto& f : factors_) log_derivative += f.derivative()(q) * inverse(f(q));
    return s_inv * (num_.derivative()(q) - log_derivative * num_(q));
  }

  SliceRational derivative() const {
    if (factors_.empty()) return SliceRational(num_.derivative());
    const Polynomial s = denominator();
    std::vector<Polynomial> squared = factors_;
    squared.insert(squared.end(), factors_.begin(), factors_.end());
    return {std::move(squared), star_mul(s, num_.derivative()) - star_mul(s.derivative(), num_)};
  }
  SliceRational conj() const { return {factors_, num_.conj()}; }
  SliceRational right_mul(const Coefficient& c) const { return {factors_, num_.right_mul(c)}; }
  SliceRational scaled(const T& s) const { return {factors_, num_.scaled(s)}; }
  SliceRational shifted(int k) const { return {factors_, num_.shifted(k)}; }
  SliceRational divided_by_q() const { return {factors_, num_.divided_by_q()}; }

  /// (S^{-1} M)^{-*} = (M^s)^{-1} S M^c.
  SliceRational reciprocal() const {
    if (num_.is_zero()) throw DomainError("regular reciprocal of the zero function");
    if (num_.is_real()) return {num_, denominator()};
    return {symmetrize(num_), star_mul(denominator(), num_.conj())};
  }

  /// Power series expansion through `degree`.
  SliceSeries<T> series(int degree) const {
    if (degree < 0) return SliceSeries<T>::zero(degree);
    const std::size_t len = static_cast<std::size_t>(degree + 1);
    std::vector<T> s;
    const Polynomial den = denominator();
    for (const auto& c : den.coefficients()) s.push_back(c.w);
    const std::vector<T> inv = invert_real<T>(s, len);
    std::vector<Coefficient> inv_q(inv.begin(), inv.end());
    return SliceSeries<T>::from_coefficients(detail::convolve<T>(inv_q, num_.coefficients(), len), degree);
  }

  friend SliceRational operator+(const SliceRational& a, const SliceRational& b) {
    if (a.factors_ == b.factors_) return {a.factors_, a.num_ + b.num_};
    std::vector<Polynomial> f = a.factors_;
    f.insert(f.end(), b.factors_.begin(), b.factors_.end());
    return {std::move(f), star_mul(b.denominator(), a.num_) + star_mul(a.denominator(), b.num_)};
  }
  friend SliceRational operator-(const SliceRational& a, const SliceRational& b) { return a + b.scaled(T(-1)); }

  friend SliceRational star_mul(const SliceRational& f, const SliceRational& g) {
    std::vector<Polynomial> d = f.factors_;
    d.insert(d.end(), g.factors_.begin(), g.factors_.end());
    return {std::move(d), star_mul(f.num_, g.num_)};
  }

  static constexpr double kSingularThreshold = 1e-14;

private:
  Coefficient denominator_inverse(const Quaternion<T>& q, double threshold) const {
    Coefficient s(T(1));
    for (const auto& f : factors_) s = s * f(q);
    if constexpr (is_exact_v<T>) {
      if (s.is_zero()) throw SingularityError("evaluation at a zero of the denominator");
    } else {
      if (!(abs(s) >= threshold)) throw SingularityError("evaluation too close to a zero of the denominator");
    }
    return inverse(s);
  }

  std::vector<Polynomial> factors_;
  Polynomial num_;
};

template <Scalar To, Scalar From>
SlicePolynomial<To> polynomial_cast(const SlicePolynomial<From>& p) {
  std::vector<Quaternion<To>> out;
  for (const auto& c : p.coefficients()) out.push_back(quaternion_cast<To>(c));
  return SlicePolynomial<To>(std::move(out));
}

template <Scalar To, Scalar From>
SliceRational<To> rational_cast(const SliceRational<From>& f) {
  std::vector<SlicePolynomial<To>> factors;
  for (const auto& p : f.factors()) factors.push_back(polynomial_cast<To>(p));
  return {std::move(factors), polynomial_cast<To>(f.numerator())};
}

extern template class SlicePolynomial<Rational>;
extern template class SlicePolynomial<double>;
extern template class SliceRational<Rational>;
extern template class SliceRational<double>;

}  // namespace srgft

#pragma once

#include "srgft/quaternion.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace srgft {

/// Truncated left series sum_{n=v}^{N} q^n a_n (powers of q on the left,
/// coefficients on the right). Coefficients past the truncation degree N are
/// unknown, so every operation propagates the degree through which its
/// result is still exact. The valuation v may be negative after a regular
/// reciprocal; powers of q are central, so shifting by them is harmless.
template <Scalar T>
class SliceSeries {
public:
  using Coefficient = Quaternion<T>;

  SliceSeries() : SliceSeries(0, {Coefficient()}, 0) {}

  /// coeffs[k] is the coefficient of q^(valuation + k); the length must be
  /// degree - valuation + 1. Leading zeros are stripped.
  SliceSeries(int valuation, std::vector<Coefficient> coeffs, int degree)
      : valuation_(valuation), degree_(degree), coeffs_(std::move(coeffs)) {
    if (static_cast<long>(coeffs_.size()) != static_cast<long>(degree) - valuation + 1) {
      throw std::invalid_argument("series coefficient count must equal degree - valuation + 1");
    }
    normalize();
  }

  static SliceSeries zero(int degree) {
    const int v = std::min(0, degree + 1);
    return SliceSeries(v, std::vector<Coefficient>(static_cast<std::size_t>(degree - v + 1)), degree);
  }
  static SliceSeries constant(const Coefficient& c, int degree) { return monomial(0, c, degree); }
  static SliceSeries monomial(int power, const Coefficient& c, int degree) {
    if (power > degree) return zero(degree);
    std::vector<Coefficient> coeffs(static_cast<std::size_t>(degree - power + 1));
    coeffs.front() = c;
    return SliceSeries(power, std::move(coeffs), degree);
  }
  /// Coefficients of q^0, q^1, ...; padded with zeros or cut at `degree`.
  static SliceSeries from_coefficients(std::vector<Coefficient> coeffs, int degree) {
    coeffs.resize(static_cast<std::size_t>(std::max(degree + 1, 0)));
    if (degree < 0) return zero(degree);
    return SliceSeries(0, std::move(coeffs), degree);
  }

  int valuation() const { return valuation_; }
  int degree() const { return degree_; }
  std::span<const Coefficient> coefficients() const { return coeffs_; }

  /// a_n; zero below the valuation, out_of_range past the truncation degree.
  Coefficient coeff(int n) const {
    if (n > degree_) throw std::out_of_range("coefficient " + std::to_string(n) + " is past the truncation degree");
    if (n < valuation_) return {};
    return coeffs_[static_cast<std::size_t>(n - valuation_)];
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Coefficient& c) { return c.is_zero(); });
  }

  SliceSeries truncated(int degree) const {
    if (degree >= degree_) return *this;
    if (degree < valuation_) return zero(degree);
    std::vector<Coefficient> c(coeffs_.begin(), coeffs_.begin() + (degree - valuation_ + 1));
    return SliceSeries(valuation_, std::move(c), degree);
  }

  /// q^k f.
  SliceSeries shifted(int k) const { return SliceSeries(valuation_ + k, coeffs_, degree_ + k); }

  /// f * c for a constant c (right multiplication keeps slice regularity).
  SliceSeries right_mul(const Coefficient& c) const {
    std::vector<Coefficient> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * c);
    return SliceSeries(valuation_, std::move(out), degree_);
  }
  SliceSeries scaled(const T& s) const {
    std::vector<Coefficient> out;
    out.reserve(coeffs_.size());
    for (const auto& a : coeffs_) out.push_back(a * s);
    return SliceSeries(valuation_, std::move(out), degree_);
  }

  friend SliceSeries operator+(const SliceSeries& f, const SliceSeries& g) { return combine(f, g, false); }
  friend SliceSeries operator-(const SliceSeries& f, const SliceSeries& g) { return combine(f, g, true); }
  friend SliceSeries operator-(const SliceSeries& f) { return f.scaled(T(-1)); }

  friend bool operator==(const SliceSeries& a, const SliceSeries& b) {
    return a.valuation_ == b.valuation_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }

private:
  static SliceSeries combine(const SliceSeries& f, const SliceSeries& g, bool subtract) {
    const int degree = std::min(f.degree_, g.degree_);
    const int v = std::min({f.valuation_, g.valuation_, degree + 1});
    std::vector<Coefficient> out(static_cast<std::size_t>(degree - v + 1));
    for (int n = v; n <= degree; ++n) {
      Coefficient c = f.coeff(n);
      if (subtract) {
        c -= g.coeff(n);
      } else {
        c += g.coeff(n);
      }
      out[static_cast<std::size_t>(n - v)] = std::move(c);
    }
    return SliceSeries(v, std::move(out), degree);
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
      const int v = std::min(0, degree_ + 1);
      coeffs_.assign(static_cast<std::size_t>(degree_ - v + 1), Coefficient());
      valuation_ = v;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
      valuation_ += static_cast<int>(lead);
    }
  }

  int valuation_;
  int degree_;
  std::vector<Coefficient> coeffs_;
};

using SeriesQ = SliceSeries<Rational>;
using SeriesD = SliceSeries<double>;

/// Evaluation guard for expressions involving a regular reciprocal: points
/// where the symmetrization is smaller than the threshold are refused.
struct EvalDomain {
  double singular_threshold = 1e-8;
};

namespace detail {

/// c_n = sum_k a_k b_{n-k} for n < out_len, order of factors preserved.
template <Scalar T>
std::vector<Quaternion<T>> convolve(std::span<const Quaternion<T>> a, std::span<const Quaternion<T>> b,
                                    std::size_t out_len) {
  std::vector<Quaternion<T>> c(out_len);
  for (std::size_t i = 0; i < a.size() && i < out_len; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < out_len; ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

/// Left-nested Horner sum_k q^k c_k.
template <Scalar T>
Quaternion<T> horner(std::span<const Quaternion<T>> c, const Quaternion<T>& q) {
  Quaternion<T> acc;
  for (std::size_t k = c.size(); k-- > 0;) acc = c[k] + q * acc;
  return acc;
}

template <Scalar T>
bool inside_unit_ball(const Quaternion<T>& q) {
  return q.norm2() < T(1);
}

}  // namespace detail

/// f(q) = q^v (a_v + q (a_{v+1} + ...)).
template <Scalar T>
Quaternion<T> eval(const SliceSeries<T>& f, const Quaternion<T>& q) {
  if (!detail::inside_unit_ball(q)) throw DomainError("evaluation point outside the open unit ball");
  if (f.valuation() < 0 && q.is_zero()) throw SingularityError("series with negative valuation evaluated at 0");
  const Quaternion<T> body = detail::horner(f.coefficients(), q);
  if (f.valuation() == 0) return body;
  return power(q, f.valuation()) * body;
}

/// Coefficient n a_n at power n - 1.
template <Scalar T>
SliceSeries<T> slice_derivative(const SliceSeries<T>& f) {
  const int v = f.valuation();
  std::vector<Quaternion<T>> out;
  out.reserve(f.coefficients().size());
  for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
    const int n = v + static_cast<int>(k);
    out.push_back(f.coefficients()[k] * T(n));
  }
  return SliceSeries<T>(v - 1, std::move(out), f.degree() - 1);
}

/// Regular (star) product: Cauchy convolution with the order f then g.
template <Scalar T>
SliceSeries<T> star_mul(const SliceSeries<T>& f, const SliceSeries<T>& g) {
  const int v = f.valuation() + g.valuation();
  const int degree = std::min(f.degree() + g.valuation(), g.degree() + f.valuation());
  if (degree < v) return SliceSeries<T>::zero(degree);
  auto c = detail::convolve<T>(f.coefficients(), g.coefficients(), static_cast<std::size_t>(degree - v + 1));
  return SliceSeries<T>(v, std::move(c), degree);
}

template <Scalar T>
SliceSeries<T> regular_conjugate(const SliceSeries<T>& f) {
  std::vector<Quaternion<T>> out;
  out.reserve(f.coefficients().size());
  for (const auto& a : f.coefficients()) out.push_back(a.conj());
  return SliceSeries<T>(f.valuation(), std::move(out), f.degree());
}

/// f * f^c. The terms a_k conj(a_{n-k}) and a_{n-k} conj(a_k) are conjugate,
/// so each pair is accumulated as twice its real part; the result is real in
/// both scalar modes.
template <Scalar T>
SliceSeries<T> symmetrize(const SliceSeries<T>& f) {
  const int v = 2 * f.valuation();
  const int degree = f.degree() + f.valuation();
  if (degree < v) return SliceSeries<T>::zero(degree);
  const auto a = f.coefficients();
  const std::size_t len = static_cast<std::size_t>(degree - v + 1);
  std::vector<Quaternion<T>> out(len);
  for (std::size_t n = 0; n < len; ++n) {
    T sum(0);
    for (std::size_t k = 0; k <= n / 2 && k < a.size(); ++k) {
      const std::size_t l = n - k;
      if (l >= a.size()) continue;
      T pair = a[k].w * a[l].w + a[k].x * a[l].x + a[k].y * a[l].y + a[k].z * a[l].z;
      if (k != l) pair *= T(2);
      sum += pair;
    }
    out[n] = Quaternion<T>(sum);
  }
  return SliceSeries<T>(v, std::move(out), degree);
}

/// Inverse of a series with real coefficients and nonzero constant term, by
/// the recursion b_n = -(sum_{k<n} b_k s_{n-k}) / s_0.
template <Scalar T>
std::vector<T> invert_real(std::span<const T> s, std::size_t len) {
  if (s.empty() || is_zero(s[0])) throw DomainError("real series with zero constant term is not invertible");
  std::vector<T> b(len);
  const T inv0 = T(1) / s[0];
  for (std::size_t n = 0; n < len; ++n) {
    T acc = n == 0 ? T(1) : T(0);
    for (std::size_t k = 1; k <= n && k < s.size(); ++k) acc -= s[k] * b[n - k];
    b[n] = acc * inv0;
  }
  return b;
}

/// f^{-*} = (f^s)^{-1} f^c. With f = q^v g, the symmetrization is q^{2v} g^s
/// and the reciprocal q^{-v} (g^s)^{-1} g^c, exact through degree N - 2v.
template <Scalar T>
SliceSeries<T> star_reciprocal(const SliceSeries<T>& f) {
  if (f.is_zero()) throw DomainError("regular reciprocal of the zero series");
  const int v = f.valuation();
  const SliceSeries<T> g = f.shifted(-v);
  const SliceSeries<T> gs = symmetrize(g);
  const std::size_t len = static_cast<std::size_t>(g.degree() + 1);
  std::vector<T> s;
  s.reserve(gs.coefficients().size());
  for (const auto& c : gs.coefficients()) s.push_back(c.w);
  const std::vector<T> inv = invert_real<T>(s, len);
  std::vector<Quaternion<T>> inv_q(inv.begin(), inv.end());
  const SliceSeries<T> gs_inv(0, std::move(inv_q), g.degree());
  return star_mul(gs_inv, regular_conjugate(g)).shifted(-v);
}

/// T_f(q) = f^c(q)^{-1} q f^c(q), defined off the zero set of f^s.
template <Scalar T>
Quaternion<T> quotient_transform(const SliceSeries<T>& f, const Quaternion<T>& q, const EvalDomain& domain = {}) {
  if (!detail::inside_unit_ball(q)) throw DomainError("evaluation point outside the open unit ball");
  const Quaternion<T> fs = eval(symmetrize(f), q);
  if constexpr (is_exact_v<T>) {
    if (fs.is_zero()) throw SingularityError("quotient transform at a zero of the symmetrization");
  } else {
    if (abs(fs) < domain.singular_threshold) {
      throw SingularityError("quotient transform too close to a zero of the symmetrization");
    }
  }
  const Quaternion<T> fc = eval(regular_conjugate(f), q);
  return inverse(fc) * q * fc;
}

template <Scalar T>
bool all_real(const SliceSeries<T>& f) {
  return std::all_of(f.coefficients().begin(), f.coefficients().end(),
                     [](const Quaternion<T>& c) { return c.is_real(); });
}

/// sum_n w(q)^n a_n for a slice preserving inner series w with w(0) = 0.
/// Real coefficients of w commute with everything, so the formal
/// substitution is a plain iterated convolution.
template <Scalar T>
SliceSeries<T> compose_slice_preserving(const SliceSeries<T>& f, const SliceSeries<T>& w) {
  if (!all_real(w)) throw DomainError("inner series must have real coefficients");
  if (w.is_zero()) {
    return SliceSeries<T>::constant(f.valuation() <= 0 ? f.coeff(0) : Quaternion<T>(), f.degree());
  }
  if (w.valuation() < 1) throw DomainError("inner series must vanish at 0");
  if (f.valuation() < 0) throw DomainError("outer series must not have negative valuation");
  const int vw = w.valuation();
  const int first = std::max(f.valuation(), 1);
  const int degree = std::min({f.degree(), (f.degree() + 1) * vw - 1, w.degree() + (first - 1) * vw});
  SliceSeries<T> acc = SliceSeries<T>::constant(f.valuation() == 0 ? f.coeff(0) : Quaternion<T>(), degree);
  SliceSeries<T> pw = w;  // w^n, exact through w.degree() + (n - 1) vw
  for (int n = 1; n <= f.degree() && n * vw <= degree; ++n) {
    if (n >= first) acc = acc + pw.right_mul(f.coeff(n)).truncated(degree);
    pw = star_mul(pw, w);
  }
  return acc;
}

/// Primitive with f(0) = 0: coefficient g_n / (n + 1) at power n + 1.
template <Scalar T>
SliceSeries<T> integrate_radial(const SliceSeries<T>& g) {
  if (g.valuation() < 0) throw DomainError("radial primitive needs a series without negative powers");
  std::vector<Quaternion<T>> out;
  out.reserve(g.coefficients().size());
  for (std::size_t k = 0; k < g.coefficients().size(); ++k) {
    const int n = g.valuation() + static_cast<int>(k);
    out.push_back(g.coefficients()[k] / T(n + 1));
  }
  return SliceSeries<T>(g.valuation() + 1, std::move(out), g.degree() + 1);
}

/// (f(q) - f(-q)) / 2.
template <Scalar T>
SliceSeries<T> odd_part(const SliceSeries<T>& f) {
  std::vector<Quaternion<T>> out(f.coefficients().begin(), f.coefficients().end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    const int n = f.valuation() + static_cast<int>(k);
    if (n % 2 == 0) out[k] = Quaternion<T>();
  }
  return SliceSeries<T>(f.valuation(), std::move(out), f.degree());
}

/// Regular Moebius map (1 - q conj(a))^{-*} * (a - q) expanded as
/// a - (1 - |a|^2) sum_{n>=1} q^n conj(a)^{n-1}.
template <Scalar T>
SliceSeries<T> mobius(const Quaternion<T>& a, int degree) {
  const T n2 = a.norm2();
  if (n2 > T(1)) throw DomainError("Moebius parameter must satisfy |a| <= 1");
  std::vector<Quaternion<T>> c(static_cast<std::size_t>(degree + 1));
  c[0] = a;
  const Quaternion<T> abar = a.conj();
  Quaternion<T> p(T(1));
  const T scale = T(1) - n2;
  for (int n = 1; n <= degree; ++n) {
    c[static_cast<std::size_t>(n)] = p * T(-scale);
    p = p * abar;
  }
  return SliceSeries<T>::from_coefficients(std::move(c), degree);
}

template <Scalar To, Scalar From>
SliceSeries<To> series_cast(const SliceSeries<From>& f) {
  std::vector<Quaternion<To>> out;
  out.reserve(f.coefficients().size());
  for (const auto& c : f.coefficients()) out.push_back(quaternion_cast<To>(c));
  return SliceSeries<To>(f.valuation(), std::move(out), f.degree());
}

extern template class SliceSeries<Rational>;
extern template class SliceSeries<double>;

}  // namespace srgft

#include "srgft/function.hpp"

#include <cmath>

namespace srgft {

std::string_view mode_name(Mode mode) { return mode == Mode::Exact ? "exact" : "float"; }

Mode parse_mode(std::string_view text) {
  if (text == "exact") return Mode::Exact;
  if (text == "float") return Mode::Float;
  throw PreconditionError("mode must be 'exact' or 'float'");
}

namespace {

bool all_real(const SliceRational<double>& f) {
  return f.numerator().is_real();
}

class RationalImpl final : public SliceFunction::Impl {
public:
  explicit RationalImpl(const SliceRational<Rational>& f) : exact_(f), approx_(rational_cast<double>(f)) {}
  explicit RationalImpl(const SliceRational<double>& f) : approx_(f) {}

  QuaternionD value(const QuaternionD& q) const override { return approx_.value(q); }
  QuaternionD derivative(const QuaternionD& q) const override { return approx_.derivative_value(q); }
  SeriesD series(int degree) const override {
    if (exact_) return series_cast<double>(exact_->series(degree));
    return approx_.series(degree);
  }
  std::optional<SeriesQ> exact_series(int degree) const override {
    if (!exact_) return std::nullopt;
    return exact_->series(degree);
  }
  const SliceRational<double>* rational() const override { return &approx_; }
  const SliceRational<Rational>* exact_rational() const override { return exact_ ? &*exact_ : nullptr; }
  bool slice_preserving() const override { return all_real(approx_); }

private:
  std::optional<SliceRational<Rational>> exact_;
  SliceRational<double> approx_;
};

using ComplexMap = std::function<std::complex<double>(std::complex<double>)>;

class SlicePreservingImpl final : public SliceFunction::Impl {
public:
  SlicePreservingImpl(ComplexMap value, ComplexMap derivative, std::function<Rational(int)> coefficient)
      : value_(std::move(value)), derivative_(std::move(derivative)), coefficient_(std::move(coefficient)) {}

  QuaternionD value(const QuaternionD& q) const override { return lift(value_, q); }
  QuaternionD derivative(const QuaternionD& q) const override { return lift(derivative_, q); }
  SeriesD series(int degree) const override { return series_cast<double>(*exact_series(degree)); }
  std::optional<SeriesQ> exact_series(int degree) const override {
    std::vector<QuaternionQ> c;
    for (int n = 0; n <= degree; ++n) c.emplace_back(coefficient_(n));
    return SeriesQ::from_coefficients(std::move(c), degree);
  }
  bool slice_preserving() const override { return true; }

private:
  static QuaternionD lift(const ComplexMap& map, const QuaternionD& q) {
    if (!(abs(q) < 1.0)) throw DomainError("point outside the open unit ball");
    const auto c = decompose(q);
    const std::complex<double> w = map({c.x, c.y});
    return QuaternionD(w.real()) + c.unit.quaternion() * w.imag();
  }

  ComplexMap value_;
  ComplexMap derivative_;
  std::function<Rational(int)> coefficient_;
};

// Long enough that r^N stays below e^-40 up to |q| = 0.995.
constexpr int kPrimitiveLength = 8192;

class PrimitiveImpl final : public SliceFunction::Impl {
public:
  explicit PrimitiveImpl(const SliceRational<Rational>& d) : exact_(d), derivative_(rational_cast<double>(d)) { build(); }
  explicit PrimitiveImpl(const SliceRational<double>& d) : derivative_(d) { build(); }

  QuaternionD value(const QuaternionD& q) const override {
    const double r = abs(q);
    if (!(r < 1.0)) throw DomainError("point outside the open unit ball");
    int n = kPrimitiveLength;
    if (r > 0.0) n = static_cast<int>(std::ceil(-40.0 / std::log(r))) + 2;
    if (n > kPrimitiveLength) throw DomainError("point too close to the boundary for the primitive expansion");
    return detail::horner<double>(std::span<const QuaternionD>(coeffs_).first(static_cast<std::size_t>(n)), q);
  }
  QuaternionD derivative(const QuaternionD& q) const override { return derivative_.value(q); }
  SeriesD series(int degree) const override {
    if (exact_) return series_cast<double>(*exact_series(degree));
    return integrate_radial(derivative_.series(std::max(degree - 1, 0))).truncated(degree);
  }
  std::optional<SeriesQ> exact_series(int degree) const override {
    if (!exact_) return std::nullopt;
    return integrate_radial(exact_->series(std::max(degree - 1, 0))).truncated(degree);
  }
  bool slice_preserving() const override { return all_real(derivative_); }

private:
  void build() {
    const SeriesD g = derivative_.series(kPrimitiveLength - 2);
    coeffs_.assign(kPrimitiveLength, QuaternionD());
    for (int n = 0; n <= g.degree(); ++n) coeffs_[static_cast<std::size_t>(n + 1)] = g.coeff(n) / static_cast<double>(n + 1);
  }

  std::optional<SliceRational<Rational>> exact_;
  SliceRational<double> derivative_;
  std::vector<QuaternionD> coeffs_;
};

class ComposedImpl final : public SliceFunction::Impl {
public:
  ComposedImpl(SliceFunction outer, SliceFunction inner) : outer_(std::move(outer)), inner_(std::move(inner)) {}

  QuaternionD value(const QuaternionD& q) const override { return outer_.value(inner_.value(q)); }
  // w'(q) lies in the slice of q, as does w(q).
  QuaternionD derivative(const QuaternionD& q) const override {
    return inner_.derivative(q) * outer_.derivative(inner_.value(q));
  }
  SeriesD series(int degree) const override {
    return compose_slice_preserving(outer_.series(degree), inner_.series(degree));
  }
  std::optional<SeriesQ> exact_series(int degree) const override {
    auto f = outer_.exact_series(degree);
    auto w = inner_.exact_series(degree);
    if (!f || !w) return std::nullopt;
    return compose_slice_preserving(*f, *w);
  }
  bool slice_preserving() const override { return outer_.slice_preserving(); }

private:
  SliceFunction outer_;
  SliceFunction inner_;
};

}  // namespace

SliceFunction SliceFunction::from_rational(std::string id, const SliceRational<Rational>& f) {
  return {std::move(id), std::make_shared<RationalImpl>(f)};
}

SliceFunction SliceFunction::from_rational(std::string id, const SliceRational<double>& f) {
  return {std::move(id), std::make_shared<RationalImpl>(f)};
}

SliceFunction SliceFunction::from_series(std::string id, const SeriesQ& f) {
  return from_rational(std::move(id), SliceRational<Rational>(SlicePolynomial<Rational>::from_series(f)));
}

SliceFunction SliceFunction::from_series(std::string id, const SeriesD& f) {
  return from_rational(std::move(id), SliceRational<double>(SlicePolynomial<double>::from_series(f)));
}

SliceFunction SliceFunction::slice_preserving(std::string id, ComplexMap value, ComplexMap derivative,
                                              std::function<Rational(int)> coefficient) {
  return {std::move(id),
          std::make_shared<SlicePreservingImpl>(std::move(value), std::move(derivative), std::move(coefficient))};
}

SliceFunction SliceFunction::primitive(std::string id, const SliceRational<Rational>& derivative) {
  return {std::move(id), std::make_shared<PrimitiveImpl>(derivative)};
}

SliceFunction SliceFunction::primitive(std::string id, const SliceRational<double>& derivative) {
  return {std::move(id), std::make_shared<PrimitiveImpl>(derivative)};
}

SliceFunction SliceFunction::compose(const SliceFunction& inner, std::string id) const {
  if (!inner.slice_preserving()) throw DomainError("inner function of a composition must be slice preserving");
  const SeriesD w = inner.series(1);
  if (!w.coeff(0).is_zero()) throw DomainError("inner function of a composition must vanish at 0");
  return {std::move(id), std::make_shared<ComposedImpl>(*this, inner)};
}

}  // namespace srgft

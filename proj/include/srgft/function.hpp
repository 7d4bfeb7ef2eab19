#pragma once

#include "srgft/rational_function.hpp"

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <string>

namespace srgft {

enum class Mode { Exact, Float };

std::string_view mode_name(Mode mode);
Mode parse_mode(std::string_view text);

/// A slice regular function on the unit ball together with a way to evaluate
/// it pointwise without truncation error and to expand it to any degree.
/// Pointwise evaluation is always in floating point; coefficient expansion is
/// exact when the function was built from exact data.
class SliceFunction {
public:
  class Impl {
  public:
    virtual ~Impl() = default;
    virtual QuaternionD value(const QuaternionD& q) const = 0;
    virtual QuaternionD derivative(const QuaternionD& q) const = 0;
    virtual SeriesD series(int degree) const = 0;
    virtual std::optional<SeriesQ> exact_series(int /*degree*/) const { return std::nullopt; }
    virtual const SliceRational<double>* rational() const { return nullptr; }
    virtual const SliceRational<Rational>* exact_rational() const { return nullptr; }
    /// True when every coefficient is known to be real.
    virtual bool slice_preserving() const = 0;
  };

  SliceFunction(std::string id, std::shared_ptr<const Impl> impl) : id_(std::move(id)), impl_(std::move(impl)) {}

  static SliceFunction from_rational(std::string id, const SliceRational<Rational>& f);
  static SliceFunction from_rational(std::string id, const SliceRational<double>& f);
  /// The stored coefficients of a series are taken as a polynomial.
  static SliceFunction from_series(std::string id, const SeriesQ& f);
  static SliceFunction from_series(std::string id, const SeriesD& f);
  /// Function with real coefficients given by a complex closed form on each
  /// slice: f(x + yI) = Re F(x + iy) + I Im F(x + iy).
  static SliceFunction slice_preserving(std::string id, std::function<std::complex<double>(std::complex<double>)> value,
                                        std::function<std::complex<double>(std::complex<double>)> derivative,
                                        std::function<Rational(int)> coefficient);
  /// The primitive vanishing at 0 of a rational derivative. Values are summed
  /// from a long double precision expansion whose length adapts to |q|.
  static SliceFunction primitive(std::string id, const SliceRational<Rational>& derivative);
  static SliceFunction primitive(std::string id, const SliceRational<double>& derivative);

  /// f o w for slice preserving w with w(0) = 0.
  SliceFunction compose(const SliceFunction& inner, std::string id) const;

  const std::string& id() const { return id_; }
  SliceFunction renamed(std::string id) const { return {std::move(id), impl_}; }

  QuaternionD value(const QuaternionD& q) const { return impl_->value(q); }
  QuaternionD derivative(const QuaternionD& q) const { return impl_->derivative(q); }
  SeriesD series(int degree) const { return impl_->series(degree); }
  std::optional<SeriesQ> exact_series(int degree) const { return impl_->exact_series(degree); }
  const SliceRational<double>* rational() const { return impl_->rational(); }
  const SliceRational<Rational>* exact_rational() const { return impl_->exact_rational(); }
  bool is_exact() const { return impl_->exact_series(0).has_value(); }
  bool slice_preserving() const { return impl_->slice_preserving(); }

private:
  std::string id_;
  std::shared_ptr<const Impl> impl_;
};

}  // namespace srgft

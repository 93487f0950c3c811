#ifndef CIRCLEPOLY_FUNCTION_SPEC_HPP
#define CIRCLEPOLY_FUNCTION_SPEC_HPP

#include <cstddef>
#include <optional>
#include <variant>

#include "circlepoly/error.hpp"
#include "circlepoly/polynomial.hpp"
#include "circlepoly/series.hpp"

namespace circlepoly {

/// Largest radius at which an explicit coefficient list is trusted for
/// point evaluation. Beyond it the neglected tail may dominate.
inline constexpr double kExplicitSeriesRadius = 0.95;

/// A bounded analytic function f on the unit disk, in one of four forms:
/// f = 0, f = c, f = u/v with v zero-free on |z| <= 1, or a truncated
/// Taylor series. Every form supplies Taylor coefficients at 0 and point values.
class FunctionSpec {
 public:
  enum class Kind { Zero, Constant, RationalUV, ExplicitCoeffs };

  static FunctionSpec zero();
  static FunctionSpec constant(Complex c);
  /// Throws DenominatorVanishesInDisk unless v is certified zero-free on |z| <= 1.
  static FunctionSpec ratio(Polynomial numerator, Polynomial denominator);
  static FunctionSpec explicit_coeffs(TruncatedSeries series);

  Kind kind() const noexcept;

  /// Highest Taylor order this form can supply; nullopt when unlimited.
  std::optional<std::size_t> max_order() const noexcept;

  /// Taylor coefficients f_0..f_order. Throws OrderTooSmall past max_order().
  TruncatedSeries taylor(std::size_t order) const;

  /// f(z) for |z| < 1. Throws EvaluationFailure outside the disk and
  /// SeriesUnreliable for explicit coefficients beyond kExplicitSeriesRadius.
  Complex evaluate(Complex z) const;

  /// g(z) = exp(integral_0^z f). Closed form for Zero/Constant, radial
  /// Gauss-Legendre quadrature for RationalUV, the truncated g-series for
  /// ExplicitCoeffs (same radius limit as evaluate()).
  Complex exp_primitive(Complex z) const;

  const Complex* constant_value() const noexcept;
  const Polynomial* numerator() const noexcept;
  const Polynomial* denominator() const noexcept;
  const TruncatedSeries* series() const noexcept;

 private:
  struct Zero {};
  struct Constant {
    Complex value;
  };
  struct Rational {
    Polynomial u;
    Polynomial v;
  };
  struct Explicit {
    TruncatedSeries f;
    TruncatedSeries g;
  };
  using Repr = std::variant<Zero, Constant, Rational, Explicit>;

  explicit FunctionSpec(Repr repr) : repr_(std::move(repr)) {}

  Repr repr_;
};

}  // namespace circlepoly

#endif  // CIRCLEPOLY_FUNCTION_SPEC_HPP

#ifndef CIRCLEPOLY_SERIES_HPP
#define CIRCLEPOLY_SERIES_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "circlepoly/error.hpp"
#include "circlepoly/polynomial.hpp"

namespace circlepoly {

/// Taylor coefficients c_0..c_K of a function at the origin, truncated at
/// order K. Binary operations truncate to the shorter operand; extending an
/// order is always explicit via padded().
class TruncatedSeries {
 public:
  /// The order-0 series [0].
  TruncatedSeries();
  /// Throws InvalidArgument on an empty list and NonFinite on NaN/Inf entries.
  explicit TruncatedSeries(std::vector<Complex> coeffs);
  TruncatedSeries(std::initializer_list<Complex> coeffs);

  static TruncatedSeries zeros(std::size_t order);
  /// Coefficients of p up to z^order (zero-filled beyond deg p, truncated below it).
  static TruncatedSeries from_polynomial(const Polynomial& p, std::size_t order);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  Complex operator[](std::size_t k) const { return coeffs_.at(k); }

  TruncatedSeries truncated(std::size_t order) const;
  TruncatedSeries padded(std::size_t order) const;

  /// Partial sum sum_{k<=K} c_k z^k.
  Complex evaluate(Complex z) const noexcept;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Term-wise antiderivative vanishing at 0; order grows by one.
TruncatedSeries integrate(const TruncatedSeries& f);

/// Term-wise derivative; order drops by one (order 0 maps to [0]).
TruncatedSeries differentiate(const TruncatedSeries& f);

/// exp(F) for F with F(0) = 0, via (k+1) g_{k+1} = sum_j (j+1) F_{j+1} g_{k-j}.
/// Throws NonzeroConstantTerm otherwise.
TruncatedSeries exp_series(const TruncatedSeries& F);

/// Cauchy product truncated to min(a.order(), b.order()).
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

/// Quotient a / b truncated to min(orders). Throws ZeroConstantTerm if b(0) == 0.
TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries negate(const TruncatedSeries& a);

/// Taylor series of P'/P up to z^K. Throws ZeroConstantTerm if P(0) == 0.
TruncatedSeries log_derivative_series(const Polynomial& p, std::size_t order);

}  // namespace circlepoly

#endif  // CIRCLEPOLY_SERIES_HPP

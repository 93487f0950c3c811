#include "circlepoly/series.hpp"

#include <algorithm>
#include <cmath>

namespace circlepoly {

TruncatedSeries::TruncatedSeries() : coeffs_{Complex{}} {}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::InvalidArgument, "a truncated series needs at least one coefficient");
  }
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::NonFinite, "series coefficient is not finite");
    }
  }
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Complex> coeffs)
    : TruncatedSeries(std::vector<Complex>(coeffs)) {}

TruncatedSeries TruncatedSeries::zeros(std::size_t order) {
  return TruncatedSeries(std::vector<Complex>(order + 1));
}

TruncatedSeries TruncatedSeries::from_polynomial(const Polynomial& p, std::size_t order) {
  std::vector<Complex> c(order + 1);
  for (std::size_t k = 0; k <= order; ++k) c[k] = p[k];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order > this->order()) {
    throw Error(ErrorCode::OrderTooSmall, "cannot truncate a series to a higher order");
  }
  return TruncatedSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

TruncatedSeries TruncatedSeries::padded(std::size_t order) const {
  std::vector<Complex> c = coeffs_;
  if (order + 1 > c.size()) c.resize(order + 1);
  return TruncatedSeries(std::move(c));
}

Complex TruncatedSeries::evaluate(Complex z) const noexcept {
  Complex acc = coeffs_.back();
  for (std::size_t k = coeffs_.size() - 1; k-- > 0;) acc = acc * z + coeffs_[k];
  return acc;
}

TruncatedSeries integrate(const TruncatedSeries& f) {
  const auto c = f.coeffs();
  std::vector<Complex> out(c.size() + 1);
  for (std::size_t k = 1; k < out.size(); ++k) out[k] = c[k - 1] / static_cast<double>(k);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries differentiate(const TruncatedSeries& f) {
  if (f.order() == 0) return TruncatedSeries();
  std::vector<Complex> out(f.order());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = static_cast<double>(k + 1) * f[k + 1];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries exp_series(const TruncatedSeries& F) {
  if (std::abs(F[0]) > 0.0) {
    throw Error(ErrorCode::NonzeroConstantTerm, "exp_series expects F(0) = 0 so that g(0) = 1");
  }
  const std::size_t K = F.order();
  std::vector<Complex> g(K + 1);
  g[0] = 1.0;
  for (std::size_t k = 0; k < K; ++k) {
    Complex acc{};
    for (std::size_t j = 0; j <= k; ++j) {
      acc += static_cast<double>(j + 1) * F[j + 1] * g[k - j];
    }
    g[k + 1] = acc / static_cast<double>(k + 1);
  }
  return TruncatedSeries(std::move(g));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t K = std::min(a.order(), b.order());
  std::vector<Complex> out(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    for (std::size_t j = 0; j <= k; ++j) out[k] += a[j] * b[k - j];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries divide(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (b[0] == Complex{}) {
    throw Error(ErrorCode::ZeroConstantTerm, "series division by a series vanishing at 0");
  }
  const std::size_t K = std::min(a.order(), b.order());
  std::vector<Complex> out(K + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    Complex acc = a[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b[j] * out[k - j];
    out[k] = acc / b[0];
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t K = std::min(a.order(), b.order());
  std::vector<Complex> out(K + 1);
  for (std::size_t k = 0; k <= K; ++k) out[k] = a[k] + b[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b) {
  const std::size_t K = std::min(a.order(), b.order());
  std::vector<Complex> out(K + 1);
  for (std::size_t k = 0; k <= K; ++k) out[k] = a[k] - b[k];
  return TruncatedSeries(std::move(out));
}

TruncatedSeries negate(const TruncatedSeries& a) {
  std::vector<Complex> out(a.coeffs().begin(), a.coeffs().end());
  for (auto& c : out) c = -c;
  return TruncatedSeries(std::move(out));
}

TruncatedSeries log_derivative_series(const Polynomial& p, std::size_t order) {
  const Complex p0 = p[0];
  if (p0 == Complex{}) {
    throw Error(ErrorCode::ZeroConstantTerm, "log-derivative series needs P(0) != 0");
  }
  // P' = e * P, solved for e one coefficient at a time.
  std::vector<Complex> e(order + 1);
  for (std::size_t k = 0; k <= order; ++k) {
    Complex acc = static_cast<double>(k + 1) * p[k + 1];
    for (std::size_t j = 0; j < k; ++j) acc -= e[j] * p[k - j];
    e[k] = acc / p0;
  }
  return TruncatedSeries(std::move(e));
}

}  // namespace circlepoly

#include "circlepoly/constructor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace circlepoly {

namespace {

void check_radius_and_eps(double a, double eps) {
  if (!(a > 0.0 && a < 1.0)) {
    throw Error(ErrorCode::DomainError, "radius a must lie in (0, 1)");
  }
  if (!(eps > 0.0 && eps < 1.0 - a)) {
    throw Error(ErrorCode::DomainError, "eps must lie in (0, 1 - a)");
  }
}

}  // namespace

TruncatedSeries taylor_g(const FunctionSpec& f, std::size_t order) {
  if (order == 0) return TruncatedSeries({1.0});
  return exp_series(integrate(f.taylor(order - 1)));
}

Polynomial partial_sum(const TruncatedSeries& g, std::size_t n) {
  if (n > g.order()) {
    throw Error(ErrorCode::OrderTooSmall, "partial_sum index " + std::to_string(n) +
                                              " exceeds series order " + std::to_string(g.order()));
  }
  if (g[0] != Complex{1.0}) {
    throw Error(ErrorCode::DomainError, "g must be normalized to g(0) = 1");
  }
  const auto c = g.coeffs();
  return Polynomial(std::vector<Complex>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(n + 1)));
}

std::size_t find_min_n0(const FunctionSpec& f, std::size_t n_max) {
  const TruncatedSeries g = taylor_g(f, n_max);
  std::size_t n0 = n_max + 1;
  for (std::size_t k = n_max + 1; k-- > 0;) {
    if (!is_zero_free_closed_disk(partial_sum(g, k))) break;
    n0 = k;
  }
  if (n0 > n_max) {
    throw Error(ErrorCode::NotFoundWithin,
                "s_" + std::to_string(n_max) + " has zeros in the closed disk; raise n_max");
  }
  return n0;
}

double estimate_M0(const FunctionSpec& f, std::size_t samples, double radius) {
  if (samples == 0 || !(radius > 0.0 && radius < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "estimate_M0 needs samples > 0 and radius in (0, 1)");
  }
  double minimum = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < samples; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    minimum = std::min(minimum, std::abs(f.exp_primitive(std::polar(radius, angle))));
  }
  return minimum;
}

Approximant assemble_approximant(Polynomial s_n, std::size_t N, TruncatedSeries g, double M0) {
  if (N < 2) throw Error(ErrorCode::DomainError, "degree N must be at least 2");
  const std::size_t n = N / 2;
  const std::size_t q = s_n.degree();
  if (q > n) throw Error(ErrorCode::DomainError, "deg s_n exceeds floor(N/2)");
  if (s_n[0] != Complex{1.0}) throw Error(ErrorCode::DomainError, "s_n must satisfy s_n(0) = 1");

  Approximant appr;
  appr.N = N;
  appr.n = n;
  appr.q = q;
  appr.m = N - q;
  appr.p = conjugate_reciprocal(s_n);
  appr.P = s_n + appr.p.shifted(appr.m);
  appr.s_n = std::move(s_n);
  appr.M1 = 1.0;
  for (std::size_t k = 1; k <= n && k <= g.order(); ++k) appr.M1 = std::max(appr.M1, std::abs(g[k]));
  appr.g = std::move(g);
  appr.M0 = M0;
  return appr;
}

Approximant construct(const FunctionSpec& f, std::size_t N) {
  if (N < 2) throw Error(ErrorCode::DomainError, "degree N must be at least 2");
  const std::size_t n = N / 2;

  // Headroom beyond n for vanishing-order diagnostics; explicit series cap it.
  std::size_t order = 2 * N + 8;
  if (const auto cap = f.max_order()) order = std::min(order, *cap + 1);
  if (order < n) {
    throw Error(ErrorCode::OrderTooSmall, "function supplies too few coefficients for N = " + std::to_string(N));
  }
  TruncatedSeries g = taylor_g(f, order);
  Polynomial s_n = partial_sum(g, n);

  if (!is_zero_free_closed_disk(s_n)) {
    std::vector<Complex> roots;
    if (s_n.degree() > 0) roots = roots_aberth(s_n).roots;
    throw PartialSumNotZeroFree(n, std::move(roots));
  }

  double M0 = 0.0;
  bool reduced = false;
  if (f.kind() == FunctionSpec::Kind::ExplicitCoeffs) {
    M0 = estimate_M0(f, kDefaultM0Samples, kExplicitSeriesRadius);
    reduced = true;
  } else {
    M0 = estimate_M0(f);
  }

  Approximant appr = assemble_approximant(std::move(s_n), N, std::move(g), M0);
  appr.m0_reduced_radius = reduced;
  return appr;
}

double error_bound(double a, double eps, std::size_t n) {
  check_radius_and_eps(a, eps);
  if (n < 1) throw Error(ErrorCode::DomainError, "error_bound needs n >= 1");
  return std::pow(a + eps, static_cast<double>(n + 1)) / (eps * (1.0 - a - eps));
}

CertificateBounds certificate_bounds(const Approximant& appr, double a, double eps) {
  check_radius_and_eps(a, eps);
  const double n1 = static_cast<double>(appr.n + 1);
  const double m = static_cast<double>(appr.m);
  const double poisson = eps * (1.0 - a - eps);

  CertificateBounds out{};
  out.p_sup = appr.M1 / (1.0 - a);
  out.tail_sup = appr.M0 * std::pow(a, n1) / (1.0 - a);
  out.P_lower = appr.M0 - (appr.M1 * std::pow(a, m) + appr.M0 * std::pow(a, n1)) / (1.0 - a);
  out.p_derivative_sup = appr.M1 / poisson;
  out.tail_derivative_sup = appr.M0 * std::pow(a + eps, n1) / poisson;
  out.estimated = true;
  return out;
}

}  // namespace circlepoly

#include "circlepoly/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace circlepoly {

std::size_t default_error_samples(std::size_t N) noexcept {
  return std::max<std::size_t>(4096, 8 * N);
}

double default_root_tolerance(std::size_t N) noexcept {
  if (N > 64) return 1e-7 * (1.0 + static_cast<double>(N) / 32.0);
  return 1e-7;
}

std::vector<ErrorSample> error_profile(const Approximant& appr, const FunctionSpec& f, double a,
                                       std::size_t samples) {
  if (!(a > 0.0 && a < 1.0)) throw Error(ErrorCode::DomainError, "radius a must lie in (0, 1)");
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "error_profile needs samples > 0");

  std::vector<ErrorSample> out;
  out.reserve(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    const Complex z = std::polar(a, angle);
    Complex fz;
    try {
      fz = f.evaluate(z);
    } catch (const Error& e) {
      throw Error(ErrorCode::EvaluationFailure,
                  std::string("cannot evaluate f on |z| = a: ") + e.what());
    }
    const auto [value, deriv] = evaluate_with_derivative(appr.P, z);
    out.push_back({angle, std::abs(deriv / value - fz)});
  }
  return out;
}

double measure_sup_error(const Approximant& appr, const FunctionSpec& f, double a,
                         std::size_t samples) {
  double worst = 0.0;
  for (const auto& s : error_profile(appr, f, a, samples)) worst = std::max(worst, s.abs_error);
  return worst;
}

CircleCheck check_roots_on_circle(const Polynomial& P, double tol) {
  if (P.degree() == 0) {
    throw Error(ErrorCode::RootSolverFailed, "constant polynomial has no roots to check");
  }
  RootSet roots = roots_aberth(P);
  if (!roots.converged) {
    throw Error(ErrorCode::RootSolverFailed,
                "Aberth iteration did not converge within " + std::to_string(roots.iterations) + " iterations");
  }
  double worst = 0.0;
  for (const auto& z : roots.roots) worst = std::max(worst, std::abs(std::abs(z) - 1.0));
  return {worst, worst <= tol, std::move(roots)};
}

CircleCheck check_roots_on_circle(const Approximant& appr, double tol) {
  return check_roots_on_circle(appr.P, tol);
}

std::vector<Complex> closed_disk_grid(std::size_t samples) {
  const std::size_t rings = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(samples) / 2.0))));
  const std::size_t angles = std::max<std::size_t>(1, samples / rings);
  std::vector<Complex> grid;
  grid.reserve(rings * angles);
  for (std::size_t i = 0; i < rings; ++i) {
    const double r = static_cast<double>(i) / static_cast<double>(rings - 1);
    for (std::size_t j = 0; j < angles; ++j) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angles);
      grid.push_back(std::polar(r, angle));
    }
  }
  return grid;
}

double check_phi_modulus(const Polynomial& Q, std::size_t m, std::size_t samples) {
  const Polynomial Qstar = conjugate_reciprocal(Q);
  double worst = 0.0;
  for (const auto& z : closed_disk_grid(samples)) {
    const double denom = std::abs(evaluate(Q, z));
    if (!(denom > std::numeric_limits<double>::min())) {
      throw Error(ErrorCode::ZeroDenominator, "|Q| underflows at a disk sample point");
    }
    const double zm = std::pow(std::abs(z), static_cast<double>(m));
    worst = std::max(worst, zm * std::abs(evaluate(Qstar, z)) / denom);
  }
  return worst;
}

VanishingCheck check_vanishing_order(const Approximant& appr, const FunctionSpec& f, double tol) {
  VanishingCheck out{true, std::nullopt, {}};
  if (appr.n < 2) return out;
  const std::size_t last = appr.n - 2;
  const TruncatedSeries e = subtract(log_derivative_series(appr.P, last), f.taylor(last));
  const double threshold = tol * (1.0 + appr.M1);
  out.coefficients.assign(e.coeffs().begin(), e.coeffs().end());
  for (std::size_t k = 0; k <= last; ++k) {
    if (!(std::abs(e[k]) <= threshold)) {
      out.ok = false;
      out.first_bad = k;
      break;
    }
  }
  return out;
}

double simple_fraction_residual(const Polynomial& P, std::size_t samples) {
  if (P.degree() == 0) return 0.0;
  if (samples == 0) throw Error(ErrorCode::InvalidArgument, "simple_fraction_residual needs samples > 0");
  const RootSet roots = roots_aberth(P);
  if (!roots.converged) {
    throw Error(ErrorCode::RootSolverFailed, "Aberth iteration did not converge");
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    const Complex z = std::polar(0.5, angle);
    Complex fraction{};
    for (const auto& r : roots.roots) fraction += 1.0 / (z - r);
    const auto [value, deriv] = evaluate_with_derivative(P, z);
    worst = std::max(worst, std::abs(fraction - deriv / value));
  }
  return worst;
}

double simple_fraction_residual(const Approximant& appr, std::size_t samples) {
  return simple_fraction_residual(appr.P, samples);
}

ErrorReport verify(const Approximant& appr, const FunctionSpec& f, const VerifyOptions& options) {
  ErrorReport report;
  report.N = appr.N;
  report.n = appr.n;
  report.a = options.a;
  report.eps = options.eps;
  report.M0 = appr.M0;
  report.M1 = appr.M1;
  report.samples_used = options.samples != 0 ? options.samples : default_error_samples(appr.N);

  report.sup_error = measure_sup_error(appr, f, options.a, report.samples_used);
  report.bound = error_bound(options.a, options.eps, appr.n);
  report.bound_ratio = report.sup_error / report.bound;
  report.bound_checked = appr.N >= kBoundCheckMinDegree;
  report.bound_ok = !report.bound_checked || report.sup_error <= kBoundFactor * report.bound;
  report.certificate = certificate_bounds(appr, options.a, options.eps);

  report.root_tol = options.root_tol > 0.0 ? options.root_tol : default_root_tolerance(appr.N);
  const CircleCheck circle = check_roots_on_circle(appr, report.root_tol);
  report.max_circle_deviation = circle.max_deviation;
  report.roots_ok = circle.pass;

  const VanishingCheck vanishing = check_vanishing_order(appr, f, options.vanish_tol);
  report.vanishing_order_ok = vanishing.ok;
  report.first_bad = vanishing.first_bad;

  report.fraction_residual = simple_fraction_residual(appr, options.fraction_samples);
  report.fraction_ok = report.fraction_residual <= options.fraction_tol;
  return report;
}

RateFit fit_rate(std::span<const ErrorReport> reports) {
  std::set<std::size_t> distinct;
  for (const auto& r : reports) distinct.insert(r.n);
  if (distinct.size() < 3) {
    throw Error(ErrorCode::InsufficientData, "rate fit needs at least three distinct n");
  }
  for (const auto& r : reports) {
    if (r.sup_error == 0.0) {
      return {-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::quiet_NaN()};
    }
    if (!(r.sup_error > 0.0)) {
      throw Error(ErrorCode::InsufficientData, "rate fit needs positive finite errors");
    }
  }
  const double count = static_cast<double>(reports.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (const auto& r : reports) {
    mean_x += static_cast<double>(r.n);
    mean_y += std::log(r.sup_error);
  }
  mean_x /= count;
  mean_y /= count;
  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& r : reports) {
    const double dx = static_cast<double>(r.n) - mean_x;
    sxx += dx * dx;
    sxy += dx * (std::log(r.sup_error) - mean_y);
  }
  const double slope = sxy / sxx;
  return {slope, mean_y - slope * mean_x};
}

}  // namespace circlepoly

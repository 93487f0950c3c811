#ifndef CIRCLEPOLY_VERIFIER_HPP
#define CIRCLEPOLY_VERIFIER_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "circlepoly/constructor.hpp"
#include "circlepoly/function_spec.hpp"
#include "circlepoly/polynomial.hpp"

namespace circlepoly {

/// Acceptance factor standing in for the unquantified (1 + o(1)) of the
/// error bound; applied for N >= kBoundCheckMinDegree.
inline constexpr double kBoundFactor = 2.0;
inline constexpr std::size_t kBoundCheckMinDegree = 16;

/// max(4096, 8N)
std::size_t default_error_samples(std::size_t N) noexcept;

/// 1e-7, widened to 1e-7 (1 + N/32) for N > 64.
double default_root_tolerance(std::size_t N) noexcept;

struct ErrorSample {
  double angle;
  double abs_error;
};

/// |P'/P - f| at `samples` equispaced points of |z| = a, starting at angle 0.
/// Throws EvaluationFailure if f cannot be evaluated there.
std::vector<ErrorSample> error_profile(const Approximant& appr, const FunctionSpec& f, double a,
                                       std::size_t samples);

/// Maximum of error_profile(). The error is analytic on |z| <= a, so the
/// circle carries the maximum over the whole disk.
double measure_sup_error(const Approximant& appr, const FunctionSpec& f, double a,
                         std::size_t samples);

struct CircleCheck {
  double max_deviation;  ///< max ||z_k| - 1|
  bool pass;
  RootSet roots;
};

/// Throws RootSolverFailed if the Aberth iteration does not converge.
CircleCheck check_roots_on_circle(const Polynomial& P, double tol);
CircleCheck check_roots_on_circle(const Approximant& appr, double tol);

/// Points of the closed unit disk on a polar grid: rings at radii i/(R-1),
/// i = 0..R-1, each with T equispaced angles, R*T ~ samples. Ring R-1 is |z| = 1.
std::vector<Complex> closed_disk_grid(std::size_t samples);

/// max over closed_disk_grid(samples) of |z|^m |Q*(z)| / |Q(z)|.
/// Throws ZeroDenominator if |Q| underflows at a sample point.
double check_phi_modulus(const Polynomial& Q, std::size_t m, std::size_t samples);

struct VanishingCheck {
  bool ok;
  std::optional<std::size_t> first_bad;
  /// Taylor coefficients e_0..e_{n-2} of P'/P - f (empty when n < 2).
  std::vector<Complex> coefficients;
};

/// Requires |e_k| <= tol (1 + M1) for k = 0..n-2.
VanishingCheck check_vanishing_order(const Approximant& appr, const FunctionSpec& f, double tol);

/// max over `samples` points of |z| = 0.5 of |sum 1/(z - z_k) - P'(z)/P(z)|.
/// Throws RootSolverFailed if the root solver does not converge.
double simple_fraction_residual(const Polynomial& P, std::size_t samples);
double simple_fraction_residual(const Approximant& appr, std::size_t samples);

struct VerifyOptions {
  double a = 0.5;
  double eps = 0.2;
  std::size_t samples = 0;   ///< 0 selects default_error_samples(N)
  double root_tol = 0.0;     ///< 0 selects default_root_tolerance(N)
  double vanish_tol = 1e-8;
  std::size_t fraction_samples = 100;
  double fraction_tol = 1e-8;
};

struct ErrorReport {
  std::size_t N = 0;
  std::size_t n = 0;
  double a = 0.0;
  double eps = 0.0;
  double sup_error = 0.0;
  double bound = 0.0;
  double bound_ratio = 0.0;  ///< sup_error / bound
  bool bound_checked = false;
  bool bound_ok = true;
  double max_circle_deviation = 0.0;
  double root_tol = 0.0;
  bool roots_ok = false;
  bool vanishing_order_ok = false;
  std::optional<std::size_t> first_bad;
  double fraction_residual = 0.0;
  bool fraction_ok = false;
  std::size_t samples_used = 0;
  double M0 = 0.0;
  double M1 = 0.0;
  CertificateBounds certificate{};

  bool passed() const noexcept {
    return bound_ok && roots_ok && vanishing_order_ok && fraction_ok;
  }
};

/// Runs every check on one approximant.
ErrorReport verify(const Approximant& appr, const FunctionSpec& f, const VerifyOptions& options);

struct RateFit {
  double slope;      ///< -infinity when some measured error is exactly zero
  double intercept;  ///< NaN together with the -infinity slope
};

/// Least-squares fit of ln(sup_error) against n. Throws InsufficientData
/// unless at least three distinct n are present.
RateFit fit_rate(std::span<const ErrorReport> reports);

}  // namespace circlepoly

#endif  // CIRCLEPOLY_VERIFIER_HPP

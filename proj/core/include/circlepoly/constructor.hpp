#ifndef CIRCLEPOLY_CONSTRUCTOR_HPP
#define CIRCLEPOLY_CONSTRUCTOR_HPP

#include <cstddef>

#include "circlepoly/function_spec.hpp"
#include "circlepoly/polynomial.hpp"
#include "circlepoly/series.hpp"

namespace circlepoly {

/// Default number of boundary points used to estimate inf |g|.
inline constexpr std::size_t kDefaultM0Samples = 4096;
/// Radius of the sampling circle for inf |g|, just inside the unit circle.
inline constexpr double kM0Radius = 1.0 - 1e-6;

/// Degree-N polynomial P = s_n + z^m p with all zeros on |z| = 1 whose
/// logarithmic derivative approximates f, plus everything used to build it.
struct Approximant {
  std::size_t N = 0;
  std::size_t n = 0;  ///< floor(N / 2)
  std::size_t q = 0;  ///< deg s_n
  std::size_t m = 0;  ///< N - q
  Polynomial s_n;     ///< 1 + g_1 z + ... + g_n z^n
  Polynomial p;       ///< conjugate reciprocal of s_n
  Polynomial P;
  TruncatedSeries g;  ///< Taylor coefficients of exp(integral_0^z f)
  double M0 = 0.0;    ///< sampled estimate of inf_D |g|
  double M1 = 1.0;    ///< max{1, |g_1|, ..., |g_n|}
  /// True when M0 was sampled at kExplicitSeriesRadius instead of kM0Radius.
  bool m0_reduced_radius = false;
};

/// g = exp(integrate(f)) to order K.
TruncatedSeries taylor_g(const FunctionSpec& f, std::size_t order);

/// s_n from g_0..g_n. Throws OrderTooSmall if n > g.order(), DomainError if g_0 != 1.
Polynomial partial_sum(const TruncatedSeries& g, std::size_t n);

/// Smallest n0 <= n_max such that s_k is zero-free on |z| <= 1 for every
/// k in [n0, n_max]. Throws NotFoundWithin if s_{n_max} itself fails.
std::size_t find_min_n0(const FunctionSpec& f, std::size_t n_max);

/// min |g| over `samples` points of |z| = radius.
double estimate_M0(const FunctionSpec& f, std::size_t samples = kDefaultM0Samples,
                   double radius = kM0Radius);

/// Assembles an approximant from a given partial sum, without checking that
/// s_n is zero-free. construct() is the checked entry point; this one exists
/// so deliberately corrupted inputs can be fed to the verifier.
Approximant assemble_approximant(Polynomial s_n, std::size_t N, TruncatedSeries g, double M0);

/// The full pipeline for degree N >= 2. Throws PartialSumNotZeroFree when
/// s_{floor(N/2)} has zeros in the closed disk; N is never adjusted.
Approximant construct(const FunctionSpec& f, std::size_t N);

/// (a + eps)^(n+1) / (eps (1 - a - eps)). DomainError unless
/// 0 < a < 1, 0 < eps < 1 - a and n >= 1.
double error_bound(double a, double eps, std::size_t n);

/// Plug-in values of the intermediate estimates on |z| <= a. All of them use
/// the sampled M0, so they are estimates rather than certified bounds.
struct CertificateBounds {
  double p_sup;                ///< M1 / (1 - a), bounds |p| and |s_n|
  double tail_sup;             ///< M0 a^(n+1) / (1 - a), bounds |R_n|
  double P_lower;              ///< M0 - (M1 a^m + M0 a^(n+1)) / (1 - a), bounds |P| from below
  double p_derivative_sup;     ///< M1 / (eps (1 - a - eps))
  double tail_derivative_sup;  ///< M0 (a + eps)^(n+1) / (eps (1 - a - eps))
  bool estimated = true;
};

CertificateBounds certificate_bounds(const Approximant& appr, double a, double eps);

}  // namespace circlepoly

#endif  // CIRCLEPOLY_CONSTRUCTOR_HPP

#ifndef CIRCLEPOLY_POLYNOMIAL_HPP
#define CIRCLEPOLY_POLYNOMIAL_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "circlepoly/error.hpp"

namespace circlepoly {

/// Dense polynomial a_0 + a_1 z + ... + a_q z^q with complex coefficients,
/// stored in ascending order.
///
/// Only exactly-zero trailing coefficients are dropped, so a tiny leading
/// coefficient still counts towards the degree. The zero polynomial is stored
/// as the single coefficient 0 and reports degree 0.
class Polynomial {
 public:
  Polynomial();
  explicit Polynomial(std::vector<Complex> coeffs);
  Polynomial(std::initializer_list<Complex> coeffs);

  /// c z^k
  static Polynomial monomial(Complex c, std::size_t k);
  /// lead * prod (z - r_j)
  static Polynomial from_roots(std::span<const Complex> roots, Complex lead = 1.0);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }

  std::span<const Complex> coeffs() const noexcept { return coeffs_; }
  /// Coefficient of z^k; zero beyond the degree.
  Complex operator[](std::size_t k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : Complex{};
  }
  Complex leading() const noexcept { return coeffs_.back(); }

  Complex operator()(Complex z) const noexcept;

  /// Returns a copy with coefficient k replaced (k may exceed the degree).
  Polynomial with_coefficient(std::size_t k, Complex value) const;
  /// z^m * this
  Polynomial shifted(std::size_t m) const;

  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void normalize();

  std::vector<Complex> coeffs_;
};

/// Horner evaluation.
Complex evaluate(const Polynomial& p, Complex z) noexcept;

/// Value and first derivative in one Horner pass.
struct ValueAndDerivative {
  Complex value;
  Complex derivative;
};
ValueAndDerivative evaluate_with_derivative(const Polynomial& p, Complex z) noexcept;

Polynomial derivative(const Polynomial& p);

/// Q*(z) = z^q conj(Q(1/conj z)): the coefficient list reversed and conjugated,
/// q = deg Q. Throws ZeroPolynomial for Q == 0.
Polynomial conjugate_reciprocal(const Polynomial& q);

struct RootSet {
  std::vector<Complex> roots;
  /// |P(root)| for each entry of roots.
  std::vector<double> residuals;
  bool converged = false;
  std::size_t iterations = 0;

  double max_residual() const noexcept;
};

struct AberthOptions {
  double tol = 1e-13;
  std::size_t max_iters = 200;
};

/// Simultaneous Aberth-Ehrlich iteration for all deg P roots.
///
/// Starting points sit on the circle of radius |a_t / a_q|^(1/(q-t)) (a_t the
/// lowest nonzero coefficient). A root is frozen once its step falls below
/// tol * max(1, |z|) or once |P(z)| sits at the rounding level of the Horner
/// evaluation; steps stall around eps^(1/k) at a k-fold root. Clusters of
/// converged roots are then translated onto the zero of P^(k-1) near their
/// centroid. Non-convergence is reported through RootSet::converged; the best
/// iterate is still returned.
RootSet roots_aberth(const Polynomial& p, AberthOptions options = {});
RootSet roots_aberth(const Polynomial& p, double tol, std::size_t max_iters);

/// Argument-principle zero count inside |z| < radius from `samples`
/// equispaced contour points. Throws ZeroNearContour when the sampled
/// minimum modulus drops below 1e-9 of the sampled maximum.
std::size_t count_zeros_in_disk(const Polynomial& p, double radius, std::size_t samples);

struct ZeroFreeOptions {
  double delta = 1e-6;
  /// 0 selects max(8192, 64 * deg P).
  std::size_t samples = 0;
  double guard_ratio = 1e-9;
};

/// Certifies that p has no zeros in |z| <= 1 (winding count at radius 1 + delta
/// plus a minimum-modulus guard on the unit circle itself).
/// Throws Indeterminate if every probe radius hits a near-contour zero.
bool is_zero_free_closed_disk(const Polynomial& p, ZeroFreeOptions options = {});

}  // namespace circlepoly

#endif  // CIRCLEPOLY_POLYNOMIAL_HPP

#include "circlepoly/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace circlepoly {

namespace {

void require_finite(std::span<const Complex> coeffs) {
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorCode::NonFinite, "polynomial coefficient is not finite");
    }
  }
}

// sum |a_k| |z|^k, the scale of the rounding error in Horner's scheme.
double horner_error_scale(const Polynomial& p, double abs_z) noexcept {
  const auto c = p.coeffs();
  double acc = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * abs_z + std::abs(c[k]);
  return acc;
}

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// A multiple root comes back as a cluster whose members are only accurate to
// about eps^(1/k). The cluster centroid is recovered much more accurately as
// the simple root of P^(k-1), so the cluster is translated onto it.
void polish_clusters(const Polynomial& p, std::vector<Complex>& z) {
  constexpr double kClusterRadius = 1e-4;
  const std::size_t q = z.size();
  std::vector<std::size_t> label(q);
  for (std::size_t i = 0; i < q; ++i) label[i] = i;
  auto find = [&](std::size_t i) {
    while (label[i] != i) i = label[i] = label[label[i]];
    return i;
  };
  for (std::size_t i = 0; i < q; ++i) {
    for (std::size_t j = i + 1; j < q; ++j) {
      if (std::abs(z[i] - z[j]) < kClusterRadius * std::max(1.0, std::abs(z[i]))) label[find(i)] = find(j);
    }
  }
  for (std::size_t root = 0; root < q; ++root) {
    if (find(root) != root) continue;
    std::vector<std::size_t> members;
    Complex centroid{};
    for (std::size_t i = 0; i < q; ++i) {
      if (find(i) == root) {
        members.push_back(i);
        centroid += z[i];
      }
    }
    if (members.size() < 2) continue;
    centroid /= static_cast<double>(members.size());

    Polynomial d = p;
    for (std::size_t k = 1; k < members.size(); ++k) d = derivative(d);
    Complex c = centroid;
    for (int it = 0; it < 20; ++it) {
      const auto [value, deriv] = evaluate_with_derivative(d, c);
      if (deriv == Complex{}) break;
      const Complex step = value / deriv;
      if (!is_finite(step)) break;
      c -= step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(c))) break;
    }
    if (!is_finite(c) || std::abs(c - centroid) > kClusterRadius * std::max(1.0, std::abs(centroid))) continue;
    for (std::size_t i : members) z[i] += c - centroid;
  }
}

}  // namespace

Polynomial::Polynomial() : coeffs_{Complex{}} {}

Polynomial::Polynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  require_finite(coeffs_);
  normalize();
}

Polynomial::Polynomial(std::initializer_list<Complex> coeffs)
    : Polynomial(std::vector<Complex>(coeffs)) {}

void Polynomial::normalize() {
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.push_back(Complex{});
}

Polynomial Polynomial::monomial(Complex c, std::size_t k) {
  std::vector<Complex> coeffs(k + 1);
  coeffs[k] = c;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::from_roots(std::span<const Complex> roots, Complex lead) {
  std::vector<Complex> coeffs{lead};
  coeffs.reserve(roots.size() + 1);
  for (const auto& r : roots) {
    coeffs.push_back(Complex{});
    for (std::size_t k = coeffs.size() - 1; k > 0; --k) {
      coeffs[k] = coeffs[k - 1] - r * coeffs[k];
    }
    coeffs[0] *= -r;
  }
  return Polynomial(std::move(coeffs));
}

Complex Polynomial::operator()(Complex z) const noexcept { return evaluate(*this, z); }

Polynomial Polynomial::with_coefficient(std::size_t k, Complex value) const {
  std::vector<Complex> coeffs = coeffs_;
  if (k >= coeffs.size()) coeffs.resize(k + 1);
  coeffs[k] = value;
  return Polynomial(std::move(coeffs));
}

Polynomial Polynomial::shifted(std::size_t m) const {
  if (is_zero()) return *this;
  std::vector<Complex> coeffs(m + coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end(), coeffs.begin() + static_cast<std::ptrdiff_t>(m));
  return Polynomial(std::move(coeffs));
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<Complex> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = lhs[k] + rhs[k];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<Complex> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = lhs[k] - rhs[k];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<Complex> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Complex evaluate(const Polynomial& p, Complex z) noexcept {
  const auto c = p.coeffs();
  Complex acc = c.back();
  for (std::size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
  return acc;
}

ValueAndDerivative evaluate_with_derivative(const Polynomial& p, Complex z) noexcept {
  const auto c = p.coeffs();
  Complex value = c.back();
  Complex deriv{};
  for (std::size_t k = c.size() - 1; k-- > 0;) {
    deriv = deriv * z + value;
    value = value * z + c[k];
  }
  return {value, deriv};
}

Polynomial derivative(const Polynomial& p) {
  if (p.degree() == 0) return Polynomial();
  std::vector<Complex> out(p.degree());
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = static_cast<double>(k + 1) * p[k + 1];
  }
  return Polynomial(std::move(out));
}

Polynomial conjugate_reciprocal(const Polynomial& q) {
  if (q.is_zero()) {
    throw Error(ErrorCode::ZeroPolynomial, "conjugate_reciprocal of the zero polynomial");
  }
  const auto a = q.coeffs();
  std::vector<Complex> b(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) b[k] = std::conj(a[a.size() - 1 - k]);
  return Polynomial(std::move(b));
}

double RootSet::max_residual() const noexcept {
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, r);
  return worst;
}

RootSet roots_aberth(const Polynomial& p, double tol, std::size_t max_iters) {
  return roots_aberth(p, AberthOptions{tol, max_iters});
}

RootSet roots_aberth(const Polynomial& p, AberthOptions options) {
  const std::size_t q = p.degree();
  if (q == 0) {
    throw Error(ErrorCode::DomainError, "roots_aberth needs a polynomial of degree >= 1");
  }

  const auto a = p.coeffs();
  // Start on the circle whose radius is the geometric mean of the nonzero
  // root moduli, |a_t / a_q|^(1/(q-t)) with a_t the lowest nonzero coefficient.
  std::size_t lowest = 0;
  while (a[lowest] == Complex{}) ++lowest;
  double radius = 1.0;
  if (lowest < q) {
    radius = std::pow(std::abs(a[lowest]) / std::abs(a[q]), 1.0 / static_cast<double>(q - lowest));
  }
  std::vector<Complex> z(q);
  for (std::size_t k = 0; k < q; ++k) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(q) + 0.4;
    z[k] = std::polar(radius, angle);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double rounding_factor = 4.0 * eps * static_cast<double>(q + 1);

  std::vector<bool> frozen(q, false);
  std::size_t active = q;
  std::size_t iter = 0;
  while (active > 0 && iter < options.max_iters) {
    ++iter;
    for (std::size_t i = 0; i < q; ++i) {
      if (frozen[i]) continue;
      const auto [value, deriv] = evaluate_with_derivative(p, z[i]);
      if (!is_finite(value) || !is_finite(deriv)) continue;
      if (std::abs(value) <= rounding_factor * horner_error_scale(p, std::abs(z[i]))) {
        frozen[i] = true;
        --active;
        continue;
      }
      Complex repulsion{};
      for (std::size_t j = 0; j < q; ++j) {
        if (j != i) repulsion += 1.0 / (z[i] - z[j]);
      }
      const Complex step = 1.0 / (deriv / value - repulsion);
      if (!is_finite(step)) continue;
      z[i] -= step;
      if (std::abs(step) < options.tol * std::max(1.0, std::abs(z[i]))) {
        frozen[i] = true;
        --active;
      }
    }
  }

  if (active == 0) polish_clusters(p, z);

  RootSet result;
  result.roots = std::move(z);
  result.residuals.reserve(q);
  for (const auto& r : result.roots) result.residuals.push_back(std::abs(evaluate(p, r)));
  result.converged = active == 0 && std::all_of(result.roots.begin(), result.roots.end(), is_finite);
  result.iterations = iter;
  return result;
}

std::size_t count_zeros_in_disk(const Polynomial& p, double radius, std::size_t samples) {
  if (!(radius > 0.0) || samples < 3) {
    throw Error(ErrorCode::InvalidArgument, "count_zeros_in_disk needs radius > 0 and samples >= 3");
  }
  std::vector<Complex> values(samples);
  double min_mod = std::numeric_limits<double>::infinity();
  double max_mod = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    values[j] = evaluate(p, std::polar(radius, angle));
    min_mod = std::min(min_mod, std::abs(values[j]));
    max_mod = std::max(max_mod, std::abs(values[j]));
  }
  if (!(min_mod >= 1e-9 * max_mod) || max_mod == 0.0) {
    throw Error(ErrorCode::ZeroNearContour, "polynomial nearly vanishes on the counting contour");
  }
  double total = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    total += std::arg(values[(j + 1) % samples] / values[j]);
  }
  const long winding = std::lround(total / (2.0 * std::numbers::pi));
  if (winding < 0) {
    throw Error(ErrorCode::Indeterminate, "negative winding number; contour is undersampled");
  }
  return static_cast<std::size_t>(winding);
}

bool is_zero_free_closed_disk(const Polynomial& p, ZeroFreeOptions options) {
  if (p.is_zero()) {
    throw Error(ErrorCode::ZeroPolynomial, "the zero polynomial vanishes everywhere");
  }
  if (p.degree() == 0) return true;

  const std::size_t samples =
      options.samples != 0 ? options.samples : std::max<std::size_t>(8192, 64 * p.degree());

  double min_mod = std::numeric_limits<double>::infinity();
  double max_mod = 0.0;
  for (std::size_t j = 0; j < samples; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples);
    const double mod = std::abs(evaluate(p, std::polar(1.0, angle)));
    min_mod = std::min(min_mod, mod);
    max_mod = std::max(max_mod, mod);
  }
  if (min_mod < options.guard_ratio * max_mod) return false;

  const double delta = options.delta;
  for (double radius : {1.0 + delta, 1.0 + 0.5 * delta, 1.0 + 2.0 * delta}) {
    try {
      return count_zeros_in_disk(p, radius, samples) == 0;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ZeroNearContour) throw;
    }
  }
  throw Error(ErrorCode::Indeterminate,
              "zero count unreliable at every probe radius just outside the unit circle");
}

}  // namespace circlepoly

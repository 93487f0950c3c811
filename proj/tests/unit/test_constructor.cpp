#include <doctest.h>

#include <cmath>

#include "circlepoly/constructor.hpp"
#include "circlepoly/verifier.hpp"
#include "test_support.hpp"

using namespace circlepoly;
using circlepoly::testing::inverse_square_coeff;
using circlepoly::testing::rel_err;

namespace {

FunctionSpec inverse_half() { return FunctionSpec::ratio(Polynomial{1.0}, Polynomial{1.0, -0.5}); }

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("FunctionSpec taylor coefficients and point values") {
  CHECK(FunctionSpec::zero().taylor(3) == TruncatedSeries::zeros(3));
  CHECK(FunctionSpec::constant(Complex(0.5, 0.25)).taylor(2) == TruncatedSeries{Complex(0.5, 0.25), 0.0, 0.0});

  const auto f = inverse_half();
  const auto t = f.taylor(10);
  for (std::size_t k = 0; k <= 10; ++k) CHECK(t[k] == Complex(std::ldexp(1.0, -static_cast<int>(k))));
  const Complex z(0.3, -0.4);
  CHECK(std::abs(f.evaluate(z) - 1.0 / (1.0 - z / 2.0)) < 1e-15);
  CHECK(code_of([&] { f.evaluate(1.0); }) == ErrorCode::EvaluationFailure);

  const auto e = FunctionSpec::explicit_coeffs(TruncatedSeries{1.0, 2.0});
  CHECK(e.max_order() == std::optional<std::size_t>(1));
  CHECK(code_of([&] { e.taylor(2); }) == ErrorCode::OrderTooSmall);
  CHECK(e.evaluate(0.5) == Complex(2.0));
  CHECK(code_of([&] { e.evaluate(0.96); }) == ErrorCode::SeriesUnreliable);
}

TEST_CASE("ratio specs certify their denominator") {
  CHECK(code_of([] { FunctionSpec::ratio(Polynomial{1.0}, Polynomial{1.0, -1.0}); }) ==
        ErrorCode::DenominatorVanishesInDisk);
  CHECK(code_of([] { FunctionSpec::ratio(Polynomial{1.0}, Polynomial{0.25, 1.0}); }) ==
        ErrorCode::DenominatorVanishesInDisk);
  CHECK(code_of([] { FunctionSpec::ratio(Polynomial{1.0}, Polynomial{}); }) ==
        ErrorCode::DenominatorVanishesInDisk);
}

TEST_CASE("exp_primitive agrees with closed forms") {
  const auto f = inverse_half();
  for (const Complex z : {Complex(0.0), Complex(0.5, 0.5), Complex(-0.999999), Complex(0.0, 0.99)}) {
    const Complex expected = 1.0 / ((1.0 - z / 2.0) * (1.0 - z / 2.0));
    CHECK(rel_err(f.exp_primitive(z), expected) < 1e-13);
  }
  // u/v = (1 + z) / (1 + z/3): primitive 3z - 6 ln(1 + z/3).
  const auto h = FunctionSpec::ratio(Polynomial{1.0, 1.0}, Polynomial{1.0, 1.0 / 3.0});
  const Complex z(0.7, 0.6);
  CHECK(rel_err(h.exp_primitive(z), std::exp(3.0 * z - 6.0 * std::log(1.0 + z / 3.0))) < 1e-13);
  CHECK(rel_err(FunctionSpec::constant(Complex(1.0, 2.0)).exp_primitive(z), std::exp(Complex(1.0, 2.0) * z)) < 1e-15);
}

TEST_CASE("taylor_g") {
  CHECK(taylor_g(FunctionSpec::zero(), 6) == TruncatedSeries{1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});

  const auto e = taylor_g(FunctionSpec::constant(1.0), 20);
  const auto expected = circlepoly::testing::exp_linear_coeffs(1.0, 20);
  for (std::size_t k = 0; k <= 20; ++k) CHECK(rel_err(e[k], expected[k]) <= 1e-15);

  const auto g = taylor_g(inverse_half(), 30);
  for (std::size_t k = 0; k <= 30; ++k) {
    CAPTURE(k);
    CHECK(rel_err(g[k], inverse_square_coeff(k)) <= 1e-12);
  }
}

TEST_CASE("partial_sum") {
  CHECK(partial_sum(taylor_g(FunctionSpec::zero(), 8), 5) == Polynomial{1.0});
  const auto s2 = partial_sum(taylor_g(FunctionSpec::constant(1.0), 8), 2);
  CHECK(s2 == Polynomial{1.0, 1.0, 0.5});
  const auto s3 = partial_sum(taylor_g(inverse_half(), 8), 3);
  REQUIRE(s3.degree() == 3);
  const std::vector<Complex> expected{1.0, 1.0, 0.75, 0.5};
  for (std::size_t k = 0; k <= 3; ++k) CHECK(std::abs(s3[k] - expected[k]) < 1e-15);

  CHECK(code_of([] { partial_sum(TruncatedSeries{1.0, 2.0}, 3); }) == ErrorCode::OrderTooSmall);
  CHECK(code_of([] { partial_sum(TruncatedSeries{2.0, 2.0}, 1); }) == ErrorCode::DomainError);
}

TEST_CASE("find_min_n0") {
  CHECK(find_min_n0(FunctionSpec::zero(), 10) == 0);

  // s_1 = 1 + z for both of these: a zero on the unit circle, so n0 = 2.
  CHECK(partial_sum(taylor_g(FunctionSpec::constant(1.0), 1), 1) == Polynomial{1.0, 1.0});
  CHECK(partial_sum(taylor_g(inverse_half(), 1), 1) == Polynomial{1.0, 1.0});
  CHECK(find_min_n0(FunctionSpec::constant(1.0), 30) == 2);
  CHECK(find_min_n0(inverse_half(), 20) == 2);

  SUBCASE("partial sums from n = 2 stay outside the closed disk (root-finder oracle)") {
    for (const auto& f : {FunctionSpec::constant(1.0), inverse_half()}) {
      const auto g = taylor_g(f, 30);
      for (std::size_t n = 2; n <= 30; ++n) {
        CAPTURE(n);
        const auto rs = roots_aberth(partial_sum(g, n));
        REQUIRE(rs.converged);
        for (const auto& z : rs.roots) CHECK(std::abs(z) > 1.0);
      }
    }
  }

  SUBCASE("f = 5 needs n0 > 0; boundary confirmed with roots") {
    const auto f = FunctionSpec::constant(5.0);
    constexpr std::size_t n_max = 40;
    const std::size_t n0 = find_min_n0(f, n_max);
    CHECK(n0 > 0);
    const auto g = taylor_g(f, n_max);
    auto min_root = [&](std::size_t n) {
      double m = INFINITY;
      for (const auto& z : roots_aberth(partial_sum(g, n)).roots) m = std::min(m, std::abs(z));
      return m;
    };
    CHECK(min_root(n0 - 1) <= 1.0);
    for (std::size_t n = n0; n <= n_max; ++n) CHECK(min_root(n) > 1.0);
  }

  CHECK(code_of([] { find_min_n0(FunctionSpec::constant(5.0), 3); }) == ErrorCode::NotFoundWithin);
}

TEST_CASE("construct reproduces 1 + z^N for f = 0") {
  const auto a8 = construct(FunctionSpec::zero(), 8);
  CHECK(a8.P == Polynomial::monomial(1.0, 8) + Polynomial{1.0});
  CHECK(a8.n == 4);
  CHECK(a8.q == 0);
  CHECK(a8.m == 8);

  const auto a9 = construct(FunctionSpec::zero(), 9);
  CHECK(a9.n == 4);
  CHECK(a9.q == 0);
  CHECK(a9.m == 9);
  CHECK(a9.P == Polynomial::monomial(1.0, 9) + Polynomial{1.0});
  CHECK(a9.M0 == 1.0);
  CHECK(a9.M1 == 1.0);
}

TEST_CASE("construct for f = 1/(1 - z/2), N = 6") {
  const auto appr = construct(inverse_half(), 6);
  CHECK(appr.n == 3);
  CHECK(appr.q == 3);
  CHECK(appr.m == 3);
  const std::vector<Complex> s{1.0, 1.0, 0.75, 0.5};
  const std::vector<Complex> p{0.5, 0.75, 1.0, 1.0};
  const std::vector<Complex> P{1.0, 1.0, 0.75, 1.0, 0.75, 1.0, 1.0};
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(appr.s_n[k] - s[k]) < 1e-15);
    CHECK(std::abs(appr.p[k] - p[k]) < 1e-15);
  }
  REQUIRE(appr.P.degree() == 6);
  for (std::size_t k = 0; k <= 6; ++k) CHECK(std::abs(appr.P[k] - P[k]) < 1e-15);

  const auto rs = roots_aberth(appr.P);
  REQUIRE(rs.converged);
  for (const auto& z : rs.roots) CHECK(std::abs(std::abs(z) - 1.0) <= 1e-10);
}

TEST_CASE("construct refuses a partial sum with zeros in the disk") {
  try {
    construct(FunctionSpec::constant(5.0), 2);
    FAIL("expected PartialSumNotZeroFree");
  } catch (const PartialSumNotZeroFree& e) {
    CHECK(e.code() == ErrorCode::PartialSumNotZeroFree);
    CHECK(e.n() == 1);
    REQUIRE(e.roots().size() == 1);
    CHECK(std::abs(e.roots()[0] + 0.2) < 1e-14);
  }
  // s_1 = 1 + z touches the circle; construct fails rather than raising N.
  CHECK(code_of([] { construct(FunctionSpec::constant(1.0), 3); }) == ErrorCode::PartialSumNotZeroFree);
  CHECK(code_of([] { construct(FunctionSpec::zero(), 1); }) == ErrorCode::DomainError);
  CHECK(code_of([] { construct(FunctionSpec::explicit_coeffs(TruncatedSeries{1.0}), 8); }) ==
        ErrorCode::OrderTooSmall);
}

TEST_CASE("construct from explicit coefficients samples M0 at the reduced radius") {
  // Coefficients of 1/(1 - z/2) up to z^40.
  std::vector<Complex> c(41);
  for (std::size_t k = 0; k <= 40; ++k) c[k] = std::ldexp(1.0, -static_cast<int>(k));
  const auto appr = construct(FunctionSpec::explicit_coeffs(TruncatedSeries(c)), 12);
  CHECK(appr.m0_reduced_radius);
  CHECK(appr.M0 == doctest::Approx(1.0 / std::pow(1.0 + 0.95 / 2.0, 2)).epsilon(1e-9).scale(0.0));
  const auto reference = construct(inverse_half(), 12);
  for (std::size_t k = 0; k <= 12; ++k) CHECK(std::abs(appr.P[k] - reference.P[k]) < 1e-14);
}

TEST_CASE("estimate_M0") {
  CHECK(estimate_M0(FunctionSpec::zero()) == 1.0);
  CHECK(estimate_M0(inverse_half()) == doctest::Approx(4.0 / 9.0).epsilon(1e-5).scale(0.0));
  CHECK(estimate_M0(FunctionSpec::constant(1.0)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-5).scale(0.0));
  const auto e = FunctionSpec::explicit_coeffs(TruncatedSeries{1.0});
  CHECK(code_of([&] { estimate_M0(e); }) == ErrorCode::SeriesUnreliable);
}

TEST_CASE("error_bound") {
  CHECK(error_bound(0.5, 0.25, 3) == doctest::Approx(5.0625).epsilon(1e-14).scale(0.0));
  CHECK(error_bound(0.5, 0.25, 4) == doctest::Approx(0.75 * error_bound(0.5, 0.25, 3)).epsilon(1e-14).scale(0.0));
  // 0.11^6 / (0.1 * 0.89)
  CHECK(error_bound(0.01, 0.1, 5) == doctest::Approx(1.771561e-6 / 0.089).epsilon(1e-12).scale(0.0));
  CHECK(error_bound(0.01, 0.1, 5) == doctest::Approx(1.9905e-5).epsilon(1e-4).scale(0.0));

  CHECK(code_of([] { error_bound(0.5, 0.5, 3); }) == ErrorCode::DomainError);
  CHECK(code_of([] { error_bound(0.0, 0.1, 3); }) == ErrorCode::DomainError);
  CHECK(code_of([] { error_bound(1.0, 0.1, 3); }) == ErrorCode::DomainError);
  CHECK(code_of([] { error_bound(0.5, 0.0, 3); }) == ErrorCode::DomainError);
  CHECK(code_of([] { error_bound(0.5, 0.1, 0); }) == ErrorCode::DomainError);
}

TEST_CASE("property: error_bound is decreasing in n and increasing in a") {
  circlepoly::testing::Generator gen(31);
  for (int trial = 0; trial < 200; ++trial) {
    const double a = gen.uniform(0.01, 0.9);
    const double eps = gen.uniform(0.001, 0.999) * (1.0 - a);
    const std::size_t n = gen.integer(1, 60);
    CHECK(error_bound(a, eps, n + 1) < error_bound(a, eps, n));
    const double a2 = a + gen.uniform(0.0, 0.999) * (1.0 - a - eps);
    if (a2 > a) CHECK(error_bound(a2, eps, n) > error_bound(a, eps, n));
  }
}

TEST_CASE("certificate_bounds") {
  SUBCASE("f = 0, a = 0.5") {
    for (std::size_t N : {4u, 9u, 16u}) {
      const auto appr = construct(FunctionSpec::zero(), N);
      const auto c = certificate_bounds(appr, 0.5, 0.2);
      const double n1 = static_cast<double>(appr.n + 1);
      CHECK(c.p_sup == doctest::Approx(2.0));
      CHECK(c.tail_sup == doctest::Approx(std::pow(0.5, n1) * 2.0));
      CHECK(c.P_lower == doctest::Approx(1.0 - (std::pow(0.5, static_cast<double>(appr.m)) + std::pow(0.5, n1)) / 0.5));
      CHECK(c.estimated);
    }
  }
  SUBCASE("eps at 1 - a is rejected") {
    const auto appr = construct(FunctionSpec::zero(), 8);
    CHECK(code_of([&] { certificate_bounds(appr, 0.5, 0.5); }) == ErrorCode::DomainError);
  }
  SUBCASE("f = 1/(1 - z/2), N = 6, a = 0.5, eps = 0.2") {
    const auto appr = construct(inverse_half(), 6);
    CHECK(appr.M1 == 1.0);
    const auto c = certificate_bounds(appr, 0.5, 0.2);
    // Plug-in with M0 = 4/9, M1 = 1, n = m = 3.
    const double M0 = 4.0 / 9.0;
    CHECK(c.P_lower == doctest::Approx(M0 - (0.125 + M0 * 0.0625) / 0.5).epsilon(1e-5).scale(0.0));
    CHECK(c.P_lower > 0.0);
    CHECK(c.p_derivative_sup == doctest::Approx(1.0 / (0.2 * 0.3)));
    CHECK(c.tail_derivative_sup == doctest::Approx(M0 * std::pow(0.7, 4) / (0.2 * 0.3)).epsilon(1e-5).scale(0.0));
  }
}

TEST_CASE("invariants of every construction over the catalog") {
  for (const auto& [name, f] : circlepoly::testing::catalog()) {
    for (std::size_t N : {4u, 5u, 6u, 8u, 13u, 16u, 24u, 32u}) {
      CAPTURE(name);
      CAPTURE(N);
      const auto appr = construct(f, N);
      CHECK(appr.P.degree() == N);
      CHECK(appr.P[0] == Complex(1.0));
      CHECK(appr.s_n[0] == Complex(1.0));
      CHECK(appr.p == conjugate_reciprocal(appr.s_n));
      CHECK(appr.m + appr.q == N);
      CHECK(appr.m >= appr.n);
      CHECK(appr.n >= 1);

      // Real Taylor coefficients make P self-inversive coefficient by coefficient.
      CHECK(conjugate_reciprocal(appr.P) == appr.P);

      // |p| <= |s_n| on the closed disk.
      for (const auto& z : closed_disk_grid(2048)) {
        CHECK(std::abs(evaluate(appr.p, z)) <= std::abs(evaluate(appr.s_n, z)) * (1.0 + 1e-12));
      }

      // Sampled |P| on |z| <= a respects the lower estimate.
      const double a = 0.5;
      const auto cert = certificate_bounds(appr, a, 0.2);
      double min_P = INFINITY;
      for (const auto& z : closed_disk_grid(2048)) min_P = std::min(min_P, std::abs(evaluate(appr.P, a * z)));
      CHECK(min_P >= cert.P_lower - 1e-10);
    }
  }
}

#include <doctest.h>

#include <cmath>
#include <random>

#include "evpos/errors.hpp"
#include "evpos/expr_parser.hpp"
#include "evpos/saddle.hpp"
#include "oracles.hpp"

using namespace evpos;

namespace {

SparsePolynomial P(const char* text) { return parse_polynomial(text); }

constexpr long double kPi = 3.141592653589793238462643383279502884L;

long double log_derivative_ratio(const SparsePolynomial& f, long double rho) {
  long double value = 0, slope = 0;
  for (const auto& [e, c] : f.terms()) {
    const long double a = c.get_d();
    value += a * std::pow(rho, static_cast<int>(e));
    if (e > 0) slope += a * e * std::pow(rho, static_cast<int>(e));
  }
  return slope / value;
}

long double relative(Complex got, Complex expected) { return std::abs(got - expected) / std::abs(expected); }

}  // namespace

TEST_SUITE("saddle") {

TEST_CASE("saddle_radius examples") {
  CHECK(static_cast<double>(saddle_radius(P("1+z"), 0.25L)) == doctest::Approx(1.0 / 3).epsilon(1e-11));
  for (int k : {1, 2, 3, 5}) {
    const auto f = SparsePolynomial::from_terms({{0, Rational(1)}, {k, Rational(1)}});
    const long double alpha = 1e-4L;
    const long double rho = saddle_radius(f, alpha);
    // rho^k k a_k / alpha -> 1 with a_k = 1
    CHECK(static_cast<double>(std::pow(rho, k) * k / alpha) == doctest::Approx(1.0).epsilon(1e-3));
  }
  // Independent fine-grid scan for the first crossing.
  const auto f = P("1+z^2+z^3");
  const long double alpha = 0.01L;
  long double previous = 1e-4L, crossing = -1;
  for (int i = 1; i <= 200000 && crossing < 0; ++i) {
    const long double rho = 1e-4L + i * 1e-6L;
    if (log_derivative_ratio(f, rho) >= alpha) {
      // linear interpolation inside the last cell
      const long double a = log_derivative_ratio(f, previous) - alpha, b = log_derivative_ratio(f, rho) - alpha;
      crossing = previous + (rho - previous) * (-a) / (b - a);
    }
    previous = rho;
  }
  REQUIRE(crossing > 0);
  const long double rho = saddle_radius(f, alpha);
  CHECK(static_cast<double>(std::fabs(rho - crossing) / crossing) < 1e-6);
  CHECK(static_cast<double>(std::fabs(log_derivative_ratio(f, rho) - alpha) / alpha) < 1e-9);

  CHECK_THROWS_AS(saddle_radius(P("-1+z"), 0.1L), InputError);
  CHECK_THROWS_AS(saddle_radius(P("1+z"), 0.0L), InputError);
  // rho f'/f < 1 for 1+z, so alpha = 2 has no root.
  CHECK_THROWS_AS(saddle_radius(P("1+z"), 2.0L), SaddleNotFoundError);
}

TEST_CASE("h_derivatives examples") {
  const auto h = h_derivatives(P("1+z"), 0.5L, 1.0L, 0.0L);
  CHECK(static_cast<double>(h.h2.real()) == doctest::Approx(-0.25));
  CHECK(std::fabs(static_cast<double>(h.h2.imag())) < 1e-15);
  // h'(0) = i (rho f'/f - alpha)
  CHECK(static_cast<double>(h.h1.imag()) == doctest::Approx(0.0));

  // Small-radius asymptotics with a_k = 1/k: h'' ~ -k z^k, h''' ~ -i k^2 z^k.
  const auto f = P("1+1/3z^3");
  const long double rho = 1e-3L, rho3 = rho * rho * rho;
  const auto small = h_derivatives(f, 0.0L, rho, 0.0L);
  CHECK(relative(small.h2, Complex(-3 * rho3, 0)) < 0.01L);
  CHECK(relative(small.h3, Complex(0, -9 * rho3)) < 0.01L);

  CHECK_THROWS_AS(h_derivatives(P("1+z"), 0.5L, 1.0L, kPi), PoleError);
}

TEST_CASE("h derivatives match centered finite differences") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<long double> radius(0.05L, 0.9L), angle(-3.0L, 3.0L);
  const long double delta = 1e-5L;
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_polynomial(rng, 1 + trial % 6, 3, 1, true);
    const long double rho = radius(rng), theta = angle(rng), alpha = 0.1L;
    HDerivatives at, plus, minus;
    try {
      at = h_derivatives(f, alpha, rho, theta);
      plus = h_derivatives(f, alpha, rho, theta + delta);
      minus = h_derivatives(f, alpha, rho, theta - delta);
    } catch (const PoleError&) {
      continue;
    }
    // Skip points near a zero of f, where h is badly conditioned.
    if (std::abs(evaluate(f, std::polar(rho, theta))) < 1e-2L) continue;
    ++checked;
    const long double scale = 1 + std::abs(at.h1) + std::abs(at.h2) + std::abs(at.h3);
    const Complex fd1 = std::exp(plus.h - minus.h);  // compare through exp to avoid log branch jumps
    CHECK(static_cast<double>(std::abs(std::log(fd1) / (2 * delta) - at.h1) / scale) < 1e-6);
    CHECK(static_cast<double>(std::abs((plus.h1 - minus.h1) / (2 * delta) - at.h2) / scale) < 1e-6);
    CHECK(static_cast<double>(std::abs((plus.h2 - minus.h2) / (2 * delta) - at.h3) / scale) < 1e-6);
  }
  CHECK(checked > 50);
}

TEST_CASE("estimate_coefficient examples") {
  auto e = estimate_coefficient(P("1+z"), 10, 200);
  REQUIRE(e.exact.has_value());
  CHECK(*e.exact == Rational(oracle::binomial(200, 10)));
  REQUIRE(e.rel_error.has_value());
  CHECK(*e.rel_error < 0.05L);
  CHECK(static_cast<double>(e.alpha) == doctest::Approx(0.05));
  CHECK(e.rho > 0);

  e = estimate_coefficient(P("1+z^2+z^3"), 12, 400);
  REQUIRE(e.rel_error.has_value());
  CHECK(*e.rel_error < 0.05L);

  e = estimate_coefficient(P("1+z^2+z^3"), 0, 400);
  CHECK(static_cast<double>(e.estimate) == doctest::Approx(1.0));

  e = estimate_coefficient(P("1+z"), 10, 5000);
  CHECK_FALSE(e.exact.has_value());
  CHECK(e.estimate > 0);

  CHECK_THROWS_AS(estimate_coefficient(P("1-z^2"), 2, 10), InputError);
}

TEST_CASE("integral split") {
  const auto f = P("1+z^2+z^3");
  const auto s = integral_split(f, 12, 400);
  CHECK(s.i1 > 0);
  CHECK(s.i1 > std::fabs(s.i2) + std::fabs(s.i3));
  CHECK(s.theta0 == doctest::Approx(0.5));
  CHECK(s.eta <= s.theta0);
  const auto e = estimate_coefficient(f, 12, 400);
  const long double exact = e.exact->get_d();
  CHECK(static_cast<double>(std::fabs((s.i1 + s.i2 + s.i3) / (2 * kPi * exact) - 1)) < 0.01);
  const long double total = std::fabs(s.i1) + std::fabs(s.i2) + std::fabs(s.i3);
  for (long double imag : {s.i1_imag, s.i2_imag, s.i3_imag}) CHECK(static_cast<double>(std::fabs(imag) / total) < 1e-10);
  CHECK_THROWS_AS(integral_split(f, 0, 10), InputError);
}

TEST_CASE("diagnostic ratios approach one") {
  const auto f = P("1+z^2+z^3");
  const auto far = saddle_diagnostics(f, 0.5L);
  const auto near = saddle_diagnostics(f, 1e-4L);
  CHECK(near.k == 2);
  CHECK(near.all_within());
  CHECK(std::fabs(near.rho_ratio - 1) < std::fabs(far.rho_ratio - 1));
  // a_k = 1: rho^k k a_k / alpha -> 1
  const auto mono = saddle_diagnostics(P("1+z^3"), 1e-5L);
  CHECK(static_cast<double>(mono.rho_ratio) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("normalize_for_saddle") {
  const auto f = P("1+5z^2+z^3");
  const auto g = normalize_for_saddle(f);
  CHECK(g.coefficient(2).get_d() == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(g.constant_term() == 1);
}

}  // TEST_SUITE

#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "evpos/errors.hpp"
#include "evpos/expr_parser.hpp"
#include "evpos/polynomial.hpp"
#include "oracles.hpp"

using namespace evpos;

namespace {

SparsePolynomial P(const char* text) { return parse_polynomial(text); }

}  // namespace

TEST_SUITE("poly_core") {

TEST_CASE("from_terms canonicalizes") {
  auto f = SparsePolynomial::from_terms({{0, Rational(1)}, {2, Rational(1)}, {3, Rational(1)}, {5, Rational(-5)}});
  CHECK(f == P("1 + z^2 + z^3 - 5z^5"));
  CHECK(f.degree() == 5);
  CHECK(SparsePolynomial::from_terms({{1, Rational(1)}, {1, Rational(-1)}}).is_zero());
  auto two = SparsePolynomial::from_terms({{0, Rational(1)}, {0, Rational(1)}});
  CHECK(two == SparsePolynomial::constant(2));
  CHECK_THROWS_AS(SparsePolynomial::from_terms({{-1, Rational(1)}}), InputError);
  for (const auto& [e, c] : f.terms()) CHECK(c != 0);
  CHECK_THROWS_AS(SparsePolynomial{}.degree(), InputError);
}

TEST_CASE("multiply examples") {
  CHECK(P("1+z") * P("1+z") == P("1+2z+z^2"));
  CHECK(P("1+z^2+z^3") * SparsePolynomial::constant(1) == P("1+z^2+z^3"));
  const auto f = P("1+z^2+z^3-z^5");
  CHECK(oracle::terms_of(f * f) == oracle::naive_multiply(oracle::terms_of(f), oracle::terms_of(f)));
}

TEST_CASE("pow examples") {
  CHECK(pow(P("1+z"), 4) == P("1+4z+6z^2+4z^3+z^4"));
  CHECK(pow(P("1+z^2"), 0) == SparsePolynomial::constant(1));
  const auto f = P("1+z^2+z^3-z^5");
  for (std::uint64_t m = 0; m <= 16; ++m) CHECK(oracle::terms_of(pow(f, m)) == oracle::naive_power(f, m));
}

TEST_CASE("ring laws and evaluation homomorphism on random input") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = oracle::random_polynomial(rng, 1 + trial % 8, 5, 3);
    const auto b = oracle::random_polynomial(rng, 1 + (trial * 7) % 6, 4, 2);
    const auto c = oracle::random_polynomial(rng, 1 + trial % 4, 3);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    const Rational x = oracle::Q(trial - 17, 5);
    CHECK(evaluate(a * b, x) == evaluate(a, x) * evaluate(b, x));
    CHECK(evaluate(a + b, x) == evaluate(a, x) + evaluate(b, x));
  }
}

TEST_CASE("pow at 1, degree and lowest exponent") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    auto f = oracle::random_polynomial(rng, 1 + trial % 8, 3, 2);
    if (f.lowest_exponent() == f.degree()) continue;
    const std::uint64_t m = 1 + rng() % 64;
    const auto p = pow(f, m);
    Rational expected = 1;
    const Rational at_one = evaluate(f, Rational(1));
    for (std::uint64_t i = 0; i < m; ++i) expected *= at_one;
    CHECK(evaluate(p, Rational(1)) == expected);
    CHECK(p.degree() == m * f.degree());
    CHECK(p.lowest_exponent() == m * f.lowest_exponent());
  }
}

TEST_CASE("dense kernels agree") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> coefficient(-50, 50);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Integer> a(20 + trial * 13), b(35 + trial * 7);
    for (auto& x : a) x = coefficient(rng);
    for (auto& x : b) x = coefficient(rng);
    CHECK(dense::convolve(a, b) == dense::convolve_schoolbook(a, b));
  }
  const std::vector<Integer> base{3, -1, 2, 5};
  const auto full = dense::power(base, 9);
  const auto truncated = dense::power_truncated(base, 9, 11);
  REQUIRE(truncated.size() == 12);
  for (std::size_t i = 0; i < truncated.size(); ++i) CHECK(truncated[i] == full[i]);
}

TEST_CASE("evaluate examples") {
  CHECK(evaluate(P("1-z+z^2"), Rational(-1)) == 3);
  const auto v = evaluate(P("1+z"), std::complex<long double>(0, 1));
  CHECK(v.real() == doctest::Approx(1.0));
  CHECK(v.imag() == doctest::Approx(1.0));
  CHECK(static_cast<double>(std::abs(v)) == doctest::Approx(std::sqrt(2.0)));

  const auto f10 = P("1 + z^3 + z^4 - 0.01z^5 + z^6 + z^7 + z^10");
  const auto z = std::polar(0.9L, std::acos(-1.0L) / 3);
  const auto expected = oracle::evaluate_terms(f10, z);
  const auto got = evaluate(f10, z);
  CHECK(std::abs(got - expected) <= 1e-12L * std::abs(expected));

  const auto big = BigComplex::polar(Rational(9, 10), static_cast<double>(std::acos(-1.0L) / 3), 128);
  const auto hp = evaluate(f10, big, 128);
  CHECK(std::fabs(static_cast<double>(hp.value.re.to_long_double() - expected.real())) < 1e-12);
  CHECK(std::fabs(static_cast<double>(hp.value.im.to_long_double() - expected.imag())) < 1e-12);
  CHECK(hp.error_bound >= 0);
  CHECK(hp.error_bound < 1e-30);
}

TEST_CASE("reverse") {
  CHECK(reverse(P("1+2z+3z^2")) == P("3+2z+z^2"));
  CHECK(reverse(P("1+z^2+z^3-5z^5")) == P("-5+z^2+z^3+z^5"));
  CHECK_THROWS_AS(reverse(SparsePolynomial{}), InputError);
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = oracle::random_polynomial(rng, 1 + trial % 9, 4, 1, true);
    CHECK(reverse(reverse(f)) == f);
  }
}

TEST_CASE("primitive_decompose") {
  auto d = primitive_decompose(P("z^2+z^6"));
  CHECK(d.shift_k == 2);
  CHECK(d.stride_l == 4);
  CHECK(d.core_g == P("1+z"));
  d = primitive_decompose(P("1+z^2+z^3"));
  CHECK(d.shift_k == 0);
  CHECK(d.stride_l == 1);
  CHECK(d.core_g == P("1+z^2+z^3"));
  d = primitive_decompose(P("z^3+z^9+z^15"));
  CHECK(d.shift_k == 3);
  CHECK(d.stride_l == 6);
  CHECK(d.core_g == P("1+z+z^2"));
  CHECK_THROWS_AS(primitive_decompose(P("7")), InputError);
  CHECK_THROWS_AS(primitive_decompose(SparsePolynomial{}), InputError);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = oracle::random_polynomial(rng, 1 + trial % 5, 3, 1, true);
    const Exponent k = rng() % 4, l = 1 + rng() % 4;
    std::vector<std::pair<std::int64_t, Rational>> terms;
    for (const auto& [e, c] : g.terms()) terms.emplace_back(static_cast<std::int64_t>(k + l * e), c);
    const auto f = SparsePolynomial::from_terms(terms);
    const auto dec = primitive_decompose(f);
    CHECK(recompose(dec) == f);
    CHECK(dec.core_g.constant_term() != 0);
    Exponent common = 0;
    for (const auto& [e, c] : dec.core_g.terms()) common = std::gcd(common, e);
    CHECK(common == 1);
    // stride maximal: no larger stride divides all support differences
    for (Exponent bigger = dec.stride_l + 1; bigger <= f.degree(); ++bigger) {
      bool divides = true;
      for (const auto& [e, c] : f.terms()) divides = divides && (e - dec.shift_k) % bigger == 0;
      CHECK_FALSE(divides);
    }
  }
}

TEST_CASE("scale_variable") {
  CHECK(scale_variable(P("1+2z"), Rational(1, 2)) == P("1+z"));
  const auto f = P("1 - 3z^2 + 5/7z^4");
  CHECK(scale_variable(scale_variable(f, Rational(3, 5)), Rational(5, 3)) == f);
  CHECK_THROWS_AS(scale_variable(f, Rational(0)), InputError);
  CHECK_THROWS_AS(scale_variable(f, Rational(-1)), InputError);
}

TEST_CASE("support_profile") {
  auto s = support_profile(P("1 + z^3 + z^4 - 0.01z^5 + z^6 + z^7 + z^10"));
  CHECK(s.s_plus == std::set<Exponent>{0, 3, 4, 6, 7, 10});
  CHECK(s.s_minus == std::set<Exponent>{5});
  CHECK(s.s_all.size() == 7);
  s = support_profile(SparsePolynomial{});
  CHECK(s.s_plus.empty());
  CHECK(s.s_minus.empty());
  CHECK(s.s_all.empty());
  s = support_profile(P("1-z"));
  CHECK(s.s_plus == std::set<Exponent>{0});
  CHECK(s.s_minus == std::set<Exponent>{1});
}

TEST_CASE("integer_form") {
  const auto form = integer_form(P("1/2 - 2/3z^2"));
  CHECK(form.denominator == 6);
  CHECK(form.numerators == std::vector<Integer>{3, 0, -4});
}

}  // TEST_SUITE

#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "evpos/errors.hpp"
#include "evpos/expr_parser.hpp"
#include "evpos/partitions.hpp"
#include "evpos/powers.hpp"
#include "oracles.hpp"

using namespace evpos;

namespace {

SparsePolynomial P(const char* text) { return parse_polynomial(text); }

SparsePolynomial example(long a) {
  return SparsePolynomial::from_terms({{0, Rational(1)}, {2, Rational(1)}, {3, Rational(1)}, {5, Rational(-a)}});
}

std::uint64_t weighted(const Multiplicities& lambda) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) total += (i + 1) * lambda[i];
  return total;
}

}  // namespace

TEST_SUITE("partitions") {

TEST_CASE("enumerate_partitions examples") {
  CHECK(enumerate_partitions(5, 5).size() == 7);
  const auto zero = enumerate_partitions(0, 3);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0] == Multiplicities{0, 0, 0});
  const auto three = enumerate_partitions(3, 2);
  REQUIRE(three.size() == 2);
  std::set<Multiplicities> got(three.begin(), three.end());
  CHECK(got == std::set<Multiplicities>{{3, 0}, {1, 1}});
  CHECK_THROWS_AS(PartitionEnumerator(3, 0), InputError);
}

TEST_CASE("enumeration counts, uniqueness and order") {
  for (std::size_t n = 0; n < oracle::kPartitionCounts.size(); ++n) {
    const auto all = enumerate_partitions(n, std::max<std::size_t>(n, 1));
    CHECK(all.size() == static_cast<std::size_t>(oracle::kPartitionCounts[n]));
    CHECK(std::set<Multiplicities>(all.begin(), all.end()).size() == all.size());
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& lambda : all) CHECK(weighted(lambda) == n);
  }
  // parts bounded by d: compare against brute-force enumeration
  for (std::size_t d = 1; d <= 5; ++d) {
    std::vector<Exponent> parts;
    for (Exponent p = 1; p <= d; ++p) parts.push_back(p);
    for (std::size_t n = 0; n <= 12; ++n) {
      std::size_t brute = 0;
      oracle::for_each_decomposition(parts, n, [&](const std::vector<Exponent>&) { ++brute; });
      CHECK(enumerate_partitions(n, d).size() == brute);
    }
  }
}

TEST_CASE("contribution examples") {
  const long a = 7;
  const auto f = example(a);
  CHECK(contribution({0, 1, 1, 0, 0}, 10, f) == 90);
  CHECK(contribution({0, 0, 0, 0, 1}, 10, f) == -10 * a);
  CHECK(contribution({0, 0, 0, 0, 0}, 10, f) == 1);
  CHECK(contribution({}, 3, f) == 1);
  // zero coefficient a_1 with a part of size 1
  CHECK(contribution({1, 2, 0, 0, 0}, 10, f) == 0);
  // more parts than factors
  CHECK(contribution({0, 4, 0, 0, 0}, 3, f) == 0);
  // a_0 enters as a_0^{m - sum lambda}
  CHECK(contribution({1}, 3, P("2+z")) == 12);
  BinomialCache cache;
  CHECK(cache.get(10, 3) == 120);
  CHECK(cache.get(52, 5) == oracle::binomial(52, 5));
}

TEST_CASE("coefficient_via_partitions") {
  CHECK(coefficient_via_partitions(example(1), 5, 10) == 80);
  CHECK(coefficient_via_partitions(P("3/2+z-z^2"), 0, 7) == Rational(2187, 128));
  CHECK_THROWS_AS(coefficient_via_partitions(example(1), 13, 5), BudgetError);
  CHECK_THROWS_AS(coefficient_via_partitions(example(1), 5, 31), BudgetError);
  CHECK_NOTHROW(coefficient_via_partitions(example(1), 13, 5, {13, 30}));

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const auto f = oracle::random_polynomial(rng, 1 + trial % 5, 3, 1 + trial % 3);
    const std::size_t n = rng() % 9;
    const std::uint64_t m = 1 + rng() % 20;
    CHECK(coefficient_via_partitions(f, n, m) == oracle::coefficient(oracle::naive_power(f, m), n));
  }
}

TEST_CASE("compress examples") {
  const auto f = example(3);
  const auto term = compress({0, 0, 0, 0, 1}, f, 5, 10);
  REQUIRE(term.mapped.has_value());
  CHECK(*term.mapped == Multiplicities{0, 1, 1, 0, 0});
  CHECK(term.replaced_index == 5);
  CHECK(term.replacement == std::vector<Exponent>{2, 3});
  CHECK(term.contribution == -30);
  CHECK(term.mapped_contribution == 90);
  CHECK_THROWS_AS(compress({0, 1, 1, 0, 0}, f, 5, 10), PreconditionError);
}

TEST_CASE("compression structure") {
  const auto f = P("1+z^2+z^3-1/10z^4+z^5");
  const std::size_t d = f.degree();
  for (std::size_t n = 1; n <= 10; ++n) {
    std::map<Multiplicities, int> preimages;
    BinomialCache cache;
    for (const auto& lambda : enumerate_partitions(n, d)) {
      if (contribution(lambda, 40, f, &cache) >= 0) continue;
      const auto term = compress(lambda, f, n, 40, &cache);
      const auto& mapped = *term.mapped;
      CHECK(weighted(mapped) == n);
      std::uint64_t before = 0, after = 0;
      for (std::uint64_t x : lambda) before += x;
      for (std::uint64_t x : mapped) after += x;
      CHECK(after == before + term.replacement.size() - 1);
      // partial sums move by at most j
      long prefix_before = 0, prefix_after = 0;
      for (std::size_t t = 0; t < d; ++t) {
        prefix_before += static_cast<long>(lambda[t]);
        prefix_after += static_cast<long>(mapped[t]);
        CHECK(std::labs(prefix_before - prefix_after) <= static_cast<long>(term.replaced_index));
      }
      ++preimages[mapped];
    }
    for (const auto& [image, count] : preimages) CHECK(count <= static_cast<int>(d));
  }
}

TEST_CASE("compression inequality at moderate m") {
  const auto f = P("1+z^2+z^3-1/10z^4+z^5");
  const Rational d(static_cast<long>(f.degree()));
  BinomialCache cache;
  for (std::size_t n = 1; n <= 6; ++n) {
    Rational resummed = 0;
    for (const auto& lambda : enumerate_partitions(n, f.degree())) {
      const Rational c = contribution(lambda, 2000, f, &cache);
      if (c >= 0) continue;
      const auto term = compress(lambda, f, n, 2000, &cache);
      CHECK(term.mapped_contribution > d * abs(c));
      resummed += c + term.mapped_contribution / d;
    }
    CHECK(resummed >= 0);
  }
}

TEST_CASE("binomial ratio examples") {
  auto r = binomial_ratio_bound_check(Integer(1000000), Integer(3), 1, 1, Rational(1, 2), 3);
  CHECK(r.holds);
  // b = 3 exceeds (4d)^{-d} a^gamma = 1000 / 1728.
  CHECK_FALSE(r.hypotheses_ok);
  CHECK(r.hypothesis_note.find("b >") != std::string::npos);

  // j = 1, i = 0: ratio (b+1)/(a-b) against a^{-(1-gamma)}
  for (long b : {0L, 1L, 5L}) {
    const Integer a(250000);
    r = binomial_ratio_bound_check(a, Integer(b), 0, 1, Rational(1, 2), 1);
    const bool closed_form = oracle::Q(b + 1, 250000 - b) <= oracle::Q(1, 500);
    CHECK(r.holds == closed_form);
  }
  CHECK(binomial_ratio_threshold(3, Rational(1, 2)) == 576);
  CHECK_THROWS_AS(binomial_ratio_bound_check(Integer(10), Integer(1), 0, 1, Rational(1), 1), InputError);
}

TEST_CASE("consecutive_decomposition") {
  auto t = consecutive_decomposition(Integer(72), Integer(3));
  CHECK(t.a == 8);
  CHECK(t.b == 8);
  CHECK(t.c == 8);
  for (long m = 2; m <= 40; ++m) {
    t = consecutive_decomposition(Integer(8 * m * m), Integer(m));
    CHECK(abs(t.a - t.b) <= 1);
    CHECK(abs(t.b - t.c) <= 1);
    CHECK(abs(t.a - t.c) <= 1);
  }
  CHECK_THROWS_AS(consecutive_decomposition(Integer(71), Integer(3)), InputError);
  CHECK_THROWS_AS(consecutive_decomposition(Integer(100), Integer(1)), InputError);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 2000; ++trial) {
    const long m = 2 + static_cast<long>(rng() % 300);
    const long x = 8 * m * m + static_cast<long>(rng() % (1000000 - 8 * m * m + 1));
    t = consecutive_decomposition(Integer(x), Integer(m));
    CHECK(t.a * m + t.b * (m + 1) + t.c * (m - 1) == x);
    // a, b, c >= x / (4m)
    CHECK(4 * m * t.a >= x);
    CHECK(4 * m * t.b >= x);
    CHECK(4 * m * t.c >= x);
  }
}

}  // TEST_SUITE

#include <doctest.h>

#include <numeric>
#include <random>

#include "evpos/covering.hpp"
#include "evpos/errors.hpp"
#include "evpos/expr_parser.hpp"
#include "oracles.hpp"

using namespace evpos;

namespace {

SparsePolynomial P(const char* text) { return parse_polynomial(text); }

Exponent sum_of(const PartMultiset& parts) { return std::accumulate(parts.begin(), parts.end(), Exponent{0}); }

void check_witnesses(const SparsePolynomial& f, const std::map<Exponent, PartMultiset>& witnesses) {
  const auto plus = support_profile(f).s_plus;
  for (const auto& [k, parts] : witnesses) {
    CHECK(sum_of(parts) == k);
    for (Exponent p : parts) {
      CHECK(p > 0);
      CHECK(plus.count(p) == 1);
    }
  }
}

}  // namespace

TEST_SUITE("covering") {

TEST_CASE("one_sided_covering examples") {
  auto c = one_sided_covering(P("1 + z^3 + z^4 - 0.01z^5 + z^6 + z^7 + z^10"));
  CHECK_FALSE(c.covered);
  CHECK(c.uncovered == std::set<Exponent>{5});
  CHECK(c.reason == CoveringReason::kUncovered);

  c = one_sided_covering(P("1+z^2-z^3+z^4"));
  CHECK_FALSE(c.covered);
  CHECK(c.uncovered == std::set<Exponent>{3});

  c = one_sided_covering(P("1+z^2+z^3-1/10z^4+z^5"));
  CHECK(c.covered);
  REQUIRE(c.witnesses.count(4) == 1);
  CHECK(c.witnesses.at(4) == PartMultiset{2, 2});

  c = one_sided_covering(P("-1+z^2"));
  CHECK_FALSE(c.covered);
  CHECK(c.reason == CoveringReason::kHypothesisSign);
  CHECK_THROWS_AS(one_sided_covering(SparsePolynomial{}), InputError);
}

TEST_CASE("covering_report examples") {
  const auto f = P("1+z^2+z^3-1/10z^4+z^5");
  auto r = covering_report(f);
  CHECK(r.one_sided_forward);
  // reverse(f) = 1 - 1/10z + z^2 + z^3 + z^5: index 1 cannot be reached.
  CHECK_FALSE(r.one_sided_reverse);
  CHECK(r.uncovered_reverse == std::set<Exponent>{1});
  CHECK_FALSE(r.two_sided);
  CHECK(r.two_sided == (r.one_sided_forward && r.one_sided_reverse));

  r = covering_report(P("1+z^2+z^3-5z^5"));
  CHECK(r.one_sided_forward);
  CHECK(r.witnesses.at(5) == PartMultiset{2, 3});
  CHECK_FALSE(r.one_sided_reverse);
  CHECK(r.reverse_reason == CoveringReason::kHypothesisSign);
  CHECK_FALSE(r.two_sided);

  r = covering_report(P("1+z^2+z^3-1/10z^4+z^5+z^6"));
  CHECK(r.two_sided);
  check_witnesses(P("1+z^2+z^3-1/10z^4+z^5+z^6"), r.witnesses);
}

TEST_CASE("De Angelis condition implies two-sided covering") {
  std::mt19937_64 rng(31);
  int tested = 0;
  while (tested < 500) {
    const Exponent d = 2 + rng() % 10;
    auto f = oracle::random_polynomial(rng, d, 4, 1, true);
    if (f.coefficient(1) <= 0 || f.coefficient(d - 1) <= 0) continue;
    ++tested;
    const auto r = covering_report(f);
    CHECK(r.two_sided);
    check_witnesses(f, r.witnesses);
    check_witnesses(reverse(f), r.witnesses_reverse);
  }
}

TEST_CASE("DP agrees with exhaustive enumeration") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const Exponent d = 2 + rng() % 11;
    const auto f = oracle::random_polynomial(rng, d, 3, 1, true);
    const auto parts = oracle::positive_parts(f);
    const auto c = one_sided_covering(f);
    for (Exponent k : support_profile(f).s_minus) {
      const long brute = oracle::brute_weight(parts, k);
      CHECK((c.uncovered.count(k) == 1) == (brute < 0));
      if (brute >= 0) {
        const auto w = weight_of_index(f, k);
        CHECK(static_cast<long>(w.weight) == brute);
        CHECK(w.decomposition.size() == w.weight);
        CHECK(sum_of(w.decomposition) == k);
      } else {
        CHECK_THROWS_AS(weight_of_index(f, k), NotCoverableError);
      }
    }
    check_witnesses(f, c.witnesses);
  }
}

TEST_CASE("tie break is the lexicographically smallest maximizer") {
  // parts {2,3,5}: 7 = 2+5 = 2+2+3
  auto w = weight_of_index(P("1+z^2+z^3+z^5-z^7"), 7);
  CHECK(w.weight == 3);
  CHECK(w.decomposition == PartMultiset{2, 2, 3});
  // parts {3,4,5}: 12 = 3+3+3+3 (4 parts)
  w = weight_of_index(P("1+z^3+z^4+z^5-z^12+z^13"), 12);
  CHECK(w.decomposition == PartMultiset{3, 3, 3, 3});
  // parts {2,3,4}: 9 = 2+2+2+3 is the only four-part decomposition
  w = weight_of_index(P("1+z^2+z^3+z^4-z^9+z^10"), 9);
  CHECK(w.weight == 4);
  CHECK(w.decomposition == PartMultiset{2, 2, 2, 3});
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = oracle::random_polynomial(rng, 3 + rng() % 9, 3, 1, true);
    const auto parts = oracle::positive_parts(f);
    for (Exponent k = 1; k <= f.degree(); ++k) {
      std::vector<Exponent> best;
      bool found = false;
      oracle::for_each_decomposition(parts, k, [&](const std::vector<Exponent>& dcmp) {
        if (!found || dcmp.size() > best.size() || (dcmp.size() == best.size() && dcmp < best)) best = dcmp;
        found = true;
      });
      if (!found) continue;
      CHECK(weight_of_index(f, k).decomposition == best);
    }
  }
}

TEST_CASE("weight_of_index examples") {
  CHECK(weight_of_index(P("1+z^2+z^3-7z^5"), 5).weight == 2);
  CHECK(weight_of_index(P("1+z^2+z^3-7z^5"), 5).decomposition == PartMultiset{2, 3});
  const auto ones = P("1+z-z^4+z^6");
  for (Exponent k = 1; k <= 6; ++k) CHECK(weight_of_index(ones, k).weight == k);
  CHECK(weight_of_index(P("1+z^2+z^3-1/10z^4+z^5"), 4).weight == 2);
  CHECK_THROWS_AS(weight_of_index(P("1+z^2-z^3+z^4"), 3), NotCoverableError);
}

TEST_CASE("global_weight") {
  CHECK(global_weight(P("1+z^2+z^3-z^5")) == std::optional<std::size_t>(2));
  CHECK(global_weight(P("1+z^2+z^3-100z^5")) == std::optional<std::size_t>(2));
  CHECK_FALSE(global_weight(P("1+z+z^2")).has_value());
  try {
    global_weight(P("1+z^2-z^3+z^4"));
    FAIL("expected NotCoverableError");
  } catch (const NotCoverableError& e) {
    CHECK(e.index() == 3);
  }
  const auto f = P("1+z^2+z^3-1/10z^4+z^5");
  const auto w = *global_weight(f);
  CHECK(covering_report(f).global_weight == std::optional<std::size_t>(w));
  for (std::uint64_t m : {2u, 3u}) {
    const auto gm = global_weight(pow(f, m));
    CHECK((!gm.has_value() || *gm >= w));
  }
}

TEST_CASE("monotonicity under adding a positive term") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const Exponent d = 3 + rng() % 9;
    const auto f = oracle::random_polynomial(rng, d, 3, 1, true);
    const Exponent e = 1 + rng() % (d - 1);
    if (f.coefficient(e) != 0) continue;
    const auto bigger = f + SparsePolynomial::monomial(e, 1);
    for (Exponent k = 1; k <= d; ++k) {
      IndexWeight before, after;
      bool had = true, has = true;
      try {
        before = weight_of_index(f, k);
      } catch (const NotCoverableError&) {
        had = false;
      }
      try {
        after = weight_of_index(bigger, k);
      } catch (const NotCoverableError&) {
        has = false;
      }
      if (had) {
        CHECK(has);
        CHECK(after.weight >= before.weight);
      }
    }
  }
}

TEST_CASE("two-sided covering is inherited by powers; weight nondecreasing") {
  std::mt19937_64 rng(55);
  int tested = 0;
  for (int trial = 0; trial < 400 && tested < 25; ++trial) {
    const auto f = oracle::random_polynomial(rng, 2 + rng() % 5, 2, 1, true);
    if (support_profile(f).s_minus.empty() || !covering_report(f).two_sided) continue;
    ++tested;
    std::optional<std::size_t> previous = global_weight(f);
    for (std::uint64_t m = 2; m <= 6; ++m) {
      const auto fm = pow(f, m);
      const auto r = covering_report(fm);
      CHECK(r.two_sided);
      const auto current = global_weight(fm);
      // A power without negative coefficients has unbounded weight, and a
      // later power can have negative coefficients again, so only finite
      // weights are compared.
      if (previous.has_value() && current.has_value()) CHECK(*current >= *previous);
      if (current.has_value()) previous = current;
    }
  }
  CHECK(tested >= 10);
}

}  // TEST_SUITE

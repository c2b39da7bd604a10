#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "evpos/polynomial.hpp"

namespace evpos {

/// Multiplicity vector: entry i-1 counts how many parts equal i.
using Multiplicities = std::vector<std::uint64_t>;

/// Streams every partition of n into parts <= d exactly once, as
/// multiplicity vectors of length d in lexicographic order.
class PartitionEnumerator {
 public:
  PartitionEnumerator(std::size_t n, std::size_t d);
  /// Advances to the next partition; false once exhausted.
  bool next();
  const Multiplicities& current() const { return current_; }

 private:
  bool fill_from(std::size_t index, std::uint64_t remaining);
  std::size_t n_;
  std::size_t d_;
  Multiplicities current_;
  /// reach_[q][r]: r is a sum of parts drawn from [q, d].
  std::vector<std::vector<bool>> reach_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Multiplicities> enumerate_partitions(std::size_t n, std::size_t d);

/// Exact binomial coefficients C(top, k) with a memo table.
class BinomialCache {
 public:
  const Integer& get(std::uint64_t top, std::uint64_t k);

 private:
  std::map<std::pair<std::uint64_t, std::uint64_t>, Integer> table_;
};

/// Cont(lambda) for [z^n] f^m: the product of nested binomials
/// C(m, l_1) C(m - l_1, l_2) ... times prod a_i^{l_i} times
/// a_0^{m - sum l_i}. Zero when sum l_i > m.
Rational contribution(const Multiplicities& lambda, std::uint64_t m, const SparsePolynomial& f,
                      BinomialCache* cache = nullptr);

struct PartitionGuard {
  std::size_t max_n = 12;
  std::uint64_t max_m = 30;
};

/// [z^n] f^m as the sum of contributions over partitions of n into parts
/// <= deg f. Throws BudgetError when the guard is exceeded.
Rational coefficient_via_partitions(const SparsePolynomial& f, std::size_t n, std::uint64_t m,
                                    const PartitionGuard& guard = {});

struct PartitionTerm {
  Multiplicities multiplicities;
  Rational contribution;
  /// Index j whose negative part was replaced.
  std::size_t replaced_index = 0;
  std::vector<Exponent> replacement;  // maximal-weight decomposition of j
  std::optional<Multiplicities> mapped;
  Rational mapped_contribution;
};

/// The compression map: replace one part j (least j with a_j < 0 and
/// lambda_j > 0) by the deterministic maximal-weight decomposition of j.
/// Throws PreconditionError unless Cont(lambda) < 0.
PartitionTerm compress(const Multiplicities& lambda, const SparsePolynomial& f, std::size_t n, std::uint64_t m,
                       BinomialCache* cache = nullptr);

struct BinomialRatioCheck {
  bool holds = false;
  bool hypotheses_ok = false;
  std::string hypothesis_note;
};

/// Lower bound on a used as A(d, gamma) in the ratio bound.
Integer binomial_ratio_threshold(std::size_t d, const Rational& gamma);

/// Exact test of C(a,b) / C(a-i, b+j) <= a^{-j(1-gamma)} for rational
/// gamma in (0,1). Hypothesis violations are reported, not thrown.
BinomialRatioCheck binomial_ratio_bound_check(const Integer& a, const Integer& b, long i, long j,
                                              const Rational& gamma, std::size_t d);

struct ThreeWay {
  Integer a, b, c;
};

/// x = a m + b (m+1) + c (m-1) with a, b, c >= x / (4m). Requires x >= 8 m^2
/// and m >= 2 (InputError otherwise).
ThreeWay consecutive_decomposition(const Integer& x, const Integer& m);

}  // namespace evpos

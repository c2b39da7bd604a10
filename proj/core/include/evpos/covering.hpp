#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evpos/polynomial.hpp"

namespace evpos {

enum class CoveringReason {
  kOk,
  kUncovered,        // some negative index is not a sum of positive indices
  kHypothesisSign,   // constant term not positive (HYPOTHESIS_SIGN)
};

std::string to_string(CoveringReason reason);

/// Ascending multiset of positive-support exponents.
using PartMultiset = std::vector<Exponent>;

struct OneSidedCovering {
  bool covered = false;
  CoveringReason reason = CoveringReason::kOk;
  std::set<Exponent> uncovered;
  std::map<Exponent, PartMultiset> witnesses;
};

struct IndexWeight {
  std::size_t weight = 0;
  PartMultiset decomposition;
};

/// Global weight w(f); std::nullopt means unbounded (no negative coefficient).
using GlobalWeight = std::optional<std::size_t>;

struct CoveringReport {
  bool one_sided_forward = false;
  bool one_sided_reverse = false;
  bool two_sided = false;
  CoveringReason forward_reason = CoveringReason::kOk;
  CoveringReason reverse_reason = CoveringReason::kOk;
  /// Uncovered exponents of f and of reverse(f) (reverse indexing).
  std::set<Exponent> uncovered;
  std::set<Exponent> uncovered_reverse;
  std::map<Exponent, PartMultiset> witnesses;
  std::map<Exponent, PartMultiset> witnesses_reverse;
  /// w_f(k) for every covered k in S^-(f).
  std::map<Exponent, std::size_t> weights;
  GlobalWeight global_weight;
};

/// Reachability of every negative exponent from S^+(f) \ {0} using
/// unbounded repetition. Only the constant-term sign is screened here; the
/// leading-coefficient condition belongs to the reverse side.
/// Throws InputError for the zero polynomial.
OneSidedCovering one_sided_covering(const SparsePolynomial& f);

/// Runs the forward and reverse checks and fills the weights.
CoveringReport covering_report(const SparsePolynomial& f);

/// Maximum number of parts over decompositions of k into S^+(f) \ {0};
/// ties broken by the lexicographically smallest ascending multiset.
/// Throws NotCoverableError when k has no decomposition.
IndexWeight weight_of_index(const SparsePolynomial& f, Exponent k);

/// min over S^-(f) of w_f(k). Throws NotCoverableError on covering failure.
GlobalWeight global_weight(const SparsePolynomial& f);

}  // namespace evpos

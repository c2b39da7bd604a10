#include "evpos/covering.hpp"

#include <algorithm>

#include "evpos/errors.hpp"

namespace evpos {

std::string to_string(CoveringReason reason) {
  switch (reason) {
    case CoveringReason::kOk:
      return "OK";
    case CoveringReason::kUncovered:
      return "UNCOVERED";
    case CoveringReason::kHypothesisSign:
      return "HYPOTHESIS_SIGN";
  }
  return "UNKNOWN";
}

namespace {

// longest[i][x]: most parts summing to x using only parts[i..]; -1 if none.
class LongestDecomposition {
 public:
  LongestDecomposition(std::vector<Exponent> parts, Exponent max_target)
      : parts_(std::move(parts)), table_(parts_.size() + 1, std::vector<long>(max_target + 1, -1)) {
    for (auto& row : table_) row[0] = 0;
    for (std::size_t i = parts_.size(); i-- > 0;) {
      const Exponent p = parts_[i];
      for (Exponent x = 1; x <= max_target; ++x) {
        long best = table_[i + 1][x];
        if (x >= p && table_[i][x - p] >= 0) best = std::max(best, table_[i][x - p] + 1);
        table_[i][x] = best;
      }
    }
  }

  long weight(Exponent x) const { return table_[0][x]; }

  PartMultiset smallest_maximal(Exponent x) const {
    PartMultiset out;
    long needed = table_[0][x];
    std::size_t i = 0;
    while (needed > 0) {
      for (std::size_t j = i; j < parts_.size(); ++j) {
        const Exponent p = parts_[j];
        if (p <= x && table_[j][x - p] == needed - 1) {
          out.push_back(p);
          x -= p;
          --needed;
          i = j;
          break;
        }
      }
    }
    return out;
  }

 private:
  std::vector<Exponent> parts_;
  std::vector<std::vector<long>> table_;
};

std::vector<Exponent> positive_parts(const SparsePolynomial& f) {
  std::vector<Exponent> parts;
  for (const auto& [e, c] : f.terms()) {
    if (e > 0 && c > 0) parts.push_back(e);
  }
  return parts;
}

}  // namespace

OneSidedCovering one_sided_covering(const SparsePolynomial& f) {
  if (f.is_zero()) throw InputError("covering check of the zero polynomial");
  OneSidedCovering out;
  const SupportProfile support = support_profile(f);
  if (f.constant_term() <= 0) {
    out.reason = CoveringReason::kHypothesisSign;
    out.uncovered = support.s_minus;
    return out;
  }
  const Exponent top = support.s_minus.empty() ? 0 : *support.s_minus.rbegin();
  const LongestDecomposition table(positive_parts(f), top);
  for (Exponent k : support.s_minus) {
    if (table.weight(k) < 0) {
      out.uncovered.insert(k);
    } else {
      out.witnesses.emplace(k, table.smallest_maximal(k));
    }
  }
  out.covered = out.uncovered.empty();
  out.reason = out.covered ? CoveringReason::kOk : CoveringReason::kUncovered;
  return out;
}

CoveringReport covering_report(const SparsePolynomial& f) {
  if (f.is_zero()) throw InputError("covering check of the zero polynomial");
  CoveringReport report;
  OneSidedCovering forward = one_sided_covering(f);
  OneSidedCovering backward = one_sided_covering(reverse(f));
  report.one_sided_forward = forward.covered;
  report.one_sided_reverse = backward.covered;
  report.two_sided = forward.covered && backward.covered;
  report.forward_reason = forward.reason;
  report.reverse_reason = backward.reason;
  report.uncovered = std::move(forward.uncovered);
  report.uncovered_reverse = std::move(backward.uncovered);
  report.witnesses = std::move(forward.witnesses);
  report.witnesses_reverse = std::move(backward.witnesses);
  for (const auto& [k, parts] : report.witnesses) report.weights.emplace(k, parts.size());
  if (forward.covered) {
    if (!report.weights.empty()) {
      std::size_t w = report.weights.begin()->second;
      for (const auto& [k, weight] : report.weights) w = std::min(w, weight);
      report.global_weight = w;
    }
  }
  return report;
}

IndexWeight weight_of_index(const SparsePolynomial& f, Exponent k) {
  const LongestDecomposition table(positive_parts(f), k);
  if (k == 0 || table.weight(k) < 0) {
    throw NotCoverableError("index " + std::to_string(k) + " is not a sum of positive-support exponents", k);
  }
  IndexWeight out;
  out.decomposition = table.smallest_maximal(k);
  out.weight = out.decomposition.size();
  return out;
}

GlobalWeight global_weight(const SparsePolynomial& f) {
  const OneSidedCovering covering = one_sided_covering(f);
  if (!covering.covered) {
    const Exponent bad = covering.uncovered.empty() ? 0 : *covering.uncovered.begin();
    throw NotCoverableError("covering fails (" + to_string(covering.reason) + ")", bad);
  }
  GlobalWeight out;
  for (const auto& [k, parts] : covering.witnesses) {
    out = out ? std::min(*out, parts.size()) : parts.size();
  }
  return out;
}

}  // namespace evpos

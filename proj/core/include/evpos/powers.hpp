#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "evpos/polynomial.hpp"

namespace evpos {

/// Exact coefficients of f^m. Stored as integer numerators over the common
/// denominator base^m, where base is the lcm of f's denominators.
struct PowerProfile {
  std::uint64_t m = 0;
  std::vector<Integer> numerators;  // length m*deg(f)+1
  Integer denominator_base = 1;
  std::optional<std::size_t> first_negative;
  std::set<std::size_t> negative_indices;

  Rational coefficient(std::size_t n) const;
  int sign(std::size_t n) const { return sgn(numerators.at(n)); }
};

PowerProfile profile(const SparsePolynomial& f, std::uint64_t m);

/// Iterates f^1, f^2, ... by repeated multiplication with f.
class PowerSequence {
 public:
  explicit PowerSequence(const SparsePolynomial& f);
  /// Advances to the next power and returns its profile.
  const PowerProfile& next();
  const PowerProfile& current() const { return current_; }

 private:
  IntegerForm base_;
  PowerProfile current_;
};

struct ThresholdResult {
  std::optional<std::uint64_t> m0;
  std::uint64_t m_max = 0;
  /// Powers in [1, m_max] that still had a negative coefficient.
  std::vector<std::uint64_t> negative_powers;
  /// The window search is a heuristic; this records the hypotheses under
  /// which a window can be extrapolated (monic / f(1) > 0).
  std::string note;
};

/// Least m0 such that f^m has no negative coefficient for all m in
/// [m0, m_max]. Heuristic: says nothing about m > m_max.
ThresholdResult threshold_search(const SparsePolynomial& f, std::uint64_t m_max);

struct RangeCheck {
  bool ok = true;
  std::vector<std::size_t> violations;
};

/// Checks [z^n] f^m >= 0 for n in [n_lo, n_hi]. Only the coefficients up to
/// n_hi are computed (power-series recurrence). Throws InputError when the
/// range is not within [0, m*deg f].
RangeCheck range_check(const SparsePolynomial& f, std::uint64_t m, std::size_t n_lo, std::size_t n_hi);

/// Exact [z^n] f^m without computing the full power.
Rational power_coefficient(const SparsePolynomial& f, std::uint64_t m, std::size_t n);

/// CSV rows "m,n,numerator,denominator_exponent,sign"; the coefficient is
/// numerator / base^denominator_exponent with base the lcm of f's
/// denominators.
void write_profile_csv(std::ostream& out, const PowerProfile& profile, bool header = true);

/// CSV rows "m,n,sign" for m in [m_lo, m_hi].
void write_sign_profile_csv(std::ostream& out, const SparsePolynomial& f, std::uint64_t m_lo,
                            std::uint64_t m_hi);

}  // namespace evpos

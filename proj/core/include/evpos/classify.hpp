#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evpos/covering.hpp"
#include "evpos/polynomial.hpp"
#include "evpos/powers.hpp"
#include "evpos/strongpos.hpp"

namespace evpos {

enum class ClassificationStatus { kEventuallyNonNegative, kNotEventuallyNonNegative, kInconclusive };
std::string to_string(ClassificationStatus status);

enum class NecessityKind {
  kSignScreen,               // constant or leading coefficient of g negative
  kCoveringFailure,          // persistent negative index
  kStrongPositivityFailure,  // point with g(|z|) <= |g(z)|
};
std::string to_string(NecessityKind kind);

struct NecessityWitness {
  NecessityKind kind = NecessityKind::kSignScreen;
  /// Covering failures: the least uncovered index k of g (forward) or of
  /// reverse(g) (reverse == true). Sign screens: 0 for the constant term,
  /// deg g for the leading one.
  std::optional<Exponent> index;
  bool reverse = false;
  std::optional<StrongPositivityWitness> point;
  std::string description;
};

struct EmpiricalData {
  ThresholdResult threshold;
  std::uint64_t window_lo = 1;
  std::uint64_t window_hi = 0;
};

struct ClassificationVerdict {
  ClassificationStatus status = ClassificationStatus::kInconclusive;
  /// Strictly positive coefficients for all large m (De Angelis upgrade).
  bool eventually_positive = false;
  bool constant_input = false;
  PrimitiveDecomposition decomposition;
  CoveringReport covering;
  std::optional<StrongPositivityVerdict> strong_positivity;
  std::optional<NecessityWitness> witness;
  std::optional<EmpiricalData> empirical;
  std::string note;
};

struct ClassifyOptions {
  CertifyOptions certify;
  /// Run the certifier even when the covering check already decides.
  bool always_certify = true;
  bool empirical = false;
  std::uint64_t empirical_m_max = 150;
};

/// Throws InputError for the zero polynomial.
ClassificationVerdict classify(const SparsePolynomial& f, const ClassifyOptions& options = {});

/// a_0, a_d, a_1, a_{d-1} > 0. Throws InputError when deg f < 2.
bool de_angelis_check(const SparsePolynomial& f);

/// Index of [z^j] g^m inside f^m for f = z^k g(z^l): m k + l j.
Exponent index_in_power(const PrimitiveDecomposition& decomposition, std::uint64_t m, Exponent j);

struct TranscriptEntry {
  std::uint64_t m = 0;
  /// Index into g^m (and into f^m).
  Exponent index_g = 0;
  Exponent index_f = 0;
  Rational value;
  std::optional<Rational> predicted;
  bool ok = false;
};

struct NecessityTranscript {
  NecessityKind kind = NecessityKind::kSignScreen;
  std::vector<TranscriptEntry> entries;
  /// Strong-positivity branch: the point check.
  bool point_verified = false;
  bool verified = false;
  std::string conclusion;
};

/// Machine-checkable evidence for a NotEventuallyNonNegative verdict.
/// Throws PreconditionError for any other status.
NecessityTranscript necessity_witness(const SparsePolynomial& f, const ClassificationVerdict& verdict,
                                      std::uint64_t m_max = 40);

}  // namespace evpos

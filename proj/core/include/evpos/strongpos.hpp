#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "evpos/gap.hpp"
#include "evpos/polynomial.hpp"

namespace evpos {

/// Support indices j >= 1 split by whether e^{i j phi} = 1, for
/// phi = 2 pi p / q in lowest terms.
struct PhaseSets {
  std::set<Exponent> t_set;
  std::set<Exponent> t_star_set;
  std::optional<Exponent> t0;
  std::optional<Exponent> t_star;
};

/// phi is given as the fraction p/q of a full turn. Throws
/// PreconditionError when t_set is empty (non-primitive input).
PhaseSets phase_sets(const SparsePolynomial& f, const Rational& turn_fraction);

enum class StrongPositivityStatus { kCertified, kRefuted, kInconclusive };
std::string to_string(StrongPositivityStatus status);

enum class WitnessKind {
  kStrictGap,          // |f(z)| > f(|z|)
  kNonPositiveRadial,  // f(|z|) <= 0
  kEquality,           // |f(z)| = f(|z|) off the positive axis
};
std::string to_string(WitnessKind kind);

struct StrongPositivityWitness {
  WitnessKind kind = WitnessKind::kStrictGap;
  /// z = radius e^{i theta}; radius is exact, theta is a double.
  Rational radius;
  double theta = 0;
  /// cos(theta) as an exact rational when the witness was verified on the
  /// Chebyshev form.
  std::optional<Rational> cos_theta;
  long double z_re = 0;
  long double z_im = 0;
  long double f_abs_z = 0;      // f(|z|)
  long double abs_f_z = 0;      // |f(z)|
  long double margin = 0;       // |f(z)| - f(|z|)
  long double error_bound = 0;  // rigorous bound on the evaluation error of |f(z)|
  /// Exact sign of f(|z|)^2 - |f(z)|^2 when known (always for kStrictGap).
  std::optional<Rational> exact_gap;
  std::string note;
};

struct CertificationStats {
  std::uint64_t boxes_examined = 0;
  unsigned max_depth = 0;
  /// Least lower bound of K over all boxes certified by interval bounds.
  double min_certified_margin = 0;
  std::uint64_t boundary_boxes = 0;
  double boundary_strip_width = 0;
};

struct StrongPositivityVerdict {
  StrongPositivityStatus status = StrongPositivityStatus::kInconclusive;
  std::optional<StrongPositivityWitness> witness;
  CertificationStats stats;
  std::string boundary_strategy;
  std::string note;
};

struct RefuteOptions {
  std::uint64_t budget = 100000;
  std::uint64_t seed = 1;
};

/// Searches for a point off the positive axis with f(|z|) <= |f(z)|. Only
/// verified witnesses are returned.
std::optional<StrongPositivityWitness> refute(const SparsePolynomial& f, const RefuteOptions& options = {});

struct CertifyOptions {
  unsigned depth_budget = 24;
  std::uint64_t box_budget = 4000000;
  RefuteOptions refute;
  /// 0 means EVPOS_THREADS or hardware concurrency.
  unsigned threads = 0;
};

/// Sound semi-decision of strong positivity.
StrongPositivityVerdict certify(const SparsePolynomial& f, const CertifyOptions& options = {});

struct SmallRadiusMargin {
  double c = 0;
  /// Least value of (1 - c r^d) f(r) - |f(r e^{i theta})| over the grid.
  double residual = 0;
};

/// Largest c with |f(r e^{i theta})| <= (1 - c r^d) f(r) on a grid over
/// theta in [theta0, pi], r in (0, r_max]. Throws PreconditionError when
/// the sampled inequality fails for every c > 0.
SmallRadiusMargin small_radius_margin(const SparsePolynomial& f, const Rational& theta0, const Rational& r_max);

/// Worker count from EVPOS_THREADS (at least 1).
unsigned configured_threads();

}  // namespace evpos

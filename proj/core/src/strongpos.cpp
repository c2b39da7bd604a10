#include "evpos/strongpos.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <sstream>
#include <thread>

#include "evpos/errors.hpp"

namespace evpos {

std::string to_string(StrongPositivityStatus status) {
  switch (status) {
    case StrongPositivityStatus::kCertified:
      return "Certified";
    case StrongPositivityStatus::kRefuted:
      return "Refuted";
    case StrongPositivityStatus::kInconclusive:
      return "Inconclusive";
  }
  return "Unknown";
}

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kStrictGap:
      return "StrictGap";
    case WitnessKind::kNonPositiveRadial:
      return "NonPositiveRadial";
    case WitnessKind::kEquality:
      return "Equality";
  }
  return "Unknown";
}

unsigned configured_threads() {
  if (const char* env = std::getenv("EVPOS_THREADS")) {
    const long value = std::strtol(env, nullptr, 10);
    if (value >= 1) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

PhaseSets phase_sets(const SparsePolynomial& f, const Rational& turn_fraction) {
  Rational phi = turn_fraction;
  phi.canonicalize();
  const Integer q = phi.get_den();
  PhaseSets out;
  for (const auto& [j, c] : f.terms()) {
    if (j == 0) continue;
    if (Integer(j) % q == 0) {
      out.t_star_set.insert(j);
    } else {
      out.t_set.insert(j);
    }
  }
  if (out.t_set.empty()) {
    throw PreconditionError("every support index has phase 1 at this angle: polynomial is not primitive");
  }
  out.t0 = *out.t_set.begin();
  if (!out.t_star_set.empty()) out.t_star = *out.t_star_set.begin();
  return out;
}

namespace {

constexpr unsigned kWitnessPrecision = 256;
constexpr double kPi = std::numbers::pi;

long double to_ld(const Rational& q) { return static_cast<long double>(q.get_d()); }

// Sum of i |a_i| R^i, used to bound the effect of rounding z itself.
long double derivative_bound(const SparsePolynomial& f, long double radius) {
  long double total = 0;
  for (const auto& [e, c] : f.terms()) {
    total += static_cast<long double>(e) * std::fabs(to_ld(c)) * std::pow(radius, static_cast<long double>(e));
  }
  return total;
}

// Evaluates both sides of f(|z|) vs |f(z)| at z = radius e^{i theta},
// cos(theta) = t, in high precision.
StrongPositivityWitness measure(const SparsePolynomial& f, const Rational& radius, const BigComplex& z, double theta) {
  StrongPositivityWitness w;
  w.radius = radius;
  w.theta = theta;
  const ComplexEvaluation value = evaluate(f, z, kWitnessPrecision);
  const BigFloat modulus = value.value.modulus();
  const BigFloat radial(evaluate(f, radius), kWitnessPrecision);
  const BigFloat margin = modulus - radial;
  const long double ulp = std::ldexp(1.0L, -static_cast<int>(kWitnessPrecision) + 8);
  w.z_re = z.re.to_long_double();
  w.z_im = z.im.to_long_double();
  w.f_abs_z = radial.to_long_double();
  w.abs_f_z = modulus.to_long_double();
  w.margin = margin.to_long_double();
  w.error_bound = value.error_bound + ulp * (derivative_bound(f, to_ld(radius)) + std::fabs(w.abs_f_z) +
                                             std::fabs(w.f_abs_z) + 1.0L);
  return w;
}

StrongPositivityWitness chebyshev_witness(const SparsePolynomial& f, const Rational& radius, const Rational& t,
                                          WitnessKind kind) {
  const BigComplex z = BigComplex::from_radius_cosine(radius, t, kWitnessPrecision);
  StrongPositivityWitness w = measure(f, radius, z, std::acos(std::clamp(t.get_d(), -1.0, 1.0)));
  w.kind = kind;
  w.cos_theta = t;
  w.exact_gap = gap_expansion(f).evaluate(radius, t);
  return w;
}

StrongPositivityWitness radial_witness(const SparsePolynomial& f, const Rational& radius) {
  StrongPositivityWitness w = chebyshev_witness(f, radius, Rational(-1), WitnessKind::kNonPositiveRadial);
  w.note = "f(r) <= 0 at r = " + radius.get_str() + "; z = -r";
  return w;
}

// Polynomial with the z^shift factor removed.
SparsePolynomial strip_shift(const SparsePolynomial& f) {
  const Exponent shift = f.lowest_exponent();
  if (shift == 0) return f;
  std::vector<std::pair<std::int64_t, Rational>> terms;
  for (const auto& [e, c] : f.terms()) terms.emplace_back(static_cast<std::int64_t>(e - shift), c);
  return SparsePolynomial::from_terms(terms);
}

// Witnesses that need no search: non-primitive support, constants, and the
// signs of the end coefficients.
std::optional<StrongPositivityWitness> screen(const SparsePolynomial& f) {
  if (f.is_zero()) throw InputError("strong positivity of the zero polynomial");
  const SparsePolynomial g = strip_shift(f);
  if (g.is_constant()) {
    if (g.constant_term() < 0) return radial_witness(f, Rational(1));
    StrongPositivityWitness w = chebyshev_witness(f, Rational(1), Rational(-1), WitnessKind::kEquality);
    w.note = "monomial: |f(z)| = f(|z|) everywhere";
    return w;
  }
  const Rational a0 = g.constant_term();
  const Rational lead = g.leading_coefficient();
  if (a0 < 0) {
    Rational r(1);
    for (int i = 0; i < 4096 && evaluate(g, r) >= 0; ++i) r /= 2;
    return radial_witness(f, r);
  }
  if (lead < 0) {
    Rational r(1);
    for (int i = 0; i < 4096 && evaluate(g, r) >= 0; ++i) r *= 2;
    return radial_witness(f, r);
  }
  const PrimitiveDecomposition decomposition = primitive_decompose(g);
  if (decomposition.stride_l >= 2) {
    const Exponent l = decomposition.stride_l;
    const double theta = 2 * kPi / static_cast<double>(l);
    // Exact cosine only for the rational cases; otherwise the equality is
    // structural (z^l = |z|^l), not numerical.
    std::optional<Rational> cosine;
    if (l == 2) cosine = Rational(-1);
    if (l == 3) cosine = Rational(-1, 2);
    if (l == 4) cosine = Rational(0);
    if (l == 6) cosine = Rational(1, 2);
    StrongPositivityWitness w;
    if (cosine) {
      w = chebyshev_witness(f, Rational(1), *cosine, WitnessKind::kEquality);
    } else {
      w = measure(f, Rational(1), BigComplex::polar(Rational(1), theta, kWitnessPrecision), theta);
      w.kind = WitnessKind::kEquality;
      w.exact_gap = Rational(0);
    }
    w.theta = theta;
    if (evaluate(f, Rational(1)) <= 0) w.kind = WitnessKind::kNonPositiveRadial;
    w.note = "support lies in a progression of step " + std::to_string(l) + ": f(z) = f(|z|) at z = e^{2 pi i/" +
             std::to_string(l) + "}";
    return w;
  }
  return std::nullopt;
}

// One half of the inversion reduction: K on [0,1] x [-1,1] for either g or
// reverse(g). Witness radii on the reverse side are inverted.
struct Side {
  SparsePolynomial poly;
  bool reversed = false;
  ReducedGap gap;
  BivariateInterval interval;

  Rational radius_for_f(const Rational& r) const { return reversed ? Rational(1 / r) : r; }
};

Side make_side(const SparsePolynomial& poly, bool reversed) {
  Side side;
  side.poly = poly;
  side.reversed = reversed;
  side.gap = reduce(gap_expansion(poly));
  side.interval = side.gap.to_interval();
  return side;
}

Rational exact(double x) { return Rational(x); }

// Exact test at a double point; returns the witness when K < 0 there.
std::optional<StrongPositivityWitness> check_point(const SparsePolynomial& f, const Side& side, double r, double t) {
  if (!(r > 0) || !(r <= 1) || !(t >= -1) || !(t < 1)) return std::nullopt;
  const Rational rq = exact(r);
  const Rational tq = exact(t);
  if (side.gap.evaluate(rq, tq) >= 0) return std::nullopt;
  StrongPositivityWitness w = chebyshev_witness(f, side.radius_for_f(rq), tq, WitnessKind::kStrictGap);
  if (!w.exact_gap || *w.exact_gap >= 0) return std::nullopt;
  w.note = side.reversed ? "found on reverse(f) at radius " + rq.get_str() + ", inverted" : "";
  return w;
}

// Samples f(r) on (0,1] for g and its reverse.
std::optional<StrongPositivityWitness> radial_scan(const SparsePolynomial& f, const SparsePolynomial& g,
                                                   std::uint64_t samples) {
  const SparsePolynomial rev = reverse(g);
  for (int pass = 0; pass < 2; ++pass) {
    const SparsePolynomial& p = pass == 0 ? g : rev;
    for (std::uint64_t i = 1; i <= samples; ++i) {
      const Rational r(static_cast<long>(i), static_cast<long>(samples));
      if (evaluate(p, r) <= 0) return radial_witness(f, pass == 0 ? r : Rational(1 / r));
    }
  }
  return std::nullopt;
}

struct Candidate {
  double value;
  double r;
  double t;
  bool operator<(const Candidate& other) const { return value < other.value; }
};

std::optional<StrongPositivityWitness> descend(const SparsePolynomial& f, const Side& side, Candidate start,
                                               double step_r, double step_t, std::uint64_t& budget) {
  auto value = [&](double r, double t) {
    r = std::clamp(r, 1e-300, 1.0);
    t = std::clamp(t, -1.0, std::nextafter(1.0, 0.0));
    return side.interval.evaluate(r, t);
  };
  Candidate best = start;
  while (budget > 0 && (step_r > 1e-14 || step_t > 1e-14)) {
    bool improved = false;
    const double dr[] = {step_r, -step_r, 0, 0};
    const double dt[] = {0, 0, step_t, -step_t};
    for (int i = 0; i < 4 && budget > 0; ++i) {
      const double r = std::clamp(best.r + dr[i], 1e-300, 1.0);
      const double t = std::clamp(best.t + dt[i], -1.0, std::nextafter(1.0, 0.0));
      --budget;
      const double v = value(r, t);
      if (v < best.value) {
        best = {v, r, t};
        improved = true;
      }
    }
    if (best.value < 0) {
      if (auto w = check_point(f, side, best.r, best.t)) return w;
    }
    if (!improved) {
      step_r *= 0.5;
      step_t *= 0.5;
    }
  }
  if (best.value <= 0) return check_point(f, side, best.r, best.t);
  return std::nullopt;
}

std::optional<StrongPositivityWitness> search(const SparsePolynomial& f, const SparsePolynomial& g,
                                              const std::vector<Side>& sides, const RefuteOptions& options) {
  // Canonical probes first (the negative real axis at |z| = 1 and a few
  // rational angles), so that simple refutations report simple points.
  const double probe_r[] = {1.0, 0.5, 0.75, 0.25};
  const double probe_t[] = {-1.0, -0.5, 0.0, 0.5};
  for (const Side& side : sides) {
    for (double r : probe_r) {
      for (double t : probe_t) {
        if (auto w = check_point(f, side, r, t)) return w;
      }
    }
  }
  if (auto w = radial_scan(f, g, 64)) return w;

  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> jitter(0.0, 1.0);
  const std::uint64_t grid_budget = options.budget * 3 / 4;
  std::uint64_t descent_budget = options.budget - grid_budget;
  const auto per_side = static_cast<double>(grid_budget / sides.size());
  const auto n = std::max<std::uint64_t>(4, static_cast<std::uint64_t>(std::sqrt(per_side)));
  for (const Side& side : sides) {
    const double u = jitter(rng);
    const double v = jitter(rng);
    std::vector<Candidate> lowest;
    for (std::uint64_t i = 0; i < n; ++i) {
      const double r = (static_cast<double>(i) + 1.0 - u) / static_cast<double>(n);
      for (std::uint64_t j = 0; j < n; ++j) {
        const double theta = kPi * (static_cast<double>(j) + 1.0 - v) / static_cast<double>(n);
        const double t = std::cos(theta);
        lowest.push_back({side.interval.evaluate(r, t), r, t});
        if (lowest.size() > 64) {
          std::nth_element(lowest.begin(), lowest.begin() + 8, lowest.end());
          lowest.resize(8);
        }
      }
    }
    std::sort(lowest.begin(), lowest.end());
    if (lowest.size() > 8) lowest.resize(8);
    for (const Candidate& c : lowest) {
      if (c.value < 0) {
        if (auto w = check_point(f, side, c.r, c.t)) return w;
      }
    }
    std::uint64_t share = descent_budget / sides.size();
    for (const Candidate& c : lowest) {
      if (share == 0) break;
      if (auto w = descend(f, side, c, 1.0 / static_cast<double>(n), 2.0 / static_cast<double>(n), share)) {
        return w;
      }
    }
  }
  return std::nullopt;
}

// --- certification ---------------------------------------------------------

std::vector<Interval> to_intervals(const std::vector<Integer>& coefficients) {
  std::vector<Interval> out;
  out.reserve(coefficients.size());
  for (const auto& c : coefficients) out.push_back(Interval::enclosing(Rational(c)));
  return out;
}

std::vector<Interval> one_minus(const std::vector<Integer>& chebyshev) {
  std::vector<Integer> copy = chebyshev;
  for (auto& c : copy) c = -c;
  copy[0] += 1;
  return to_intervals(copy);
}

Interval clamp_chebyshev(Interval x) { return {std::max(x.lo, -1.0), std::min(x.hi, 1.0)}; }

// Local certificate near the zeros of K at r = 0, t = cos(2 pi p / q), for a
// divisor q >= 2 of k. On (0, r_hi] x I it proves
//   gap >= r^k (1 - T_q) A + r^{t0} B  with A >= 0, B > 0.
struct LocalCertificate {
  Exponent k = 0;
  Exponent q = 0;
  Exponent t0 = 0;
  Interval leading_v;   // 2 a_0 a_k
  Interval leading_nv;  // 2 a_0 a_{t0}
  std::vector<Interval> t_q;
  std::vector<Interval> u_q_outer;  // U_q = Q_{k/q}(T_q)
  std::vector<Interval> one_minus_t0;
  struct Term {
    Interval magnitude;
    unsigned exponent;
    std::vector<Interval> one_minus_tn;  // only for the non-vanishing terms
  };
  std::vector<Term> negative_v;
  std::vector<Term> negative_nv;

  bool holds(double r_hi, const Interval& t) const {
    const Interval tq = clamp_chebyshev(horner(t_q, t));
    const Interval u = horner(u_q_outer, tq);
    if (!(u.lo > 0)) return false;
    Interval a = leading_v * Interval(u.lo);
    for (const Term& term : negative_v) a = a - term.magnitude * power(Interval(r_hi), term.exponent);
    if (!(a.lo >= 0)) return false;
    const Interval base = horner(one_minus_t0, t);
    const double base_lo = std::max(0.0, base.lo);
    if (!(base_lo > 0)) return false;
    Interval b = leading_nv * Interval(base_lo);
    for (const Term& term : negative_nv) {
      const Interval factor = horner(term.one_minus_tn, t);
      const double factor_hi = std::min(2.0, factor.hi);
      b = b - term.magnitude * Interval(factor_hi) * power(Interval(r_hi), term.exponent);
    }
    return b.lo > 0;
  }
};

std::vector<LocalCertificate> local_certificates(const SparsePolynomial& poly, Exponent k) {
  std::vector<LocalCertificate> out;
  const Rational a0 = poly.constant_term();
  const Rational ak = poly.coefficient(k);
  if (!(a0 > 0) || !(ak > 0)) return out;
  for (Exponent q = 2; q <= k; ++q) {
    if (k % q != 0) continue;
    LocalCertificate c;
    c.k = k;
    c.q = q;
    for (const auto& [j, a] : poly.terms()) {
      if (j > 0 && j % q != 0) {
        c.t0 = j;
        break;
      }
    }
    if (c.t0 == 0 || !(poly.coefficient(c.t0) > 0)) continue;
    c.leading_v = Interval::enclosing(2 * a0 * ak);
    c.leading_nv = Interval::enclosing(2 * a0 * poly.coefficient(c.t0));
    const std::vector<Integer> tq = chebyshev_t(q);
    c.t_q = to_intervals(tq);
    c.u_q_outer = to_intervals(chebyshev_gap_quotient(k / q));
    c.one_minus_t0 = one_minus(chebyshev_t(c.t0));
    bool valid = true;
    for (const auto& [p, ap] : poly.terms()) {
      for (const auto& [s, as] : poly.terms()) {
        if (p == s) continue;
        const Rational product = ap * as;
        if (product > 0) continue;
        const Exponent n = p > s ? p - s : s - p;
        const Exponent j = p + s;
        if (n % q == 0) {
          if (j <= k) {
            valid = false;
            continue;
          }
          const Rational ratio(static_cast<long>(n / q));
          c.negative_v.push_back({Interval::enclosing(-product * ratio * ratio), static_cast<unsigned>(j - k), {}});
        } else {
          if (j <= c.t0) {
            valid = false;
            continue;
          }
          c.negative_nv.push_back(
              {Interval::enclosing(-product), static_cast<unsigned>(j - c.t0), one_minus(chebyshev_t(n))});
        }
      }
    }
    if (valid) out.push_back(std::move(c));
  }
  return out;
}

// Rigorous positivity of a univariate polynomial on [0, 1].
enum class RadialOutcome { kPositive, kNegativeAt, kUndecided };

struct RadialResult {
  RadialOutcome outcome = RadialOutcome::kUndecided;
  Rational point;
};

RadialResult radial_positive(const SparsePolynomial& p) {
  std::vector<Interval> coefficients;
  for (const Rational& c : p.dense()) coefficients.push_back(Interval::enclosing(c));
  std::vector<std::pair<double, double>> stack{{0.0, 1.0}};
  std::uint64_t steps = 0;
  while (!stack.empty()) {
    if (++steps > 2000000) return {};
    auto [lo, hi] = stack.back();
    stack.pop_back();
    if (horner(coefficients, Interval(lo, hi)).lo > 0) continue;
    const double mid = 0.5 * (lo + hi);
    const Rational mq = exact(mid);
    if (evaluate(p, mq) <= 0) return {RadialOutcome::kNegativeAt, mq};
    if (hi - lo < 1e-12) return {};
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  return {RadialOutcome::kPositive, {}};
}

struct Box {
  double r_lo, r_hi, t_lo, t_hi;
  unsigned depth;
};

enum class BoxOutcome { kCertified, kDischarged, kRefuted, kSplit, kExhausted };

struct BoxResult {
  BoxOutcome outcome = BoxOutcome::kSplit;
  double margin = 0;
};

struct SideRun {
  bool certified = false;
  std::optional<StrongPositivityWitness> witness;
  std::string note;
};

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, count / 256)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned w = 0; w < threads; ++w) {
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    pool.emplace_back([&fn, begin, end] {
      for (std::size_t i = begin; i < end; ++i) fn(i);
    });
  }
  for (auto& thread : pool) thread.join();
}

SideRun certify_side(const SparsePolynomial& f, const Side& side, const CertifyOptions& options, unsigned threads,
                     CertificationStats& stats) {
  SideRun run;
  if (side.gap.empty()) {
    run.note = "gap is identically zero";
    return run;
  }
  const BoxEnclosure enclosure(side.interval);
  const std::vector<LocalCertificate> locals = local_certificates(side.poly, side.gap.j0);
  std::vector<Box> level{{0.0, 1.0, -1.0, 1.0, 0}};
  while (!level.empty()) {
    std::vector<BoxResult> results(level.size());
    parallel_for(level.size(), threads, [&](std::size_t i) {
      const Box& box = level[i];
      const Interval enclosed = enclosure.enclose({box.r_lo, box.r_hi}, {box.t_lo, box.t_hi});
      BoxResult& result = results[i];
      if (enclosed.lo > 0) {
        result = {BoxOutcome::kCertified, enclosed.lo};
        return;
      }
      if (box.r_lo == 0) {
        for (const LocalCertificate& local : locals) {
          if (local.holds(box.r_hi, {box.t_lo, box.t_hi})) {
            result = {BoxOutcome::kDischarged, 0};
            return;
          }
        }
      }
      const double rc = 0.5 * (box.r_lo + box.r_hi);
      const double tc = 0.5 * (box.t_lo + box.t_hi);
      if (enclosed.hi < 0 || box.depth >= options.depth_budget) {
        if (tc < 1 && side.gap.evaluate(exact(rc), exact(tc)) < 0) {
          result = {BoxOutcome::kRefuted, 0};
          return;
        }
      }
      result = {box.depth >= options.depth_budget ? BoxOutcome::kExhausted : BoxOutcome::kSplit, 0};
    });
    std::vector<Box> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      const Box& box = level[i];
      ++stats.boxes_examined;
      stats.max_depth = std::max(stats.max_depth, box.depth);
      switch (results[i].outcome) {
        case BoxOutcome::kCertified:
          stats.min_certified_margin = std::min(stats.min_certified_margin, results[i].margin);
          break;
        case BoxOutcome::kDischarged:
          ++stats.boundary_boxes;
          stats.boundary_strip_width = std::max(stats.boundary_strip_width, box.r_hi);
          break;
        case BoxOutcome::kRefuted: {
          const double rc = 0.5 * (box.r_lo + box.r_hi);
          const double tc = 0.5 * (box.t_lo + box.t_hi);
          run.witness = check_point(f, side, rc, tc);
          if (run.witness) return run;
          break;
        }
        case BoxOutcome::kExhausted:
          run.note = "depth budget exhausted near r in [" + std::to_string(box.r_lo) + ", " +
                     std::to_string(box.r_hi) + "], t in [" + std::to_string(box.t_lo) + ", " +
                     std::to_string(box.t_hi) + "]";
          return run;
        case BoxOutcome::kSplit: {
          const double rm = 0.5 * (box.r_lo + box.r_hi);
          const double tm = 0.5 * (box.t_lo + box.t_hi);
          const unsigned d = box.depth + 1;
          next.push_back({box.r_lo, rm, box.t_lo, tm, d});
          next.push_back({box.r_lo, rm, tm, box.t_hi, d});
          next.push_back({rm, box.r_hi, box.t_lo, tm, d});
          next.push_back({rm, box.r_hi, tm, box.t_hi, d});
          break;
        }
      }
    }
    if (stats.boxes_examined + next.size() > options.box_budget) {
      run.note = "box budget exhausted";
      return run;
    }
    level = std::move(next);
  }
  run.certified = true;
  return run;
}

}  // namespace

std::optional<StrongPositivityWitness> refute(const SparsePolynomial& f, const RefuteOptions& options) {
  if (auto w = screen(f)) return w;
  const SparsePolynomial g = strip_shift(f);
  std::vector<Side> sides{make_side(g, false), make_side(reverse(g), true)};
  return search(f, g, sides, options);
}

StrongPositivityVerdict certify(const SparsePolynomial& f, const CertifyOptions& options) {
  StrongPositivityVerdict verdict;
  auto refuted = [&](StrongPositivityWitness w) {
    verdict.status = StrongPositivityStatus::kRefuted;
    verdict.witness = std::move(w);
    return verdict;
  };
  if (auto w = screen(f)) {
    verdict.note = "precondition screen";
    return refuted(std::move(*w));
  }
  const SparsePolynomial g = strip_shift(f);
  const SparsePolynomial rev = reverse(g);
  std::vector<Side> sides{make_side(g, false), make_side(rev, true)};
  if (auto w = search(f, g, sides, options.refute)) {
    verdict.note = "refutation search";
    return refuted(std::move(*w));
  }
  // f > 0 on (0, infinity): g on (0,1] and reverse(g) on (0,1].
  for (const Side& side : sides) {
    const RadialResult radial = radial_positive(side.poly);
    if (radial.outcome == RadialOutcome::kNegativeAt) {
      return refuted(radial_witness(f, side.radius_for_f(radial.point)));
    }
    if (radial.outcome == RadialOutcome::kUndecided) {
      verdict.note = "could not separate f(r) from 0 on the real axis";
      return verdict;
    }
  }
  const unsigned threads = options.threads > 0 ? options.threads : configured_threads();
  verdict.stats.min_certified_margin = std::numeric_limits<double>::infinity();
  std::ostringstream strategy;
  strategy << "r > 1 mapped onto reverse(f) by inversion; theta -> 0 removed by the factor (1 - cos theta); ";
  for (const Side& side : sides) {
    const std::uint64_t before = verdict.stats.boundary_boxes;
    SideRun run = certify_side(f, side, options, threads, verdict.stats);
    if (run.witness) {
      verdict.note = "branch and bound";
      return refuted(std::move(*run.witness));
    }
    if (!run.certified) {
      verdict.note = (side.reversed ? "reverse side: " : "forward side: ") + run.note;
      return verdict;
    }
    strategy << (side.reversed ? "reverse" : "forward") << " side: r^" << side.gap.j0 << " factored out, "
             << verdict.stats.boundary_boxes - before << " boxes at r = 0 discharged by phase-set certificates; ";
  }
  strategy << "widest discharged strip r <= " << verdict.stats.boundary_strip_width;
  if (std::isinf(verdict.stats.min_certified_margin)) verdict.stats.min_certified_margin = 0;
  verdict.boundary_strategy = strategy.str();
  verdict.status = StrongPositivityStatus::kCertified;
  return verdict;
}

SmallRadiusMargin small_radius_margin(const SparsePolynomial& f, const Rational& theta0, const Rational& r_max) {
  if (f.is_zero() || f.is_constant()) throw InputError("small_radius_margin needs a non-constant polynomial");
  const double th0 = theta0.get_d();
  if (!(th0 > 0) || !(th0 < kPi)) throw InputError("theta0 must lie in (0, pi)");
  if (!(r_max > 0)) throw InputError("r_max must be positive");
  const long double rmax = to_ld(r_max);
  const auto d = static_cast<long double>(f.degree());
  constexpr int kRadii = 200;
  constexpr int kAngles = 400;
  long double c = std::numeric_limits<long double>::infinity();
  for (int i = 1; i <= kRadii; ++i) {
    const long double r = rmax * i / kRadii;
    const long double radial = std::real(evaluate(f, std::complex<long double>(r, 0)));
    for (int j = 0; j <= kAngles; ++j) {
      const long double theta = th0 + (kPi - th0) * j / kAngles;
      const long double modulus = std::abs(evaluate(f, std::polar(r, theta)));
      const long double value = radial > 0 ? (1 - modulus / radial) / std::pow(r, d) : -1;
      c = std::min(c, value);
    }
  }
  if (!(c > 0)) throw PreconditionError("|f(r e^{i theta})| <= (1 - c r^d) f(r) fails on the grid for every c > 0");
  long double residual = std::numeric_limits<long double>::infinity();
  for (int i = 1; i <= kRadii; ++i) {
    const long double r = rmax * i / kRadii;
    const long double radial = std::real(evaluate(f, std::complex<long double>(r, 0)));
    for (int j = 0; j <= kAngles; ++j) {
      const long double theta = th0 + (kPi - th0) * j / kAngles;
      const long double modulus = std::abs(evaluate(f, std::polar(r, theta)));
      residual = std::min(residual, (1 - c * std::pow(r, d)) * radial - modulus);
    }
  }
  return {static_cast<double>(c), static_cast<double>(residual)};
}

}  // namespace evpos

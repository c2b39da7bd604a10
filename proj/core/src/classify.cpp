#include "evpos/classify.hpp"

#include <stdexcept>

#include "evpos/errors.hpp"

namespace evpos {

std::string to_string(ClassificationStatus status) {
  switch (status) {
    case ClassificationStatus::kEventuallyNonNegative:
      return "EventuallyNonNegative";
    case ClassificationStatus::kNotEventuallyNonNegative:
      return "NotEventuallyNonNegative";
    case ClassificationStatus::kInconclusive:
      return "Inconclusive";
  }
  return "Unknown";
}

std::string to_string(NecessityKind kind) {
  switch (kind) {
    case NecessityKind::kSignScreen:
      return "SignScreen";
    case NecessityKind::kCoveringFailure:
      return "CoveringFailure";
    case NecessityKind::kStrongPositivityFailure:
      return "StrongPositivityFailure";
  }
  return "Unknown";
}

bool de_angelis_check(const SparsePolynomial& f) {
  if (f.is_zero() || f.degree() < 2) throw InputError("De Angelis check needs degree >= 2");
  const Exponent d = f.degree();
  return f.coefficient(0) > 0 && f.coefficient(d) > 0 && f.coefficient(1) > 0 && f.coefficient(d - 1) > 0;
}

Exponent index_in_power(const PrimitiveDecomposition& decomposition, std::uint64_t m, Exponent j) {
  return static_cast<Exponent>(m) * decomposition.shift_k + decomposition.stride_l * j;
}

namespace {

Rational rational_pow(const Rational& base, std::uint64_t e) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;
}

}  // namespace

ClassificationVerdict classify(const SparsePolynomial& f, const ClassifyOptions& options) {
  if (f.is_zero()) throw InputError("classification of the zero polynomial");
  ClassificationVerdict verdict;
  if (options.empirical) {
    verdict.empirical = EmpiricalData{threshold_search(f, options.empirical_m_max), 1, options.empirical_m_max};
  }
  if (f.is_constant()) {
    // Constants are outside the theorem; handled directly.
    verdict.constant_input = true;
    verdict.decomposition.core_g = f;
    if (f.constant_term() > 0) {
      verdict.status = ClassificationStatus::kEventuallyNonNegative;
      verdict.eventually_positive = true;
      verdict.note = "positive constant";
    } else {
      verdict.status = ClassificationStatus::kNotEventuallyNonNegative;
      verdict.witness = NecessityWitness{NecessityKind::kSignScreen, Exponent{0}, false, std::nullopt,
                                         "negative constant: f^m alternates in sign"};
    }
    return verdict;
  }
  verdict.decomposition = primitive_decompose(f);
  const SparsePolynomial& g = verdict.decomposition.core_g;
  if (g.is_constant()) {
    // Monomial c z^k: its powers have a single coefficient c^m.
    if (g.constant_term() > 0) {
      verdict.status = ClassificationStatus::kEventuallyNonNegative;
      verdict.note = "positive monomial";
    } else {
      verdict.status = ClassificationStatus::kNotEventuallyNonNegative;
      verdict.witness = NecessityWitness{NecessityKind::kSignScreen, Exponent{0}, false, std::nullopt,
                                         "negative monomial: the only coefficient alternates in sign"};
    }
    return verdict;
  }
  const Exponent d = g.degree();
  if (g.constant_term() < 0) {
    verdict.status = ClassificationStatus::kNotEventuallyNonNegative;
    verdict.witness = NecessityWitness{NecessityKind::kSignScreen, Exponent{0}, false, std::nullopt,
                                       "g(0) < 0: the constant term of g^m is negative for every odd m"};
    return verdict;
  }
  if (g.leading_coefficient() < 0) {
    verdict.status = ClassificationStatus::kNotEventuallyNonNegative;
    verdict.witness = NecessityWitness{NecessityKind::kSignScreen, d, false, std::nullopt,
                                       "leading coefficient of g is negative: the top coefficient of g^m is "
                                       "negative for every odd m"};
    return verdict;
  }
  verdict.covering = covering_report(g);
  const bool covered = verdict.covering.two_sided;
  if (covered || options.always_certify) verdict.strong_positivity = certify(g, options.certify);
  if (!covered) {
    NecessityWitness w;
    w.kind = NecessityKind::kCoveringFailure;
    if (!verdict.covering.one_sided_forward) {
      w.index = *verdict.covering.uncovered.begin();
      w.description = "index " + std::to_string(*w.index) +
                      " of g has a negative coefficient and is not a sum of positive-coefficient indices";
    } else {
      w.reverse = true;
      w.index = *verdict.covering.uncovered_reverse.begin();
      w.description = "index " + std::to_string(*w.index) +
                      " of reverse(g) has a negative coefficient and is not a sum of positive-coefficient indices";
    }
    verdict.witness = std::move(w);
    verdict.status = ClassificationStatus::kNotEventuallyNonNegative;
    return verdict;
  }
  const StrongPositivityVerdict& sp = *verdict.strong_positivity;
  switch (sp.status) {
    case StrongPositivityStatus::kRefuted: {
      if (sp.witness->kind == WitnessKind::kEquality) {
        throw std::logic_error("equality witness on a primitive polynomial: internal consistency failure");
      }
      verdict.status = ClassificationStatus::kNotEventuallyNonNegative;
      verdict.witness = NecessityWitness{NecessityKind::kStrongPositivityFailure, std::nullopt, false, sp.witness,
                                         "g(|z|) <= |g(z)| at a point off the positive axis"};
      break;
    }
    case StrongPositivityStatus::kInconclusive:
      verdict.status = ClassificationStatus::kInconclusive;
      verdict.note = sp.note;
      break;
    case StrongPositivityStatus::kCertified:
      verdict.status = ClassificationStatus::kEventuallyNonNegative;
      if (verdict.decomposition.shift_k == 0 && verdict.decomposition.stride_l == 1) {
        verdict.eventually_positive = d >= 2 ? de_angelis_check(g) : true;
      }
      break;
  }
  return verdict;
}

NecessityTranscript necessity_witness(const SparsePolynomial& f, const ClassificationVerdict& verdict,
                                      std::uint64_t m_max) {
  if (verdict.status != ClassificationStatus::kNotEventuallyNonNegative || !verdict.witness) {
    throw PreconditionError("necessity transcript needs a NotEventuallyNonNegative verdict with a witness");
  }
  NecessityTranscript out;
  out.kind = verdict.witness->kind;
  const PrimitiveDecomposition& decomposition = verdict.decomposition;
  const SparsePolynomial g = verdict.constant_input ? f : decomposition.core_g;
  bool all_ok = true;
  switch (out.kind) {
    case NecessityKind::kSignScreen: {
      const Exponent j = verdict.witness->index.value_or(0);
      const Rational base = g.coefficient(j);
      const Exponent top = g.is_constant() ? 0 : g.degree();
      for (std::uint64_t m = 1; m <= m_max; ++m) {
        TranscriptEntry e;
        e.m = m;
        e.index_g = j == 0 ? 0 : static_cast<Exponent>(m) * top;
        e.index_f = verdict.constant_input ? 0 : index_in_power(decomposition, m, e.index_g);
        e.value = power_coefficient(g, m, e.index_g);
        e.predicted = rational_pow(base, m);
        e.ok = e.value == *e.predicted && ((e.value < 0) == (m % 2 == 1));
        all_ok = all_ok && e.ok;
        out.entries.push_back(std::move(e));
      }
      out.conclusion = "the coefficient alternates in sign, so it is negative for every odd m";
      break;
    }
    case NecessityKind::kCoveringFailure: {
      const Exponent k = *verdict.witness->index;
      const bool reversed = verdict.witness->reverse;
      const SparsePolynomial side = reversed ? reverse(g) : g;
      const Exponent d = g.degree();
      const Rational b0 = side.constant_term();
      const Rational bk = side.coefficient(k);
      for (std::uint64_t m = 1; m <= m_max; ++m) {
        TranscriptEntry e;
        e.m = m;
        e.index_g = reversed ? static_cast<Exponent>(m) * d - k : k;
        e.index_f = index_in_power(decomposition, m, e.index_g);
        e.value = power_coefficient(g, m, e.index_g);
        e.predicted = Rational(static_cast<long>(m)) * rational_pow(b0, m - 1) * bk;
        e.ok = e.value == *e.predicted && e.value < 0;
        all_ok = all_ok && e.ok;
        out.entries.push_back(std::move(e));
      }
      out.conclusion = std::string("[z^k] g^m = m b_0^{m-1} b_k < 0 for every m") +
                       (reversed ? " (read from the top of g^m)" : "");
      break;
    }
    case NecessityKind::kStrongPositivityFailure: {
      const StrongPositivityWitness& point = *verdict.witness->point;
      if (point.kind == WitnessKind::kStrictGap) {
        out.point_verified = point.exact_gap && *point.exact_gap < 0 && point.margin > 10 * point.error_bound;
      } else {
        out.point_verified = point.f_abs_z <= 0 && point.abs_f_z >= point.f_abs_z;
      }
      all_ok = out.point_verified;
      PowerSequence powers(g);
      const std::uint64_t odd_limit = std::min<std::uint64_t>(m_max, 21);
      for (std::uint64_t m = 1; m <= odd_limit; ++m) {
        const PowerProfile& p = powers.next();
        if (m % 2 == 0) continue;
        TranscriptEntry e;
        e.m = m;
        e.ok = p.first_negative.has_value();
        if (e.ok) {
          e.index_g = *p.first_negative;
          e.index_f = index_in_power(decomposition, m, e.index_g);
          e.value = p.coefficient(e.index_g);
        }
        all_ok = all_ok && e.ok;
        out.entries.push_back(std::move(e));
      }
      out.conclusion =
          "a non-negative odd power would give |g(z)| <= g(|z|) by the triangle inequality; every odd power has a "
          "negative coefficient";
      break;
    }
  }
  out.verified = all_ok;
  return out;
}

}  // namespace evpos

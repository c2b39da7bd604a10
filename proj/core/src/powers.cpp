#include "evpos/powers.hpp"

#include "evpos/errors.hpp"

namespace evpos {

namespace {

void scan_signs(PowerProfile& profile) {
  profile.first_negative.reset();
  profile.negative_indices.clear();
  for (std::size_t n = 0; n < profile.numerators.size(); ++n) {
    if (sgn(profile.numerators[n]) < 0) {
      if (!profile.first_negative) profile.first_negative = n;
      profile.negative_indices.insert(n);
    }
  }
}

}  // namespace

Rational PowerProfile::coefficient(std::size_t n) const {
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), denominator_base.get_mpz_t(), m);
  Rational out(numerators.at(n), den);
  out.canonicalize();
  return out;
}

PowerProfile profile(const SparsePolynomial& f, std::uint64_t m) {
  if (f.is_zero()) throw InputError("power profile of the zero polynomial");
  const IntegerForm form = integer_form(f);
  PowerProfile out;
  out.m = m;
  out.denominator_base = form.denominator;
  out.numerators = dense::power(form.numerators, m);
  scan_signs(out);
  return out;
}

PowerSequence::PowerSequence(const SparsePolynomial& f) : base_(integer_form(f)) {
  if (f.is_zero()) throw InputError("power sequence of the zero polynomial");
  current_.m = 0;
  current_.numerators = {Integer(1)};
  current_.denominator_base = base_.denominator;
}

const PowerProfile& PowerSequence::next() {
  current_.numerators = dense::convolve_schoolbook(current_.numerators, base_.numerators);
  ++current_.m;
  scan_signs(current_);
  return current_;
}

ThresholdResult threshold_search(const SparsePolynomial& f, std::uint64_t m_max) {
  if (m_max < 1) throw InputError("m_max must be at least 1");
  ThresholdResult out;
  out.m_max = m_max;
  PowerSequence powers(f);
  for (std::uint64_t m = 1; m <= m_max; ++m) {
    if (powers.next().first_negative) out.negative_powers.push_back(m);
  }
  const std::uint64_t last_bad = out.negative_powers.empty() ? 0 : out.negative_powers.back();
  if (last_bad < m_max) out.m0 = last_bad + 1;
  const bool monic = f.leading_coefficient() == 1;
  const bool positive_at_one = evaluate(f, Rational(1)) > 0;
  out.note = std::string("window heuristic over [1, ") + std::to_string(m_max) + "]; " +
             (monic && positive_at_one ? "monic with f(1) > 0: non-negativity of some power persists for all large m"
                                       : "monic/f(1) > 0 hypotheses not both met: no extrapolation beyond the window");
  return out;
}

RangeCheck range_check(const SparsePolynomial& f, std::uint64_t m, std::size_t n_lo, std::size_t n_hi) {
  if (f.is_zero()) throw InputError("range check of the zero polynomial");
  const std::size_t top = static_cast<std::size_t>(m) * f.degree();
  if (n_lo > n_hi || n_hi > top) throw InputError("range must satisfy 0 <= n_lo <= n_hi <= m*deg(f)");
  const IntegerForm form = integer_form(f);
  const std::vector<Integer> coefficients = dense::power_truncated(form.numerators, m, n_hi);
  RangeCheck out;
  for (std::size_t n = n_lo; n <= n_hi; ++n) {
    if (sgn(coefficients[n]) < 0) out.violations.push_back(n);
  }
  out.ok = out.violations.empty();
  return out;
}

Rational power_coefficient(const SparsePolynomial& f, std::uint64_t m, std::size_t n) {
  if (f.is_zero()) return m == 0 && n == 0 ? Rational(1) : Rational(0);
  if (n > static_cast<std::size_t>(m) * f.degree()) return 0;
  const IntegerForm form = integer_form(f);
  const std::vector<Integer> coefficients = dense::power_truncated(form.numerators, m, n);
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), form.denominator.get_mpz_t(), m);
  Rational out(coefficients[n], den);
  out.canonicalize();
  return out;
}

void write_profile_csv(std::ostream& out, const PowerProfile& profile, bool header) {
  if (header) out << "m,n,numerator,denominator_exponent,sign\n";
  const std::uint64_t exponent = profile.denominator_base == 1 ? 0 : profile.m;
  for (std::size_t n = 0; n < profile.numerators.size(); ++n) {
    out << profile.m << ',' << n << ',' << profile.numerators[n].get_str() << ',' << exponent << ','
        << sgn(profile.numerators[n]) << '\n';
  }
}

void write_sign_profile_csv(std::ostream& out, const SparsePolynomial& f, std::uint64_t m_lo, std::uint64_t m_hi) {
  out << "m,n,sign\n";
  PowerSequence powers(f);
  for (std::uint64_t m = 1; m <= m_hi; ++m) {
    const PowerProfile& p = powers.next();
    if (m < m_lo) continue;
    for (std::size_t n = 0; n < p.numerators.size(); ++n) {
      out << m << ',' << n << ',' << sgn(p.numerators[n]) << '\n';
    }
  }
}

}  // namespace evpos

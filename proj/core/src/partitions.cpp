#include "evpos/partitions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "evpos/covering.hpp"
#include "evpos/errors.hpp"

namespace evpos {

namespace {

// reachable[q][r]: r is a sum of parts drawn from [q, d] (q is 1-based).
std::vector<std::vector<bool>> reachability(std::size_t n, std::size_t d) {
  std::vector<std::vector<bool>> reach(d + 2, std::vector<bool>(n + 1, false));
  reach[d + 1][0] = true;
  for (std::size_t q = d; q >= 1; --q) {
    for (std::size_t r = 0; r <= n; ++r) {
      reach[q][r] = reach[q + 1][r] || (r >= q && reach[q][r - q]);
    }
  }
  return reach;
}

}  // namespace

PartitionEnumerator::PartitionEnumerator(std::size_t n, std::size_t d) : n_(n), d_(d), current_(d, 0) {
  if (d == 0) throw InputError("part bound d must be at least 1");
  reach_ = reachability(n, d);
}

bool PartitionEnumerator::fill_from(std::size_t index, std::uint64_t remaining) {
  // Lexicographically smallest completion: keep each early multiplicity as
  // small as the later (larger) parts allow.
  const auto& reach = reach_;
  for (std::size_t idx = index; idx < d_; ++idx) {
    const std::uint64_t part = idx + 1;
    std::uint64_t count = 0;
    while (!reach[part + 1][remaining - part * count]) {
      ++count;
      if (part * count > remaining) return false;
    }
    current_[idx] = count;
    remaining -= part * count;
  }
  return remaining == 0;
}

bool PartitionEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    if (!fill_from(0, n_)) done_ = true;
    return !done_;
  }
  const auto& reach = reach_;
  for (std::size_t i = d_ - 1; i-- > 0;) {
    std::uint64_t before = 0;
    for (std::size_t t = 0; t < i; ++t) before += (t + 1) * current_[t];
    // The successor may need a jump of more than one at position i when the
    // larger parts cannot absorb every remainder.
    for (std::uint64_t count = current_[i] + 1; before + (i + 1) * count <= n_; ++count) {
      const std::uint64_t prefix = before + (i + 1) * count;
      if (!reach[i + 2][n_ - prefix]) continue;
      current_[i] = count;
      fill_from(i + 1, n_ - prefix);
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<Multiplicities> enumerate_partitions(std::size_t n, std::size_t d) {
  std::vector<Multiplicities> out;
  PartitionEnumerator e(n, d);
  while (e.next()) out.push_back(e.current());
  return out;
}

const Integer& BinomialCache::get(std::uint64_t top, std::uint64_t k) {
  auto [it, inserted] = table_.try_emplace({top, k});
  if (inserted) mpz_bin_uiui(it->second.get_mpz_t(), top, k);
  return it->second;
}

Rational contribution(const Multiplicities& lambda, std::uint64_t m, const SparsePolynomial& f, BinomialCache* cache) {
  BinomialCache local;
  BinomialCache& binomials = cache ? *cache : local;
  std::uint64_t used = 0;
  for (std::uint64_t count : lambda) used += count;
  if (used > m) return 0;
  Integer product = 1;
  Rational coefficient_product = 1;
  std::uint64_t taken = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] == 0) continue;
    const Rational a = f.coefficient(i + 1);
    if (a == 0) return 0;
    product *= binomials.get(m - taken, lambda[i]);
    taken += lambda[i];
    Rational power;
    mpz_pow_ui(power.get_num_mpz_t(), a.get_num_mpz_t(), lambda[i]);
    mpz_pow_ui(power.get_den_mpz_t(), a.get_den_mpz_t(), lambda[i]);
    coefficient_product *= power;
  }
  const Rational a0 = f.constant_term();
  if (m > used) {
    if (a0 == 0) return 0;
    Rational power;
    mpz_pow_ui(power.get_num_mpz_t(), a0.get_num_mpz_t(), m - used);
    mpz_pow_ui(power.get_den_mpz_t(), a0.get_den_mpz_t(), m - used);
    coefficient_product *= power;
  }
  Rational out = coefficient_product * Rational(product);
  out.canonicalize();
  return out;
}

Rational coefficient_via_partitions(const SparsePolynomial& f, std::size_t n, std::uint64_t m, const PartitionGuard& guard) {
  if (n > guard.max_n || m > guard.max_m) {
    throw BudgetError("partition enumeration guard exceeded (n <= " + std::to_string(guard.max_n) +
                      ", m <= " + std::to_string(guard.max_m) + ")");
  }
  if (f.is_zero()) return 0;
  if (f.is_constant()) {
    if (n != 0) return 0;
    Rational out;
    const Rational a0 = f.constant_term();
    mpz_pow_ui(out.get_num_mpz_t(), a0.get_num_mpz_t(), m);
    mpz_pow_ui(out.get_den_mpz_t(), a0.get_den_mpz_t(), m);
    return out;
  }
  BinomialCache cache;
  Rational total = 0;
  PartitionEnumerator partitions(n, f.degree());
  while (partitions.next()) total += contribution(partitions.current(), m, f, &cache);
  return total;
}

PartitionTerm compress(const Multiplicities& lambda, const SparsePolynomial& f, std::size_t n, std::uint64_t m,
                       BinomialCache* cache) {
  PartitionTerm term;
  term.multiplicities = lambda;
  term.contribution = contribution(lambda, m, f, cache);
  if (term.contribution >= 0) throw PreconditionError("compress requires a partition with negative contribution");
  std::uint64_t weighted = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) weighted += (i + 1) * lambda[i];
  if (weighted != n) throw PreconditionError("multiplicities do not form a partition of n");
  std::size_t j = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] > 0 && f.coefficient(i + 1) < 0) {
      j = i + 1;
      break;
    }
  }
  if (j == 0) throw PreconditionError("negative contribution without a negative part (a_0 < 0)");
  const IndexWeight weight = weight_of_index(f, j);
  Multiplicities mapped = lambda;
  --mapped[j - 1];
  for (Exponent part : weight.decomposition) ++mapped[part - 1];
  term.replaced_index = j;
  term.replacement = weight.decomposition;
  term.mapped_contribution = contribution(mapped, m, f, cache);
  term.mapped = std::move(mapped);
  return term;
}

namespace {

Integer pow_integer(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Integer binomial(const Integer& top, const Integer& k) {
  if (k < 0 || top < 0 || k > top) return 0;
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k.get_ui());
  return out;
}

}  // namespace

Integer binomial_ratio_threshold(std::size_t d, const Rational& gamma) {
  // Large enough that (b+j)/a^gamma stays below 1/2 for every admissible b
  // and that the falling-factorial ratio is within a factor 2 of a^{-j}.
  const double g = gamma.get_d();
  const double by_gamma = std::pow(8.0 * static_cast<double>(d), 1.0 / g);
  const double by_degree = 64.0 * static_cast<double>(d * d);
  return Integer(std::ceil(std::max(by_gamma, by_degree)));
}

BinomialRatioCheck binomial_ratio_bound_check(const Integer& a, const Integer& b, long i, long j, const Rational& gamma,
                                              std::size_t d) {
  BinomialRatioCheck out;
  if (gamma <= 0 || gamma >= 1) throw InputError("gamma must lie in (0, 1)");
  const unsigned long p = gamma.get_num().get_ui();
  const unsigned long q = gamma.get_den().get_ui();
  std::vector<std::string> problems;
  const long dl = static_cast<long>(d);
  if (std::labs(i) > dl) problems.push_back("|i| > d");
  if (j < 1 || j > dl) problems.push_back("j outside [1, d]");
  if (b < 0) problems.push_back("b < 0");
  if (a < binomial_ratio_threshold(d, gamma)) problems.push_back("a below A(d, gamma)");
  // b <= (4d)^{-d} a^gamma  <=>  (b (4d)^d)^q <= a^p
  const Integer scaled_b = b * pow_integer(Integer(4 * static_cast<unsigned long>(d)), d);
  if (b > 0 && pow_integer(scaled_b, q) > pow_integer(a, p)) problems.push_back("b > (4d)^{-d} a^gamma");
  out.hypotheses_ok = problems.empty();
  for (const auto& problem : problems) {
    if (!out.hypothesis_note.empty()) out.hypothesis_note += "; ";
    out.hypothesis_note += problem;
  }
  if (j < 1) return out;
  const Integer numerator = binomial(a, b);
  const Integer denominator = binomial(a - i, b + j);
  if (denominator == 0) return out;
  // C(a,b)/C(a-i,b+j) <= a^{-j(q-p)/q}  <=>  C(a,b)^q a^{j(q-p)} <= C(a-i,b+j)^q
  const Integer lhs = pow_integer(numerator, q) * pow_integer(a, static_cast<unsigned long>(j) * (q - p));
  out.holds = lhs <= pow_integer(denominator, q);
  return out;
}

ThreeWay consecutive_decomposition(const Integer& x, const Integer& m) {
  if (m < 2) throw InputError("m must be at least 2");
  if (x < 8 * m * m) throw InputError("x must be at least 8 m^2");
  const Integer residue = x % m;
  // Near-equal thirds of the quotient, balanced against the residue e
  // (b - c = e); both representatives e = r and e = r - m are tried.
  ThreeWay best;
  bool have_best = false;
  for (const Integer& e : {Integer(residue), Integer(residue - m)}) {
    const Integer s = (x - e) / m;
    ThreeWay candidate;
    if (e >= 0) {
      // c = round((s - e) / 3), so a = s - e - 2c lies within 1 of c.
      mpz_fdiv_q_ui(candidate.c.get_mpz_t(), Integer(2 * (s - e) + 3).get_mpz_t(), 6);
    } else {
      mpz_fdiv_q_ui(candidate.c.get_mpz_t(), Integer(s - 2 * e).get_mpz_t(), 3);
    }
    candidate.b = candidate.c + e;
    candidate.a = s - 2 * candidate.c - e;
    auto smallest = [](const ThreeWay& t) { return std::min({t.a, t.b, t.c}); };
    if (!have_best || smallest(candidate) > smallest(best)) {
      best = candidate;
      have_best = true;
    }
  }
  return best;
}

}  // namespace evpos

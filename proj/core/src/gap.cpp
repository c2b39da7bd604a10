#include "evpos/gap.hpp"

#include <cmath>

namespace evpos {

std::vector<Integer> chebyshev_t(Exponent n) {
  std::vector<Integer> previous{Integer(1)};
  if (n == 0) return previous;
  std::vector<Integer> current{Integer(0), Integer(1)};
  for (Exponent k = 1; k < n; ++k) {
    // T_{k+1} = 2 t T_k - T_{k-1}
    std::vector<Integer> next(current.size() + 1, Integer(0));
    for (std::size_t i = 0; i < current.size(); ++i) next[i + 1] += 2 * current[i];
    for (std::size_t i = 0; i < previous.size(); ++i) next[i] -= previous[i];
    previous = std::move(current);
    current = std::move(next);
  }
  return current;
}

std::vector<Integer> chebyshev_gap_quotient(Exponent n) {
  if (n == 0) return {};
  std::vector<Integer> p = chebyshev_t(n);
  for (auto& c : p) c = -c;
  p[0] += 1;
  // p(1) = 0; divide by (t - 1) synthetically, then negate for (1 - t).
  std::vector<Integer> quotient(n);
  Integer carry = 0;
  for (std::size_t i = n; i >= 1; --i) {
    carry += p[i];
    quotient[i - 1] = carry;
  }
  for (auto& c : quotient) c = -c;
  return quotient;
}

GapExpansion gap_expansion(const SparsePolynomial& f) {
  GapExpansion out;
  std::map<Exponent, std::vector<Integer>> chebyshev_cache;
  for (const auto& [p, ap] : f.terms()) {
    for (const auto& [q, aq] : f.terms()) {
      if (p == q) continue;
      const Exponent j = p + q;
      const Rational product = ap * aq;
      out.coefficients[j].push_back({p, q, product});
      const Exponent n = p > q ? p - q : q - p;
      auto it = chebyshev_cache.find(n);
      if (it == chebyshev_cache.end()) it = chebyshev_cache.emplace(n, chebyshev_t(n)).first;
      auto& form = out.chebyshev_form[j];
      if (form.size() < it->second.size()) form.resize(it->second.size(), Rational(0));
      form[0] += product;
      for (std::size_t i = 0; i < it->second.size(); ++i) form[i] -= product * Rational(it->second[i]);
    }
  }
  for (auto it = out.chebyshev_form.begin(); it != out.chebyshev_form.end();) {
    auto& form = it->second;
    while (!form.empty() && form.back() == 0) form.pop_back();
    if (form.empty()) {
      it = out.chebyshev_form.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

long double GapExpansion::evaluate(long double r, long double theta) const {
  long double total = 0;
  for (const auto& [j, pairs] : coefficients) {
    long double inner = 0;
    for (const auto& pair : pairs) {
      const long double n = static_cast<long double>(pair.p) - static_cast<long double>(pair.q);
      inner += static_cast<long double>(pair.product.get_d()) * (1.0L - std::cos(n * theta));
    }
    total += std::pow(r, static_cast<long double>(j)) * inner;
  }
  return total;
}

namespace {

Rational horner_exact(const std::vector<Rational>& coefficients, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = coefficients.size(); i-- > 0;) acc = acc * x + coefficients[i];
  return acc;
}

}  // namespace

Rational GapExpansion::evaluate(const Rational& r, const Rational& t) const {
  Rational total = 0;
  Rational r_power = 1;
  Exponent current = 0;
  for (const auto& [j, form] : chebyshev_form) {
    while (current < j) {
      r_power *= r;
      ++current;
    }
    total += r_power * horner_exact(form, t);
  }
  return total;
}

ReducedGap reduce(const GapExpansion& expansion) {
  ReducedGap out;
  if (expansion.chebyshev_form.empty()) return out;
  out.j0 = expansion.chebyshev_form.begin()->first;
  const Exponent top = expansion.chebyshev_form.rbegin()->first;
  out.rows.assign(top - out.j0 + 1, {});
  for (const auto& [j, form] : expansion.chebyshev_form) {
    // form(1) = 0 for every j; divide by (1 - t).
    std::vector<Rational> quotient(form.size() - 1);
    Rational carry = 0;
    for (std::size_t i = form.size() - 1; i >= 1; --i) {
      carry += form[i];
      quotient[i - 1] = -carry;
    }
    out.rows[j - out.j0] = std::move(quotient);
  }
  return out;
}

Rational ReducedGap::evaluate(const Rational& r, const Rational& t) const {
  Rational acc = 0;
  for (std::size_t i = rows.size(); i-- > 0;) acc = acc * r + horner_exact(rows[i], t);
  return acc;
}

BivariateInterval ReducedGap::to_interval() const {
  std::vector<std::vector<Interval>> converted;
  converted.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<Interval> out;
    out.reserve(row.size());
    for (const auto& c : row) out.push_back(Interval::enclosing(c));
    converted.push_back(std::move(out));
  }
  return BivariateInterval(std::move(converted));
}

}  // namespace evpos

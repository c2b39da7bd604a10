#pragma once

#include <map>
#include <vector>

#include "evpos/interval.hpp"
#include "evpos/polynomial.hpp"

namespace evpos {

/// Dense coefficients of the Chebyshev polynomial T_n, lowest degree first.
std::vector<Integer> chebyshev_t(Exponent n);

/// Dense coefficients of (1 - T_n(t)) / (1 - t), an exact polynomial of
/// degree n - 1 (empty for n = 0).
std::vector<Integer> chebyshev_gap_quotient(Exponent n);

struct GapPair {
  Exponent p = 0;
  Exponent q = 0;
  Rational product;  // a_p a_q
};

/// f(r)^2 - |f(r e^{i theta})|^2 = sum_j r^j sum_{p+q=j} a_p a_q (1 - cos((p-q) theta)),
/// over ordered pairs with p != q.
struct GapExpansion {
  std::map<Exponent, std::vector<GapPair>> coefficients;
  /// chebyshev_form[j](t) = sum_{p+q=j} a_p a_q (1 - T_{|p-q|}(t)), dense in t.
  std::map<Exponent, std::vector<Rational>> chebyshev_form;

  /// Trigonometric form in long double.
  long double evaluate(long double r, long double theta) const;
  /// Chebyshev form, exact.
  Rational evaluate(const Rational& r, const Rational& t) const;
};

GapExpansion gap_expansion(const SparsePolynomial& f);

/// K(r, t) = gap / (r^{j0} (1 - t)) with j0 the least j carrying a nonzero
/// Chebyshev entry. rows[i] is the dense t-polynomial multiplying r^i.
struct ReducedGap {
  Exponent j0 = 0;
  std::vector<std::vector<Rational>> rows;

  bool empty() const { return rows.empty(); }
  Rational evaluate(const Rational& r, const Rational& t) const;
  BivariateInterval to_interval() const;
};

ReducedGap reduce(const GapExpansion& expansion);

}  // namespace evpos

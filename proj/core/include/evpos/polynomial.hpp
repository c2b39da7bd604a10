#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "evpos/bigfloat.hpp"

namespace evpos {

using Integer = mpz_class;
using Rational = mpq_class;
using Exponent = std::size_t;

/// Exact univariate polynomial with rational coefficients, stored sparsely
/// as exponent -> nonzero coefficient. Immutable after construction.
class SparsePolynomial {
 public:
  using Terms = std::map<Exponent, Rational>;

  SparsePolynomial() = default;

  /// Builds the canonical polynomial from (exponent, coefficient) pairs.
  /// Duplicate exponents are summed and zero coefficients dropped.
  /// Throws InputError on a negative exponent.
  static SparsePolynomial from_terms(std::span<const std::pair<std::int64_t, Rational>> terms);
  static SparsePolynomial from_terms(std::initializer_list<std::pair<std::int64_t, Rational>> terms);
  /// Coefficient i of `dense` becomes the coefficient of z^i.
  static SparsePolynomial from_dense(std::span<const Rational> dense);
  static SparsePolynomial from_dense_integers(std::span<const Integer> dense, const Integer& denominator = 1);
  static SparsePolynomial constant(const Rational& value);
  static SparsePolynomial monomial(Exponent exponent, const Rational& coefficient);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  /// Throws InputError for the zero polynomial.
  Exponent degree() const;
  /// Least exponent carrying a nonzero coefficient. Throws for zero.
  Exponent lowest_exponent() const;
  Rational coefficient(Exponent exponent) const;
  Rational leading_coefficient() const;
  Rational constant_term() const { return coefficient(0); }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  /// Dense coefficient vector of length degree+1 (empty for zero).
  std::vector<Rational> dense() const;

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) { return a.terms_ == b.terms_; }
  friend SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  SparsePolynomial operator-() const;

 private:
  friend SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b);
  explicit SparsePolynomial(Terms terms) : terms_(std::move(terms)) {}
  Terms terms_;
};

struct SupportProfile {
  std::set<Exponent> s_plus;
  std::set<Exponent> s_minus;
  std::set<Exponent> s_all;
};

/// f = z^shift_k * core_g(z^stride_l), with stride_l maximal.
struct PrimitiveDecomposition {
  Exponent shift_k = 0;
  Exponent stride_l = 1;
  SparsePolynomial core_g;
};

/// Common-denominator integer form: f = numerators(z) / denominator, with
/// numerators dense from z^0 and denominator > 0 minimal.
struct IntegerForm {
  std::vector<Integer> numerators;
  Integer denominator;
};

SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b);
/// f^m by binary exponentiation over dense integer vectors; f^0 = 1.
SparsePolynomial pow(const SparsePolynomial& f, std::uint64_t m);
/// z^d f(1/z). Throws InputError for the zero polynomial.
SparsePolynomial reverse(const SparsePolynomial& f);
/// f(lam z). Throws InputError unless lam > 0.
SparsePolynomial scale_variable(const SparsePolynomial& f, const Rational& lam);
SupportProfile support_profile(const SparsePolynomial& f);
/// Throws InputError for zero or constant input.
PrimitiveDecomposition primitive_decompose(const SparsePolynomial& f);
/// Rebuilds z^shift * g(z^stride).
SparsePolynomial recompose(const PrimitiveDecomposition& decomposition);
SparsePolynomial derivative(const SparsePolynomial& f);
IntegerForm integer_form(const SparsePolynomial& f);

Rational evaluate(const SparsePolynomial& f, const Rational& x);
std::complex<long double> evaluate(const SparsePolynomial& f, std::complex<long double> z);

struct ComplexEvaluation {
  BigComplex value;
  /// Rigorous bound on |computed - exact| for the given input point.
  long double error_bound = 0;
};

/// Horner evaluation at the requested working precision together with an
/// a-priori rounding error bound.
ComplexEvaluation evaluate(const SparsePolynomial& f, const BigComplex& z,
                           unsigned precision_bits = BigFloat::kDefaultPrecision);

// Dense integer kernels shared by the powering paths.
namespace dense {

/// Schoolbook below a size threshold, Karatsuba above.
std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b);
std::vector<Integer> convolve_schoolbook(std::span<const Integer> a, std::span<const Integer> b);
std::vector<Integer> power(std::span<const Integer> base, std::uint64_t m);
/// Coefficients 0..max_index of base^m. Uses the power-series recurrence
/// n b_0 P_n = sum_k ((m+1)k - n) b_k P_{n-k} when b_0 != 0.
std::vector<Integer> power_truncated(std::span<const Integer> base, std::uint64_t m, std::size_t max_index);

}  // namespace dense

}  // namespace evpos

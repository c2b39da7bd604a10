#include "evpos/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "evpos/errors.hpp"

namespace evpos {

namespace {

void add_term(SparsePolynomial::Terms& terms, Exponent e, Rational c) {
  c.canonicalize();
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

SparsePolynomial SparsePolynomial::from_terms(std::span<const std::pair<std::int64_t, Rational>> terms) {
  Terms out;
  for (const auto& [e, c] : terms) {
    if (e < 0) throw InputError("negative exponent " + std::to_string(e));
    add_term(out, static_cast<Exponent>(e), c);
  }
  return SparsePolynomial(std::move(out));
}

SparsePolynomial SparsePolynomial::from_terms(std::initializer_list<std::pair<std::int64_t, Rational>> terms) {
  return from_terms(std::span<const std::pair<std::int64_t, Rational>>(terms.begin(), terms.size()));
}

SparsePolynomial SparsePolynomial::from_dense(std::span<const Rational> dense) {
  Terms out;
  for (std::size_t i = 0; i < dense.size(); ++i) add_term(out, i, dense[i]);
  return SparsePolynomial(std::move(out));
}

SparsePolynomial SparsePolynomial::from_dense_integers(std::span<const Integer> dense, const Integer& denominator) {
  Terms out;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] == 0) continue;
    Rational c(dense[i], denominator);
    c.canonicalize();
    out.emplace(i, std::move(c));
  }
  return SparsePolynomial(std::move(out));
}

SparsePolynomial SparsePolynomial::constant(const Rational& value) { return monomial(0, value); }

SparsePolynomial SparsePolynomial::monomial(Exponent exponent, const Rational& coefficient) {
  Terms out;
  add_term(out, exponent, coefficient);
  return SparsePolynomial(std::move(out));
}

Exponent SparsePolynomial::degree() const {
  if (terms_.empty()) throw InputError("degree of the zero polynomial is undefined");
  return terms_.rbegin()->first;
}

Exponent SparsePolynomial::lowest_exponent() const {
  if (terms_.empty()) throw InputError("lowest exponent of the zero polynomial is undefined");
  return terms_.begin()->first;
}

Rational SparsePolynomial::coefficient(Exponent exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational SparsePolynomial::leading_coefficient() const {
  if (terms_.empty()) return 0;
  return terms_.rbegin()->second;
}

std::vector<Rational> SparsePolynomial::dense() const {
  if (terms_.empty()) return {};
  std::vector<Rational> out(degree() + 1);
  for (const auto& [e, c] : terms_) out[e] = c;
  return out;
}

SparsePolynomial operator+(const SparsePolynomial& a, const SparsePolynomial& b) {
  SparsePolynomial::Terms out = a.terms_;
  for (const auto& [e, c] : b.terms_) add_term(out, e, c);
  return SparsePolynomial(std::move(out));
}

SparsePolynomial operator-(const SparsePolynomial& a, const SparsePolynomial& b) { return a + (-b); }

SparsePolynomial SparsePolynomial::operator-() const {
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(e, -c);
  return SparsePolynomial(std::move(out));
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) { return multiply(a, b); }

SparsePolynomial multiply(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const std::size_t span_a = a.degree() - a.lowest_exponent() + 1;
  const std::size_t span_b = b.degree() - b.lowest_exponent() + 1;
  // Dense integer convolution once both operands are reasonably full.
  if (a.term_count() * b.term_count() > 1024 && 2 * a.term_count() >= span_a && 2 * b.term_count() >= span_b) {
    const IntegerForm fa = integer_form(a);
    const IntegerForm fb = integer_form(b);
    return SparsePolynomial::from_dense_integers(dense::convolve(fa.numerators, fb.numerators),
                                                 fa.denominator * fb.denominator);
  }
  SparsePolynomial::Terms out;
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) add_term(out, ea + eb, ca * cb);
  }
  return SparsePolynomial(std::move(out));
}

IntegerForm integer_form(const SparsePolynomial& f) {
  IntegerForm form;
  form.denominator = 1;
  for (const auto& [e, c] : f.terms()) {
    mpz_lcm(form.denominator.get_mpz_t(), form.denominator.get_mpz_t(), c.get_den_mpz_t());
  }
  if (f.is_zero()) return form;
  form.numerators.assign(f.degree() + 1, Integer(0));
  for (const auto& [e, c] : f.terms()) {
    form.numerators[e] = c.get_num() * (form.denominator / c.get_den());
  }
  return form;
}

SparsePolynomial pow(const SparsePolynomial& f, std::uint64_t m) {
  if (m == 0) return SparsePolynomial::constant(1);
  if (f.is_zero()) return {};
  const Exponent low = f.lowest_exponent();
  // Work on f / z^low so the dense vectors stay short.
  SparsePolynomial::Terms shifted;
  for (const auto& [e, c] : f.terms()) shifted.emplace(e - low, c);
  std::vector<std::pair<std::int64_t, Rational>> list;
  for (auto& [e, c] : shifted) list.emplace_back(static_cast<std::int64_t>(e), c);
  const IntegerForm form = integer_form(SparsePolynomial::from_terms(list));
  std::vector<Integer> powered = dense::power(form.numerators, m);
  Integer denominator;
  mpz_pow_ui(denominator.get_mpz_t(), form.denominator.get_mpz_t(), m);
  std::vector<std::pair<std::int64_t, Rational>> result;
  for (std::size_t i = 0; i < powered.size(); ++i) {
    if (powered[i] == 0) continue;
    Rational c(powered[i], denominator);
    c.canonicalize();
    result.emplace_back(static_cast<std::int64_t>(i + low * m), std::move(c));
  }
  return SparsePolynomial::from_terms(result);
}

SparsePolynomial reverse(const SparsePolynomial& f) {
  if (f.is_zero()) throw InputError("reverse of the zero polynomial");
  const Exponent d = f.degree();
  std::vector<std::pair<std::int64_t, Rational>> list;
  for (const auto& [e, c] : f.terms()) list.emplace_back(static_cast<std::int64_t>(d - e), c);
  return SparsePolynomial::from_terms(list);
}

SparsePolynomial scale_variable(const SparsePolynomial& f, const Rational& lam) {
  if (lam <= 0) throw InputError("scale factor must be positive");
  std::vector<std::pair<std::int64_t, Rational>> list;
  for (const auto& [e, c] : f.terms()) {
    Rational factor;
    mpz_pow_ui(factor.get_num_mpz_t(), lam.get_num_mpz_t(), e);
    mpz_pow_ui(factor.get_den_mpz_t(), lam.get_den_mpz_t(), e);
    factor.canonicalize();
    list.emplace_back(static_cast<std::int64_t>(e), c * factor);
  }
  return SparsePolynomial::from_terms(list);
}

SupportProfile support_profile(const SparsePolynomial& f) {
  SupportProfile profile;
  for (const auto& [e, c] : f.terms()) {
    (c > 0 ? profile.s_plus : profile.s_minus).insert(e);
    profile.s_all.insert(e);
  }
  return profile;
}

PrimitiveDecomposition primitive_decompose(const SparsePolynomial& f) {
  if (f.is_zero()) throw InputError("primitive decomposition of the zero polynomial");
  if (f.is_constant()) throw InputError("primitive decomposition of a constant polynomial");
  PrimitiveDecomposition out;
  out.shift_k = f.lowest_exponent();
  Exponent stride = 0;
  for (const auto& [e, c] : f.terms()) stride = std::gcd(stride, e - out.shift_k);
  // A monomial a z^k has no maximal stride; report it as z^k * a.
  out.stride_l = stride == 0 ? 1 : stride;
  stride = out.stride_l;
  std::vector<std::pair<std::int64_t, Rational>> list;
  for (const auto& [e, c] : f.terms()) {
    list.emplace_back(static_cast<std::int64_t>((e - out.shift_k) / stride), c);
  }
  out.core_g = SparsePolynomial::from_terms(list);
  return out;
}

SparsePolynomial recompose(const PrimitiveDecomposition& d) {
  std::vector<std::pair<std::int64_t, Rational>> list;
  for (const auto& [e, c] : d.core_g.terms()) {
    list.emplace_back(static_cast<std::int64_t>(d.shift_k + e * d.stride_l), c);
  }
  return SparsePolynomial::from_terms(list);
}

SparsePolynomial derivative(const SparsePolynomial& f) {
  std::vector<std::pair<std::int64_t, Rational>> list;
  for (const auto& [e, c] : f.terms()) {
    if (e > 0) list.emplace_back(static_cast<std::int64_t>(e - 1), c * static_cast<unsigned long>(e));
  }
  return SparsePolynomial::from_terms(list);
}

Rational evaluate(const SparsePolynomial& f, const Rational& x) {
  Rational acc = 0;
  Exponent current = f.is_zero() ? 0 : f.degree();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    for (; current > it->first; --current) acc *= x;
    acc += it->second;
  }
  for (; current > 0; --current) acc *= x;
  return acc;
}

std::complex<long double> evaluate(const SparsePolynomial& f, std::complex<long double> z) {
  std::complex<long double> acc = 0;
  Exponent current = f.is_zero() ? 0 : f.degree();
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    for (; current > it->first; --current) acc *= z;
    acc += static_cast<long double>(it->second.get_d());
  }
  for (; current > 0; --current) acc *= z;
  return acc;
}

ComplexEvaluation evaluate(const SparsePolynomial& f, const BigComplex& z, unsigned precision_bits) {
  ComplexEvaluation out{BigComplex(precision_bits), 0};
  if (f.is_zero()) return out;
  BigFloat re(precision_bits);
  BigFloat im(precision_bits);
  const BigFloat zr = z.re;
  const BigFloat zi = z.im;
  Exponent current = f.degree();
  std::size_t steps = 0;
  auto multiply_by_z = [&] {
    BigFloat next_re = re * zr - im * zi;
    BigFloat next_im = re * zi + im * zr;
    re = std::move(next_re);
    im = std::move(next_im);
    ++steps;
  };
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    for (; current > it->first; --current) multiply_by_z();
    re = re + BigFloat(it->second, precision_bits);
    ++steps;
  }
  for (; current > 0; --current) multiply_by_z();
  out.value = BigComplex(re, im);

  // Each Horner step performs at most one complex multiply (relative error
  // <= 2*sqrt(2)u after the two-term sums) plus one addition; coefficients
  // carry one rounding each. The accumulated bound is gamma_{4n+4} times the
  // absolute-value polynomial at |z|, inflated slightly for its own rounding.
  const long double u = std::ldexp(1.0L, -static_cast<int>(precision_bits));
  const long double n = static_cast<long double>(steps) * 4 + 4;
  const long double gamma = n * u / (1 - n * u);
  const long double radius = z.modulus().to_long_double();
  long double majorant = 0;
  for (const auto& [e, c] : f.terms()) {
    majorant += std::fabs(static_cast<long double>(c.get_d())) * std::pow(radius, static_cast<long double>(e));
  }
  out.error_bound = gamma * majorant * 1.01L;
  return out;
}

namespace dense {

namespace {
constexpr std::size_t kKaratsubaThreshold = 48;

void add_into(std::vector<Integer>& target, std::size_t offset, const std::vector<Integer>& source) {
  if (target.size() < offset + source.size()) target.resize(offset + source.size());
  for (std::size_t i = 0; i < source.size(); ++i) target[offset + i] += source[i];
}

std::vector<Integer> karatsuba(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() < kKaratsubaThreshold || b.size() < kKaratsubaThreshold) return convolve_schoolbook(a, b);
  const std::size_t half = std::max(a.size(), b.size()) / 2;
  auto low = [half](std::span<const Integer> x) { return x.subspan(0, std::min(half, x.size())); };
  auto high = [half](std::span<const Integer> x) {
    return x.size() > half ? x.subspan(half) : std::span<const Integer>{};
  };
  const auto a0 = low(a), a1 = high(a), b0 = low(b), b1 = high(b);
  std::vector<Integer> z0 = karatsuba(a0, b0);
  std::vector<Integer> z2 = (a1.empty() || b1.empty()) ? std::vector<Integer>{} : karatsuba(a1, b1);
  std::vector<Integer> sa(std::max(a0.size(), a1.size())), sb(std::max(b0.size(), b1.size()));
  for (std::size_t i = 0; i < a0.size(); ++i) sa[i] += a0[i];
  for (std::size_t i = 0; i < a1.size(); ++i) sa[i] += a1[i];
  for (std::size_t i = 0; i < b0.size(); ++i) sb[i] += b0[i];
  for (std::size_t i = 0; i < b1.size(); ++i) sb[i] += b1[i];
  std::vector<Integer> z1 = karatsuba(sa, sb);
  for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];
  std::vector<Integer> out(a.size() + b.size() - 1);
  add_into(out, 0, z0);
  add_into(out, half, z1);
  add_into(out, 2 * half, z2);
  out.resize(a.size() + b.size() - 1);
  return out;
}
}  // namespace

std::vector<Integer> convolve_schoolbook(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

std::vector<Integer> convolve(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.empty() || b.empty()) return {};
  return karatsuba(a, b);
}

std::vector<Integer> power(std::span<const Integer> base, std::uint64_t m) {
  std::vector<Integer> result{Integer(1)};
  if (m == 0) return result;
  std::vector<Integer> square(base.begin(), base.end());
  bool first = true;
  while (true) {
    if (m & 1U) {
      result = first ? square : convolve(result, square);
      first = false;
    }
    m >>= 1U;
    if (m == 0) break;
    square = convolve(square, square);
  }
  return result;
}

std::vector<Integer> power_truncated(std::span<const Integer> base, std::uint64_t m, std::size_t max_index) {
  std::vector<Integer> out(max_index + 1);
  if (m == 0) {
    out[0] = 1;
    return out;
  }
  std::size_t low = 0;
  while (low < base.size() && base[low] == 0) ++low;
  if (low == base.size()) return out;
  if (low > 0 && (m > max_index / low)) return out;  // z^{low m} beyond range
  const std::size_t offset = low * m;
  const std::span<const Integer> b = base.subspan(low);
  const std::size_t limit = max_index - offset;
  const std::size_t d = b.size() - 1;
  std::vector<Integer> p(limit + 1);
  mpz_pow_ui(p[0].get_mpz_t(), b[0].get_mpz_t(), m);
  const Integer mp1(static_cast<unsigned long>(m + 1));
  Integer acc, factor, divisor;
  for (std::size_t n = 1; n <= limit; ++n) {
    acc = 0;
    for (std::size_t k = 1; k <= std::min(n, d); ++k) {
      if (b[k] == 0 || p[n - k] == 0) continue;
      factor = mp1 * static_cast<unsigned long>(k) - static_cast<unsigned long>(n);
      factor *= b[k];
      mpz_addmul(acc.get_mpz_t(), factor.get_mpz_t(), p[n - k].get_mpz_t());
    }
    divisor = b[0] * static_cast<unsigned long>(n);
    mpz_divexact(p[n].get_mpz_t(), acc.get_mpz_t(), divisor.get_mpz_t());
  }
  for (std::size_t n = 0; n <= limit; ++n) out[offset + n] = std::move(p[n]);
  return out;
}

}  // namespace dense

}  // namespace evpos

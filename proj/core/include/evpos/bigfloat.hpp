#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace evpos {

/// Owning wrapper around an MPFR number with a fixed mantissa precision.
/// All arithmetic rounds to nearest; the result takes the larger precision
/// of the two operands.
class BigFloat {
 public:
  static constexpr unsigned kDefaultPrecision = 64;

  explicit BigFloat(unsigned precision_bits = kDefaultPrecision);
  BigFloat(double value, unsigned precision_bits);
  BigFloat(const mpq_class& value, unsigned precision_bits);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  unsigned precision() const;
  long double to_long_double() const;
  double to_double() const;
  std::string to_string(int digits = 20) const;
  bool is_negative() const { return mpfr_sgn(value_) < 0; }

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.value_, b.value_) != 0; }

  static BigFloat sqrt(const BigFloat& x);
  static BigFloat cos(const BigFloat& x);
  static BigFloat sin(const BigFloat& x);
  static BigFloat abs(const BigFloat& x);
  static BigFloat pi(unsigned precision_bits);

 private:
  mpfr_t value_;
};

/// Complex number with BigFloat parts.
struct BigComplex {
  BigFloat re;
  BigFloat im;

  explicit BigComplex(unsigned precision_bits = BigFloat::kDefaultPrecision)
      : re(precision_bits), im(precision_bits) {}
  BigComplex(BigFloat real, BigFloat imag) : re(std::move(real)), im(std::move(imag)) {}

  /// z = radius * e^{i theta}, computed at the given precision.
  static BigComplex polar(const mpq_class& radius, double theta, unsigned precision_bits);
  /// z = radius * (cos_angle + i sqrt(1 - cos_angle^2)), upper half plane.
  static BigComplex from_radius_cosine(const mpq_class& radius, const mpq_class& cos_angle,
                                       unsigned precision_bits);

  BigFloat modulus() const;
};

}  // namespace evpos

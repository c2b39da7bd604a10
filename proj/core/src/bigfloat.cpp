#include "evpos/bigfloat.hpp"

#include <algorithm>
#include <memory>

namespace evpos {

BigFloat::BigFloat(unsigned precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_zero(value_, 1);
}

BigFloat::BigFloat(double value, unsigned precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_d(value_, value, MPFR_RNDN);
}

BigFloat::BigFloat(const mpq_class& value, unsigned precision_bits) {
  mpfr_init2(value_, static_cast<mpfr_prec_t>(precision_bits));
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(value_); }

unsigned BigFloat::precision() const { return static_cast<unsigned>(mpfr_get_prec(value_)); }

long double BigFloat::to_long_double() const { return mpfr_get_ld(value_, MPFR_RNDN); }

double BigFloat::to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

std::string BigFloat::to_string(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rg", digits, value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> holder(raw, &mpfr_free_str);
  return std::string(raw);
}

namespace {
unsigned joint_precision(const BigFloat& a, const BigFloat& b) {
  return std::max(a.precision(), b.precision());
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_precision(a, b));
  mpfr_add(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_precision(a, b));
  mpfr_sub(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_precision(a, b));
  mpfr_mul(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat out(joint_precision(a, b));
  mpfr_div(out.value_, a.value_, b.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat out(precision());
  mpfr_neg(out.value_, value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::sqrt(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_sqrt(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::cos(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_cos(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::sin(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_sin(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::abs(const BigFloat& x) {
  BigFloat out(x.precision());
  mpfr_abs(out.value_, x.value_, MPFR_RNDN);
  return out;
}

BigFloat BigFloat::pi(unsigned precision_bits) {
  BigFloat out(precision_bits);
  mpfr_const_pi(out.value_, MPFR_RNDN);
  return out;
}

BigComplex BigComplex::polar(const mpq_class& radius, double theta, unsigned precision_bits) {
  BigFloat r(radius, precision_bits);
  BigFloat angle(theta, precision_bits);
  return BigComplex(r * BigFloat::cos(angle), r * BigFloat::sin(angle));
}

BigComplex BigComplex::from_radius_cosine(const mpq_class& radius, const mpq_class& cos_angle,
                                          unsigned precision_bits) {
  BigFloat r(radius, precision_bits);
  BigFloat c(cos_angle, precision_bits);
  BigFloat one(1.0, precision_bits);
  BigFloat s = BigFloat::sqrt(one - c * c);
  return BigComplex(r * c, r * s);
}

BigFloat BigComplex::modulus() const {
  BigFloat out(std::max(re.precision(), im.precision()));
  mpfr_hypot(out.get(), re.get(), im.get(), MPFR_RNDN);
  return out;
}

}  // namespace evpos

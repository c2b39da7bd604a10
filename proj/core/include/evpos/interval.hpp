#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace evpos {

/// Closed double interval. Every operation rounds outward by one ulp on
/// each side, which over-approximates round-to-nearest error.
struct Interval {
  double lo = 0;
  double hi = 0;

  Interval() = default;
  constexpr Interval(double point) : lo(point), hi(point) {}
  constexpr Interval(double low, double high) : lo(low), hi(high) {}

  /// Smallest double interval guaranteed to contain the rational q.
  static Interval enclosing(const mpq_class& q);

  double mid() const { return 0.5 * (lo + hi); }
  double width() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  Interval operator-() const { return {-hi, -lo}; }
};

Interval hull(const Interval& a, const Interval& b);

/// x^n for n >= 0, tight for even n on intervals straddling zero.
Interval power(const Interval& x, unsigned n);

/// Horner enclosure of sum c_i x^i.
Interval horner(std::span<const Interval> coefficients, const Interval& x);

/// Dense bivariate polynomial sum_{i,j} c[i][j] r^i t^j with interval
/// coefficients (rows indexed by the power of r).
class BivariateInterval {
 public:
  BivariateInterval() = default;
  explicit BivariateInterval(std::vector<std::vector<Interval>> rows) : rows_(std::move(rows)) {}

  /// Nested Horner enclosure over the box.
  Interval natural(const Interval& r, const Interval& t) const;
  double evaluate(double r, double t) const;

  BivariateInterval d_dr() const;
  BivariateInterval d_dt() const;
  const std::vector<std::vector<Interval>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<Interval>> rows_;
};

/// A polynomial together with its two partial derivatives. enclose() is the
/// natural enclosure intersected with the mean-value form about the box
/// center.
class BoxEnclosure {
 public:
  BoxEnclosure() = default;
  explicit BoxEnclosure(BivariateInterval p) : p_(std::move(p)), pr_(p_.d_dr()), pt_(p_.d_dt()) {}
  Interval enclose(const Interval& r, const Interval& t) const;
  const BivariateInterval& polynomial() const { return p_; }

 private:
  BivariateInterval p_, pr_, pt_;
};

}  // namespace evpos

#include "evpos/interval.hpp"

#include <algorithm>

namespace evpos {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

}  // namespace

Interval Interval::enclosing(const mpq_class& q) {
  const double d = q.get_d();
  if (mpq_class(d) == q) return {d, d};
  return {down(d), up(d)};
}

Interval operator+(const Interval& a, const Interval& b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }

Interval operator-(const Interval& a, const Interval& b) { return {down(a.lo - b.hi), up(a.hi - b.lo)}; }

Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo * b.lo;
  const double p2 = a.lo * b.hi;
  const double p3 = a.hi * b.lo;
  const double p4 = a.hi * b.hi;
  return {down(std::min({p1, p2, p3, p4})), up(std::max({p1, p2, p3, p4}))};
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Interval power(const Interval& x, unsigned n) {
  if (n == 0) return {1.0, 1.0};
  Interval magnitude = x;
  if (n % 2 == 0 && x.lo < 0 && x.hi > 0) magnitude = {0.0, std::max(-x.lo, x.hi)};
  Interval out = magnitude;
  for (unsigned i = 1; i < n; ++i) out = out * magnitude;
  if (n % 2 == 0) out.lo = std::max(out.lo, 0.0);
  return out;
}

Interval horner(std::span<const Interval> coefficients, const Interval& x) {
  if (coefficients.empty()) return {0.0, 0.0};
  Interval acc = coefficients.back();
  for (std::size_t i = coefficients.size() - 1; i-- > 0;) acc = acc * x + coefficients[i];
  return acc;
}

Interval BivariateInterval::natural(const Interval& r, const Interval& t) const {
  if (rows_.empty()) return {0.0, 0.0};
  Interval acc = horner(rows_.back(), t);
  for (std::size_t i = rows_.size() - 1; i-- > 0;) acc = acc * r + horner(rows_[i], t);
  return acc;
}

double BivariateInterval::evaluate(double r, double t) const {
  double acc = 0;
  for (std::size_t i = rows_.size(); i-- > 0;) {
    double row = 0;
    for (std::size_t j = rows_[i].size(); j-- > 0;) row = row * t + rows_[i][j].mid();
    acc = acc * r + row;
  }
  return acc;
}

BivariateInterval BivariateInterval::d_dr() const {
  std::vector<std::vector<Interval>> out;
  for (std::size_t i = 1; i < rows_.size(); ++i) {
    std::vector<Interval> row;
    for (const Interval& c : rows_[i]) row.push_back(c * Interval(static_cast<double>(i)));
    out.push_back(std::move(row));
  }
  return BivariateInterval(std::move(out));
}

BivariateInterval BivariateInterval::d_dt() const {
  std::vector<std::vector<Interval>> out;
  for (const auto& source : rows_) {
    std::vector<Interval> row;
    for (std::size_t j = 1; j < source.size(); ++j) row.push_back(source[j] * Interval(static_cast<double>(j)));
    out.push_back(std::move(row));
  }
  return BivariateInterval(std::move(out));
}

Interval BoxEnclosure::enclose(const Interval& r, const Interval& t) const {
  const Interval natural = p_.natural(r, t);
  const double rc = r.mid();
  const double tc = t.mid();
  const Interval mean_value =
      p_.natural(Interval(rc), Interval(tc)) + pr_.natural(r, t) * (r - Interval(rc)) + pt_.natural(r, t) * (t - Interval(tc));
  return {std::max(natural.lo, mean_value.lo), std::min(natural.hi, mean_value.hi)};
}

}  // namespace evpos

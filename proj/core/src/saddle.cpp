#include "evpos/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "evpos/errors.hpp"
#include "evpos/powers.hpp"

namespace evpos {

namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

// Dense long double coefficients of f and its first three derivatives.
struct Derivatives {
  std::vector<long double> c[4];

  explicit Derivatives(const SparsePolynomial& f) {
    for (const Rational& q : f.dense()) c[0].push_back(static_cast<long double>(q.get_d()));
    for (int order = 1; order < 4; ++order) {
      for (std::size_t i = 1; i < c[order - 1].size(); ++i) {
        c[order].push_back(c[order - 1][i] * static_cast<long double>(i));
      }
    }
  }

  template <typename T>
  T eval(int order, T z) const {
    T acc = 0;
    for (std::size_t i = c[order].size(); i-- > 0;) acc = acc * z + c[order][i];
    return acc;
  }
};

Exponent least_positive_index(const SparsePolynomial& f) {
  for (const auto& [e, c] : f.terms()) {
    if (e > 0) return e;
  }
  throw InputError("saddle analysis needs a non-constant polynomial");
}

void require_saddle_domain(const SparsePolynomial& f) {
  if (f.is_zero() || f.is_constant()) throw InputError("saddle analysis needs a non-constant polynomial");
  if (!(f.constant_term() > 0)) throw InputError("saddle analysis needs f(0) > 0");
}

using Rule = boost::math::quadrature::gauss_kronrod<long double, 61>;

// Bisection on the 61-point rule until the Kronrod error estimate is below
// abs_tol, split evenly between halves. Boost's own driver scales its
// tolerance by the local L1 norm, which never settles on the tiny,
// oscillating tails.
long double gk_absolute(const auto& fn, long double a, long double b, long double abs_tol, unsigned depth) {
  long double error = 0;
  const long double value = Rule::integrate(fn, a, b, 0, 0, &error);
  if (depth == 0 || error <= abs_tol) return value;
  const long double mid = 0.5L * (a + b);
  return gk_absolute(fn, a, mid, abs_tol / 2, depth - 1) + gk_absolute(fn, mid, b, abs_tol / 2, depth - 1);
}

/// abs_tol == 0 selects the relative driver with tolerance rel_tol.
long double gk(const auto& fn, long double a, long double b, long double abs_tol, long double rel_tol) {
  if (!(b > a)) return 0;
  if (abs_tol > 0) return gk_absolute(fn, a, b, abs_tol, 20);
  return Rule::integrate(fn, a, b, 20, rel_tol);
}

// Normalized integrand (f(z)/f(rho))^m e^{-i n theta}.
struct Integrand {
  const Derivatives& d;
  long double rho;
  long double log_f_rho;
  std::uint64_t n;
  std::uint64_t m;

  Complex operator()(long double theta) const {
    const Complex z = std::polar(rho, theta);
    const Complex value = d.eval(0, z);
    if (value == Complex(0)) return 0;
    const Complex exponent = static_cast<long double>(m) * (std::log(value) - log_f_rho) -
                             Complex(0, static_cast<long double>(n) * theta);
    return std::exp(exponent);
  }

  /// The m-th power amplifies rounding in log f by m, so no tolerance below
  /// about m * eps can be met.
  long double tolerance() const {
    return std::max(1e-15L, 64 * static_cast<long double>(m) * std::numeric_limits<long double>::epsilon());
  }
};

// Integrals of the real and imaginary parts over [-b,-a] U [a,b].
std::pair<long double, long double> symmetric_pair(const Integrand& g, long double a, long double b,
                                                   long double abs_tol = 0) {
  const auto re = [&](long double t) { return std::real(g(t)); };
  const auto im = [&](long double t) { return std::imag(g(t)); };
  const long double rel_tol = g.tolerance();
  const long double real = 2 * gk(re, a, b, abs_tol, rel_tol);
  const long double imag = gk(im, a, b, abs_tol, rel_tol) + gk(im, -b, -a, abs_tol, rel_tol);
  return {real, imag};
}

}  // namespace

long double saddle_radius(const SparsePolynomial& f, long double alpha) {
  require_saddle_domain(f);
  if (!(alpha > 0)) throw InputError("alpha must be positive");
  const Derivatives d(f);
  const Exponent k = least_positive_index(f);
  const long double ak = std::fabs(static_cast<long double>(f.coefficient(k).get_d()));
  const long double a0 = static_cast<long double>(f.constant_term().get_d());
  auto phi = [&](long double rho) {
    const long double value = d.eval(0, rho);
    return std::pair{value, rho * d.eval(1, rho) / value - alpha};
  };
  long double cauchy = 1;
  const long double lead = std::fabs(static_cast<long double>(f.leading_coefficient().get_d()));
  for (const auto& c : d.c[0]) cauchy = std::max(cauchy, 1 + std::fabs(c) / lead);
  long double lo = std::pow(alpha * a0 / (static_cast<long double>(k) * ak), 1.0L / static_cast<long double>(k)) * 1e-4L;
  const long double hi = 1e4L * cauchy;
  auto [f_lo, phi_lo] = phi(lo);
  if (!(f_lo > 0) || !(phi_lo < 0)) throw SaddleNotFoundError("no bracket at the start of the scan");
  long double upper = 0;
  for (long double rho = lo * 1.05L; rho <= hi; rho *= 1.05L) {
    const auto [value, p] = phi(rho);
    if (!(value > 0)) throw SaddleNotFoundError("f is not positive on (0, rho] before a saddle was bracketed");
    if (p >= 0) {
      upper = rho;
      break;
    }
    lo = rho;
  }
  if (upper == 0) throw SaddleNotFoundError("alpha exceeds the range of rho f'/f on the scanned interval");
  while ((upper - lo) > 1e-12L * upper) {
    const long double mid = 0.5L * (lo + upper);
    if (phi(mid).second < 0) {
      lo = mid;
    } else {
      upper = mid;
    }
  }
  return 0.5L * (lo + upper);
}

HDerivatives h_derivatives(const SparsePolynomial& f, long double alpha, long double rho, long double theta) {
  const Derivatives d(f);
  const Complex z = std::polar(rho, theta);
  const Complex f0 = d.eval(0, z);
  // Zero up to the rounding error of Horner's scheme at this radius.
  long double magnitude = 0;
  for (std::size_t i = d.c[0].size(); i-- > 0;) magnitude = magnitude * rho + std::fabs(d.c[0][i]);
  const long double noise = 8 * static_cast<long double>(d.c[0].size()) *
                            std::numeric_limits<long double>::epsilon() * magnitude;
  if (std::abs(f0) <= noise) throw PoleError("f vanishes at the evaluation point");
  const Complex u = z * d.eval(1, z) / f0;
  const Complex v = z * z * d.eval(2, z) / f0;
  const Complex w = z * z * z * d.eval(3, z) / f0;
  const Complex i(0, 1);
  HDerivatives out;
  out.h = std::log(f0) - alpha * Complex(std::log(rho), theta);
  out.h1 = i * (u - alpha);
  out.h2 = -(u + v - u * u);
  out.h3 = -i * (u + v - u * u + 2.0L * (v - u * u) + (w - 3.0L * u * v + 2.0L * u * u * u));
  return out;
}

IntegralSplit integral_split(const SparsePolynomial& f, std::uint64_t n, std::uint64_t m) {
  require_saddle_domain(f);
  if (n == 0 || m == 0) throw InputError("integral_split needs n >= 1 and m >= 1");
  const long double alpha = static_cast<long double>(n) / static_cast<long double>(m);
  const long double rho = saddle_radius(f, alpha);
  const Derivatives d(f);
  const Exponent k = least_positive_index(f);
  const auto kk = static_cast<long double>(k);
  const Integrand g{d, rho, std::log(d.eval(0, rho)), n, m};
  IntegralSplit out;
  out.theta0 = 1.0L / kk;
  out.eta_unclamped = std::pow(kk * kk * static_cast<long double>(m) * std::pow(rho, kk), -1.0L / 3.0L);
  out.eta = std::min(out.eta_unclamped, out.theta0);
  std::tie(out.i1, out.i1_imag) = symmetric_pair(g, 0, out.eta);
  const long double tail_tol = g.tolerance() * std::fabs(out.i1);
  std::tie(out.i2, out.i2_imag) = symmetric_pair(g, out.eta, out.theta0, tail_tol);
  std::tie(out.i3, out.i3_imag) = symmetric_pair(g, out.theta0, kPi, tail_tol);
  const long double log_scale =
      static_cast<long double>(m) * std::log(d.eval(0, rho)) - static_cast<long double>(n) * std::log(rho);
  const long double scale = std::exp(log_scale);
  for (long double* x : {&out.i1, &out.i2, &out.i3, &out.i1_imag, &out.i2_imag, &out.i3_imag}) *x *= scale;
  return out;
}

SaddleEstimate estimate_coefficient(const SparsePolynomial& f, std::uint64_t n, std::uint64_t m,
                                    const SaddleOptions& options) {
  require_saddle_domain(f);
  if (!(f.leading_coefficient() > 0)) throw InputError("saddle analysis needs a positive leading coefficient");
  SaddleEstimate out;
  out.alpha = m == 0 ? 0 : static_cast<long double>(n) / static_cast<long double>(m);
  const bool with_exact = m * f.degree() <= options.exact_limit;
  if (with_exact) out.exact = power_coefficient(f, m, n);
  if (n == 0 || m == 0) {
    // alpha = 0: the coefficient is a_0^m, no contour needed.
    const Rational value = power_coefficient(f, m, n);
    out.estimate = static_cast<long double>(BigFloat(value, 128).to_long_double());
    out.log_scale = std::log(out.estimate);
  } else {
    out.rho = saddle_radius(f, out.alpha);
    const HDerivatives h = h_derivatives(f, out.alpha, out.rho, 0);
    out.h0 = h.h;
    out.h2 = h.h2;
    const Derivatives d(f);
    out.log_scale = static_cast<long double>(m) * std::log(d.eval(0, out.rho)) -
                    static_cast<long double>(n) * std::log(out.rho);
    if (options.with_split) {
      out.split = integral_split(f, n, m);
      out.estimate = (out.split->i1 + out.split->i2 + out.split->i3) / (2 * kPi);
    } else {
      const Integrand g{d, out.rho, std::log(d.eval(0, out.rho)), n, m};
      const long double eta = std::min(1.0L, std::pow(static_cast<long double>(m), -1.0L / 3.0L));
      const long double centre = symmetric_pair(g, 0, eta).first;
      const long double tail = symmetric_pair(g, eta, kPi, g.tolerance() * std::fabs(centre)).first;
      out.estimate = std::exp(out.log_scale) * (centre + tail) / (2 * kPi);
    }
  }
  if (out.exact && *out.exact != 0) {
    const long double exact = BigFloat(*out.exact, 128).to_long_double();
    out.rel_error = std::fabs(out.estimate - exact) / std::fabs(exact);
  }
  return out;
}

bool SaddleDiagnostics::all_within(long double lo, long double hi) const {
  auto in = [&](long double x) { return x >= lo && x <= hi; };
  return in(rho_ratio) && in(h2_ratio) && in(h3_ratio);
}

SaddleDiagnostics saddle_diagnostics(const SparsePolynomial& f, long double alpha) {
  require_saddle_domain(f);
  SaddleDiagnostics out;
  out.alpha = alpha;
  out.rho = saddle_radius(f, alpha);
  out.k = least_positive_index(f);
  const auto k = static_cast<long double>(out.k);
  // Rescaling z -> lambda z with lambda^k = 1/(k a_k) turns rho^k into
  // k a_k rho^k and leaves theta-derivatives unchanged.
  const long double ak = static_cast<long double>(f.coefficient(out.k).get_d());
  const long double normalized = k * ak * std::pow(out.rho, k);
  out.rho_ratio = normalized / alpha;
  out.h2_ratio = std::abs(h_derivatives(f, alpha, out.rho, 0).h2) / (k * normalized);
  long double sup = 0;
  for (int i = 0; i < 1024; ++i) {
    const long double theta = -kPi + 2 * kPi * static_cast<long double>(i) / 1023.0L;
    sup = std::max(sup, std::abs(h_derivatives(f, alpha, out.rho, theta).h3));
  }
  out.h3_ratio = sup / (k * k * normalized);
  return out;
}

SparsePolynomial normalize_for_saddle(const SparsePolynomial& f) {
  require_saddle_domain(f);
  const Exponent k = least_positive_index(f);
  const Rational ak = f.coefficient(k);
  if (!(ak > 0)) throw InputError("normalization needs a_k > 0");
  const long double lambda =
      std::pow(static_cast<long double>(k) * static_cast<long double>(ak.get_d()), -1.0L / static_cast<long double>(k));
  Rational approx(static_cast<double>(lambda));
  return scale_variable(f, approx);
}

}  // namespace evpos

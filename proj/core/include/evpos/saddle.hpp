#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include "evpos/polynomial.hpp"

namespace evpos {

using Complex = std::complex<long double>;

/// Smallest positive root of rho f'(rho) / f(rho) = alpha, by a geometric
/// scan for a bracket followed by bisection (relative tolerance 1e-12).
/// Throws InputError unless f(0) > 0 and alpha > 0, SaddleNotFoundError
/// when no bracket exists before f stops being positive or the scan ends.
long double saddle_radius(const SparsePolynomial& f, long double alpha);

/// h(theta) = log f(z) - alpha log z at z = rho e^{i theta}, and its first
/// three derivatives in theta.
struct HDerivatives {
  Complex h;
  Complex h1;
  Complex h2;
  Complex h3;
};

/// Throws PoleError when f(z) = 0.
HDerivatives h_derivatives(const SparsePolynomial& f, long double alpha, long double rho, long double theta);

struct IntegralSplit {
  long double i1 = 0;  // |theta| < eta
  long double i2 = 0;  // eta < |theta| < theta0
  long double i3 = 0;  // |theta| > theta0
  /// Imaginary parts of the same three integrals (zero up to quadrature
  /// error by conjugate symmetry).
  long double i1_imag = 0;
  long double i2_imag = 0;
  long double i3_imag = 0;
  long double eta = 0;
  long double theta0 = 0;
  /// eta as defined before clamping to theta0.
  long double eta_unclamped = 0;
};

struct SaddleEstimate {
  long double alpha = 0;
  long double rho = 0;
  std::complex<long double> h0;
  std::complex<long double> h2;
  long double estimate = 0;
  /// log(f(rho)^m / rho^n): the scale factor of every integral.
  long double log_scale = 0;
  std::optional<Rational> exact;
  std::optional<long double> rel_error;
  std::optional<IntegralSplit> split;
};

struct SaddleOptions {
  /// Exact coefficient is attached when m * deg f does not exceed this.
  std::uint64_t exact_limit = 3000;
  bool with_split = true;
};

/// [z^n] f^m from the Cauchy integral on |z| = rho. Requires f(0) > 0 and a
/// positive leading coefficient.
SaddleEstimate estimate_coefficient(const SparsePolynomial& f, std::uint64_t n, std::uint64_t m,
                                    const SaddleOptions& options = {});

/// The three integrals over |theta| < eta, eta < |theta| < theta0 and
/// |theta| > theta0 with theta0 = 1/k and eta = (k^2 m rho^k)^{-1/3}.
IntegralSplit integral_split(const SparsePolynomial& f, std::uint64_t n, std::uint64_t m);

/// The ratios rho^k / alpha, |h''(0)| / (k rho^k) and sup |h'''| / (k^2 rho^k)
/// as they read after rescaling f so that a_k = 1/k (computed without
/// rescaling). The supremum is a 1024-point grid maximum over [-pi, pi].
struct SaddleDiagnostics {
  long double alpha = 0;
  long double rho = 0;
  Exponent k = 0;
  long double rho_ratio = 0;
  long double h2_ratio = 0;
  long double h3_ratio = 0;
  bool all_within(long double lo = 0.75L, long double hi = 1.25L) const;
};

SaddleDiagnostics saddle_diagnostics(const SparsePolynomial& f, long double alpha);

/// f(lambda z) with lambda a rational approximation of (k a_k)^{-1/k}, so
/// that the rescaled a_k is 1/k up to that approximation.
SparsePolynomial normalize_for_saddle(const SparsePolynomial& f);

}  // namespace evpos

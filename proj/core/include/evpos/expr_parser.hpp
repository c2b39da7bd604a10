#pragma once

#include <string>
#include <string_view>

#include "evpos/polynomial.hpp"

namespace evpos {

/// Input grammar (whitespace between tokens is ignored):
///
///   expression  := sign? term (('+' | '-') term)*
///   term        := coefficient? ('*'? 'z' ('^' integer)?)?     (non-empty)
///   coefficient := integer | decimal | integer '/' integer
///
/// Decimals are read as exact rationals (0.01 == 1/100). Exponents above
/// kMaxExponent are rejected. Errors are reported as ParseError with the
/// byte offset of the offending token.
inline constexpr Exponent kMaxExponent = 1'000'000;

SparsePolynomial parse_polynomial(std::string_view text);

/// Canonical ascending-exponent rendering, e.g. "1 - 1/100z^5"; "0" for the
/// zero polynomial. parse_polynomial(format_polynomial(f)) == f.
std::string format_polynomial(const SparsePolynomial& f);

std::string format_rational(const Rational& value);

struct PolyExpression {
  std::string source_text;
  SparsePolynomial parsed;

  static PolyExpression from_text(std::string text) {
    SparsePolynomial poly = parse_polynomial(text);
    return {std::move(text), std::move(poly)};
  }
};

}  // namespace evpos

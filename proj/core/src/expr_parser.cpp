#include "evpos/expr_parser.hpp"

#include <cctype>
#include <vector>

#include "evpos/errors.hpp"

namespace evpos {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SparsePolynomial run() {
    std::vector<std::pair<std::int64_t, Rational>> terms;
    skip_space();
    if (at_end()) fail("empty expression", "a term");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      skip_space();
    }
    terms.push_back(term(sign));
    while (true) {
      skip_space();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("unexpected character", "'+' or '-'");
      ++pos_;
      skip_space();
      terms.push_back(term(c == '-' ? -1 : 1));
    }
    return SparsePolynomial::from_terms(terms);
  }

 private:
  std::pair<std::int64_t, Rational> term(int sign) {
    const std::size_t start = pos_;
    Rational coefficient = 1;
    bool has_coefficient = false;
    if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
      coefficient = number();
      has_coefficient = true;
      skip_space();
    }
    std::int64_t exponent = 0;
    bool has_variable = false;
    if (!at_end() && peek() == '*') {
      if (!has_coefficient) fail("'*' without a coefficient", "a coefficient or 'z'");
      ++pos_;
      skip_space();
      if (at_end() || peek() != 'z') fail("expected variable after '*'", "'z'");
    }
    if (!at_end() && peek() == 'z') {
      ++pos_;
      has_variable = true;
      exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        exponent = integer_exponent();
      }
    }
    if (!has_coefficient && !has_variable) {
      pos_ = start;
      fail("missing term", "a coefficient or 'z'");
    }
    if (sign < 0) coefficient = -coefficient;
    return {exponent, coefficient};
  }

  Rational number() {
    const std::size_t start = pos_;
    std::string digits = take_digits();
    if (!at_end() && peek() == '.') {
      ++pos_;
      std::string fraction = take_digits();
      if (digits.empty() && fraction.empty()) fail("malformed decimal", "digits");
      Integer numerator(digits.empty() ? std::string("0") : digits, 10);
      Integer denominator = 1;
      for (std::size_t i = 0; i < fraction.size(); ++i) denominator *= 10;
      if (!fraction.empty()) numerator = numerator * denominator + Integer(fraction, 10);
      Rational value(numerator, denominator);
      value.canonicalize();
      return value;
    }
    if (digits.empty()) {
      pos_ = start;
      fail("expected number", "digits");
    }
    Integer numerator(digits, 10);
    const std::size_t before_slash = pos_;
    skip_space();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_space();
      std::string den = take_digits();
      if (den.empty()) fail("missing denominator", "digits");
      Integer denominator(den, 10);
      if (denominator == 0) {
        pos_ -= den.size();
        fail("zero denominator", "a nonzero integer");
      }
      Rational value(numerator, denominator);
      value.canonicalize();
      return value;
    }
    pos_ = before_slash;
    return Rational(numerator);
  }

  std::int64_t integer_exponent() {
    const std::size_t start = pos_;
    std::string digits = take_digits();
    if (digits.empty()) fail("missing exponent", "a non-negative integer");
    // Compare by length first so huge literals cannot overflow.
    std::size_t first_nonzero = digits.find_first_not_of('0');
    const std::string significant = first_nonzero == std::string::npos ? "0" : digits.substr(first_nonzero);
    if (significant.size() > 7 || std::stoll(significant) > static_cast<long long>(kMaxExponent)) {
      pos_ = start;
      fail("exponent exceeds " + std::to_string(kMaxExponent), "an exponent <= " + std::to_string(kMaxExponent));
    }
    return std::stoll(significant);
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message, const std::string& expected) const {
    throw ParseError(message, pos_, expected);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SparsePolynomial parse_polynomial(std::string_view text) { return Parser(text).run(); }

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string format_polynomial(const SparsePolynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    const bool negative = c < 0;
    Rational magnitude = negative ? Rational(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += format_rational(magnitude);
      continue;
    }
    if (magnitude != 1) out += format_rational(magnitude);
    out += "z";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace evpos

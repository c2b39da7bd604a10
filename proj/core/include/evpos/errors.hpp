#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evpos {

// Malformed or out-of-domain input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was invoked on a value that violates its documented
// precondition (e.g. compressing a partition with non-negative contribution).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A configurable work guard was exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotCoverableError : public std::runtime_error {
 public:
  NotCoverableError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position, std::string expected)
      : InputError(what + " at position " + std::to_string(position) +
                   " (expected " + expected + ")"),
        position_(position),
        expected_(std::move(expected)) {}
  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class SaddleNotFoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PoleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace evpos

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace realcurves {

/// Malformed input text. position is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed input that violates a mathematical hypothesis (singular
/// conic, constant or non-square-free Q, ...).
class HypothesisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An invariant tuple that no smooth real curve can have.
class InconsistentInvariants : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A cross-module consistency check failed. Should be unreachable.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace realcurves

#pragma once

#include <stdexcept>
#include <string>

namespace mrep {

// Bad input: syntax, shape, degree or independence problems.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public ValidationError {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : ValidationError(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// A standing hypothesis of the theory fails on this input, or a computed
// quantity disagrees with the value the theory predicts.
class HypothesisViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A stabilization loop ran past its cap.
class StabilizationError : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

// An exhaustively checked statement fails at some grid point.
class TheoremViolation : public HypothesisViolation {
 public:
  using HypothesisViolation::HypothesisViolation;
};

}  // namespace mrep

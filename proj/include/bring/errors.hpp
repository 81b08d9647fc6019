#pragma once

/// @file errors.hpp
/// @brief Structured failures raised by the transformation pipeline.

#include <stdexcept>
#include <string>
#include <utility>

namespace bring {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An auxiliary formula divides by an expression that vanishes for this
/// input. `denominator` names the expression (e.g. "3n - m^2").
class DegenerateDenominator : public Error {
 public:
  DegenerateDenominator(std::string denominator, const std::string& detail = {})
      : Error("degenerate auxiliary equation: " + denominator + " vanishes" +
              (detail.empty() ? "" : " (" + detail + ")")),
        denominator_(std::move(denominator)) {}
  const std::string& denominator() const { return denominator_; }

 private:
  std::string denominator_;
};

/// Every scaling z = lambda*w in the fixed rescue sequence hit a degeneracy.
class RescueExhausted : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed (a step that does not annihilate what it
/// claims to, a back-solve with no candidates, ...).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace bring

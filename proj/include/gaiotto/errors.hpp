#pragma once

#include <stdexcept>
#include <string>

namespace gaiotto {

// All library failures derive from Error so callers (and the CLI) can map
// them onto exit codes without knowing every subtype.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ModeMismatch : public Error {
 public:
  ModeMismatch() : Error("scalar mode mismatch: exact-point and symbolic values cannot be combined") {}
};

class PoleAtPoint : public Error {
 public:
  explicit PoleAtPoint(const std::string& where) : Error("pole at evaluation point: " + where) {}
};

class RetryBudgetExhausted : public Error {
 public:
  explicit RetryBudgetExhausted(int tries)
      : Error("could not find a pole-free sample point after " + std::to_string(tries) + " attempts") {}
};

class DegreeCapExceeded : public Error {
 public:
  DegreeCapExceeded(int degree, int cap)
      : Error("degree " + std::to_string(degree) + " exceeds degree cap " + std::to_string(cap)) {}
};

class DegenerateParameter : public Error {
 public:
  using Error::Error;
};

class ResonantParameter : public Error {
 public:
  using Error::Error;
};

class NotOneBoxCover : public Error {
 public:
  using Error::Error;
};

class NonSymmetricInput : public Error {
 public:
  using Error::Error;
};

class VanishingDenominator : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gaiotto

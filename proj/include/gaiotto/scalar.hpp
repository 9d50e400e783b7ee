#pragma once

#include <string>
#include <variant>

#include "gaiotto/ratfunc.hpp"
#include "gaiotto/rational.hpp"

namespace gaiotto {

enum class ScalarMode { ExactPoint, SymbolicBeta };

/// Runtime-tagged scalar for code paths (CLI, serialization) that only learn
/// the parameter mode at run time. Library algorithms are templates over
/// Rational / RatFunc directly; Scalar never mixes the two.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(RatFunc f) : v_(std::move(f)) {}   // NOLINT(google-explicit-constructor)

  /// Integer constant in the given mode.
  static Scalar constant(long n, ScalarMode mode);

  ScalarMode mode() const {
    return std::holds_alternative<Rational>(v_) ? ScalarMode::ExactPoint : ScalarMode::SymbolicBeta;
  }
  const Rational& rational() const { return std::get<Rational>(v_); }
  const RatFunc& ratfunc() const { return std::get<RatFunc>(v_); }
  bool is_zero() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  bool operator==(const Scalar& o) const;

  std::string str() const;

 private:
  std::variant<Rational, RatFunc> v_;
};

}  // namespace gaiotto

#pragma once

#include <string>

#include "gaiotto/polynomial.hpp"
#include "gaiotto/rational.hpp"

namespace gaiotto {

/// Element of Q(β): reduced fraction with monic denominator. The variable is
/// the formal parameter β (or a Jack parameter b, depending on context).
class RatFunc {
 public:
  RatFunc() = default;
  template <std::integral I>
  RatFunc(I n) : num_(Rational(n)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Polynomial& p) : num_(p), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Polynomial& num, const Polynomial& den);

  /// The indeterminate β.
  static RatFunc variable();

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Constant value; throws if not constant.
  Rational constant_value() const;

  /// Exact evaluation; throws PoleAtPoint when the denominator vanishes.
  Rational eval_at(const Rational& x) const;

  /// f(1/β).
  RatFunc at_reciprocal() const;

  RatFunc inverse() const;

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  RatFunc operator-() const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string str(const std::string& var = "beta") const;

 private:
  static RatFunc make_reduced(Polynomial num, Polynomial den);
  Polynomial num_;
  Polynomial den_{Rational(1)};
};

}  // namespace gaiotto

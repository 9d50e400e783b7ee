#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gaiotto/rational.hpp"

namespace gaiotto {

/// Dense univariate polynomial over Q; coefficients low degree first, no
/// trailing zeros (the zero polynomial has no coefficients).
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial x();
  static Polynomial monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int k) const;
  Rational leading() const;

  Polynomial monic() const;
  Rational eval(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;
  /// Quotient when the division is known to be exact.
  Polynomial exact_div(const Polynomial& divisor) const;

  /// p(1/x)·x^deg, i.e. the coefficient-reversed polynomial.
  Polynomial reversed(int as_degree) const;

  std::string str(const std::string& var = "beta") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd over Q (gcd(0, 0) = 0).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace gaiotto

#include "gaiotto/ratfunc.hpp"

#include "gaiotto/errors.hpp"

namespace gaiotto {

RatFunc::RatFunc(const Polynomial& num, const Polynomial& den) { *this = make_reduced(num, den); }

RatFunc RatFunc::make_reduced(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero();
  RatFunc r;
  if (num.is_zero()) return r;
  if (!den.is_constant()) {
    const Polynomial g = gcd(num, den);
    if (!g.is_constant()) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  const Rational lead = den.leading();
  if (!lead.is_one()) {
    const Rational inv = lead.inverse();
    num *= inv;
    den *= inv;
  }
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RatFunc RatFunc::variable() { return RatFunc(Polynomial::x()); }

Rational RatFunc::constant_value() const {
  if (!is_constant()) throw Error("rational function is not constant: " + str());
  return num_.coeff(0) / den_.coeff(0);
}

Rational RatFunc::eval_at(const Rational& x) const {
  const Rational d = den_.eval(x);
  if (d.is_zero()) throw PoleAtPoint(str() + " at " + x.str());
  return num_.eval(x) / d;
}

RatFunc RatFunc::at_reciprocal() const {
  // f(1/x) = x^{dd-dn} · rev(num)/rev(den)
  const int dn = num_.degree();
  const int dd = den_.degree();
  if (dn < 0) return {};
  Polynomial n = num_.reversed(dn);
  Polynomial d = den_.reversed(dd);
  if (dd > dn)
    n = n * Polynomial::monomial(1, dd - dn);
  else if (dn > dd)
    d = d * Polynomial::monomial(1, dn - dd);
  return RatFunc(n, d);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  RatFunc r;
  const Rational inv = num_.leading().inverse();
  r.num_ = den_ * inv;
  r.den_ = num_ * inv;
  return r;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    return *this = make_reduced(num_ + o.num_, den_);
  }
  const Polynomial g = gcd(den_, o.den_);
  if (g.is_constant()) {
    Polynomial n = num_ * o.den_ + den_ * o.num_;
    if (n.is_zero()) return *this = RatFunc();
    num_ = std::move(n);
    den_ = den_ * o.den_;
    return *this;
  }
  const Polynomial b1 = den_.exact_div(g);
  const Polynomial d1 = o.den_.exact_div(g);
  Polynomial t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return *this = RatFunc();
  const Polynomial g2 = gcd(t, g);
  if (!g2.is_constant()) {
    num_ = t.exact_div(g2);
    den_ = b1 * o.den_.exact_div(g2);
  } else {
    num_ = std::move(t);
    den_ = b1 * o.den_;
  }
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) { return *this += -o; }

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Polynomial a = num_, b = den_, c = o.num_, d = o.den_;
  const Polynomial g1 = gcd(a, d);
  if (!g1.is_constant()) {
    a = a.exact_div(g1);
    d = d.exact_div(g1);
  }
  const Polynomial g2 = gcd(c, b);
  if (!g2.is_constant()) {
    c = c.exact_div(g2);
    b = b.exact_div(g2);
  }
  num_ = a * c;
  den_ = b * d;
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) { return *this *= o.inverse(); }

RatFunc RatFunc::operator-() const {
  RatFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

std::string RatFunc::str(const std::string& var) const {
  if (den_.is_constant()) {
    return num_.str(var);
  }
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

}  // namespace gaiotto

#include "gaiotto/rational.hpp"

#include "gaiotto/errors.hpp"

namespace gaiotto {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class q) : v_(std::move(q)) {
  if (v_.get_den() == 0) throw DivisionByZero();
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw ParseError("empty rational");
  const auto slash = s.find('/');
  const std::string ns = s.substr(0, slash);
  const std::string ds = slash == std::string::npos ? "1" : s.substr(slash + 1);
  mpz_class n, d;
  auto valid = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  if (!valid(ns) || !valid(ds)) throw ParseError("not a rational: '" + s + "'");
  n.set_str(ns[0] == '+' ? ns.substr(1) : ns, 10);
  d.set_str(ds[0] == '+' ? ds.substr(1) : ds, 10);
  return Rational(n, d);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const { return v_.get_str(); }

std::size_t Rational::bit_size() const {
  return mpz_sizeinbase(v_.get_num_mpz_t(), 2) + mpz_sizeinbase(v_.get_den_mpz_t(), 2);
}

Rational pow(const Rational& x, int e) {
  if (e < 0) return pow(x.inverse(), -e);
  Rational r(1);
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace gaiotto

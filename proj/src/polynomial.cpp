#include "gaiotto/polynomial.hpp"

#include <sstream>

#include "gaiotto/errors.hpp"

namespace gaiotto {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::x() { return Polynomial(std::vector<Rational>{0, 1}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : Rational();
}

Rational Polynomial::leading() const { return c_.empty() ? Rational() : c_.back(); }

Polynomial Polynomial::monic() const {
  if (c_.empty()) return {};
  Polynomial r(*this);
  const Rational inv = leading().inverse();
  if (!inv.is_one())
    for (auto& c : r.c_) c *= inv;
  return r;
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i].raw() * b.c_[j].raw();
  }
  std::vector<Rational> r;
  r.reserve(out.size());
  for (auto& q : out) r.emplace_back(std::move(q));
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw DivisionByZero();
  if (degree() < divisor.degree()) return {Polynomial(), *this};
  std::vector<Rational> rem = c_;
  std::vector<Rational> quo(static_cast<std::size_t>(degree() - divisor.degree() + 1));
  const Rational inv_lead = divisor.leading().inverse();
  const int dd = divisor.degree();
  for (int k = degree(); k >= dd; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] * inv_lead;
    if (q.is_zero()) continue;
    quo[static_cast<std::size_t>(k - dd)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<std::size_t>(k - dd + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw Error("exact_div: nonzero remainder");
  return q;
}

Polynomial Polynomial::reversed(int as_degree) const {
  std::vector<Rational> v(static_cast<std::size_t>(as_degree) + 1);
  for (int k = 0; k <= degree(); ++k)
    v[static_cast<std::size_t>(as_degree - k)] = c_[static_cast<std::size_t>(k)];
  return Polynomial(std::move(v));
}

std::string Polynomial::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || !mag.is_one()) {
      os << mag.str();
      if (k > 0) os << '*';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

namespace {

using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  if (g > 1)
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  if (!p.empty() && p.back() < 0)
    for (auto& c : p) c = -c;
}

ZPoly to_zpoly(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    const mpz_class d = c.den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  ZPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpz_class v = c.num() * (l / c.den());
    out.push_back(std::move(v));
  }
  make_primitive(out);
  return out;
}

// Pseudo-remainder of a by b with content removal along the way; only the
// primitive part of the result matters for gcd purposes.
ZPoly prem_primitive(ZPoly a, const ZPoly& b) {
  const std::size_t db = b.size() - 1;
  const mpz_class& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const std::size_t shift = a.size() - 1 - db;
    const mpz_class la = a.back();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
    const mpz_class fa = lb / g;
    const mpz_class fb = la / g;
    for (auto& c : a) c *= fa;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= fb * b[j];
    ztrim(a);
    make_primitive(a);
  }
  return a;
}

Polynomial from_zpoly(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(mpq_class(v));
  return Polynomial(std::move(c)).monic();
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(Rational(1));
  // Linear fast path: denominators are mostly products of linear factors.
  if (a.degree() == 1 || b.degree() == 1) {
    const Polynomial& lin = a.degree() == 1 ? a : b;
    const Polynomial& other = a.degree() == 1 ? b : a;
    const Rational root = -lin.coeff(0) / lin.coeff(1);
    return other.eval(root).is_zero() ? lin.monic() : Polynomial(Rational(1));
  }
  ZPoly x = to_zpoly(a);
  ZPoly y = to_zpoly(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    ZPoly r = prem_primitive(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
    if (y.size() == 1) return Polynomial(Rational(1));
  }
  return from_zpoly(x);
}

}  // namespace gaiotto

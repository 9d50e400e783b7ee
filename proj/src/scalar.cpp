#include "gaiotto/scalar.hpp"

#include "gaiotto/errors.hpp"

namespace gaiotto {

namespace {

template <class Op>
Scalar combine(const Scalar& a, const Scalar& b, Op op) {
  if (a.mode() != b.mode()) throw ModeMismatch();
  if (a.mode() == ScalarMode::ExactPoint) return Scalar(op(a.rational(), b.rational()));
  return Scalar(op(a.ratfunc(), b.ratfunc()));
}

}  // namespace

Scalar Scalar::constant(long n, ScalarMode mode) {
  return mode == ScalarMode::ExactPoint ? Scalar(Rational(n)) : Scalar(RatFunc(n));
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

Scalar Scalar::operator+(const Scalar& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return x + y; });
}
Scalar Scalar::operator-(const Scalar& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return x - y; });
}
Scalar Scalar::operator*(const Scalar& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return x * y; });
}
Scalar Scalar::operator/(const Scalar& o) const {
  return combine(*this, o, [](const auto& x, const auto& y) { return x / y; });
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

bool Scalar::operator==(const Scalar& o) const {
  if (mode() != o.mode()) throw ModeMismatch();
  return v_ == o.v_;
}

std::string Scalar::str() const {
  return std::visit([](const auto& x) { return x.str(); }, v_);
}

}  // namespace gaiotto

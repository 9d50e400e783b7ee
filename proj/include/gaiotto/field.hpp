#pragma once

#include <string>

#include "gaiotto/ratfunc.hpp"
#include "gaiotto/rational.hpp"

namespace gaiotto {

template <class F>
F pow_of(const F& x, int e) {
  if (e < 0) return pow_of(F(1) / x, -e);
  F r(1), base = x;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

template <class F>
F from_int(long n) {
  return F(Rational(n));
}

inline std::string field_tag(const Rational&) { return "q"; }
inline std::string field_tag(const RatFunc&) { return "qb"; }

inline std::string field_str(const Rational& x) { return x.str(); }
inline std::string field_str(const RatFunc& x) { return x.str(); }

}  // namespace gaiotto

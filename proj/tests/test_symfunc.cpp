#include <doctest.h>

#include "gaiotto/errors.hpp"
#include "gaiotto/field.hpp"
#include "gaiotto/ratfunc.hpp"
#include "gaiotto/symfunc.hpp"

using namespace gaiotto;

namespace {

using Q = Rational;
const RatFunc B = RatFunc::variable();

Rational factorial(int n) {
  Rational f(1);
  for (int k = 2; k <= n; ++k) f *= Rational(k);
  return f;
}

}  // namespace

TEST_CASE("p to m examples") {
  const auto m1 = p_to_m(SymFunc<Q>::power_sum({1}, 4));
  CHECK(m1 == SymFunc<Q>::monomial({1}, 4));

  SymFunc<Q> expect(Basis<Q>::monomial(), 4);
  expect.set({2}, Q(1));
  expect.set({1, 1}, Q(2));
  CHECK(p_to_m(SymFunc<Q>::power_sum({1, 1}, 4)) == expect);

  SymFunc<Q> m11(Basis<Q>::power_sum(), 4);
  m11.set({1, 1}, Q(1, 2));
  m11.set({2}, Q(-1, 2));
  CHECK(m_to_p(SymFunc<Q>::monomial({1, 1}, 4)) == m11);
}

TEST_CASE("power sums agree with the stored transition rows") {
  for (int d = 1; d <= 8; ++d) {
    const auto& t = transition_table(d, Direction::PowerToMonomial);
    for (std::size_t i = 0; i < t.partitions.size(); ++i) {
      const auto direct = power_sum_in_monomials(t.partitions[i]);
      for (std::size_t j = 0; j < t.partitions.size(); ++j) {
        auto it = direct.find(t.partitions[j]);
        CHECK(t.matrix(i, j) == (it == direct.end() ? Q(0) : it->second));
      }
    }
  }
}

TEST_CASE("round trip and inverse tables") {
  for (int d = 0; d <= 10; ++d) {
    const auto& pm = transition_table(d, Direction::PowerToMonomial);
    const auto& mp = transition_table(d, Direction::MonomialToPower);
    CHECK(pm.matrix * mp.matrix == Matrix<Q>::identity(pm.partitions.size()));
  }
  SymFunc<Q> f(Basis<Q>::power_sum(), 10);
  int k = 1;
  for (int d = 0; d <= 10; ++d)
    for (const auto& p : canonical_partitions(d)) f.set(p, Q(k++, 7));
  CHECK(m_to_p(p_to_m(f)) == f);
  SymFunc<Q> g = f;
  CHECK(p_to_m(m_to_p(p_to_m(g))) == p_to_m(f));
}

TEST_CASE("multiplication by power sums") {
  CHECK(multiply_by_power_sum(SymFunc<Q>::one(4), 1) == SymFunc<Q>::power_sum({1}, 4));
  CHECK(multiply_by_power_sum(SymFunc<Q>::power_sum({1}, 4), 2) == SymFunc<Q>::power_sum({2, 1}, 4));

  SymFunc<Q> f(Basis<Q>::power_sum(), 4);
  f.set({2}, Q(1));
  f.set({1, 1}, Q(3));
  SymFunc<Q> expect(Basis<Q>::power_sum(), 4);
  expect.set({2, 1}, Q(1));
  expect.set({1, 1, 1}, Q(3));
  CHECK(multiply_by_power_sum(f, 1) == expect);

  CHECK_THROWS_AS(multiply_by_power_sum(SymFunc<Q>::power_sum({2, 1}, 4), 2), DegreeCapExceeded);

  for (int d = 1; d <= 8; ++d) {
    SymFunc<Q> x = SymFunc<Q>::one(8);
    for (int i = 0; i < d; ++i) x = multiply_by_power_sum(x, 1);
    CHECK(x == SymFunc<Q>::power_sum(Partition(std::vector<int>(static_cast<std::size_t>(d), 1)), 8));
    CHECK(p_to_m(x).coeff(Partition(std::vector<int>(static_cast<std::size_t>(d), 1))) == factorial(d));
  }
}

TEST_CASE("inner product") {
  const auto p21 = SymFunc<RatFunc>::power_sum({2, 1}, 4);
  CHECK(inner_product(p21, p21, B) == RatFunc(2) * B * B);
  CHECK(inner_product(SymFunc<RatFunc>::power_sum({2}, 4), SymFunc<RatFunc>::power_sum({1, 1}, 4), B)
            .is_zero());
  const auto p1 = SymFunc<RatFunc>::power_sum({1}, 4);
  CHECK(inner_product(p1, p1, RatFunc(-2) / B) == RatFunc(-2) / B);

  // monomial inputs are converted before pairing
  const auto m2 = SymFunc<Q>::monomial({2}, 4);
  CHECK(inner_product(m2, m2, Q(1)) == inner_product(m_to_p(m2), m_to_p(m2), Q(1)));

  // symmetric, bilinear, and diagonal on power sums
  const Q b(3, 5);
  for (int d = 1; d <= 5; ++d) {
    const auto& ps = canonical_partitions(d);
    for (const auto& l : ps)
      for (const auto& m : ps) {
        const auto pl = SymFunc<Q>::power_sum(l, 5), pm = SymFunc<Q>::power_sum(m, 5);
        const Q v = inner_product(pl, pm, b);
        CHECK(v == inner_product(pm, pl, b));
        if (l == m)
          CHECK(v == Q(z_of(l)) * pow_of(b, l.length()));
        else
          CHECK(v.is_zero());
      }
  }
  auto f = SymFunc<Q>::power_sum({2, 1}, 4) * Q(3) + SymFunc<Q>::power_sum({3}, 4);
  auto g = SymFunc<Q>::power_sum({2, 1}, 4) + SymFunc<Q>::power_sum({1, 1, 1}, 4) * Q(-2);
  auto h = SymFunc<Q>::power_sum({3}, 4) * Q(5);
  CHECK(inner_product(f + h, g, b) == inner_product(f, g, b) + inner_product(h, g, b));
}

TEST_CASE("monomial gram matrix is symmetric") {
  const auto g = monomial_gram_matrix(5, B);
  CHECK(g == g.transpose());
}

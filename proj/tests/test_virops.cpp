#include <doctest.h>

#include <random>
#include <stdexcept>

#include "gaiotto/errors.hpp"
#include "gaiotto/field.hpp"
#include "gaiotto/identity_test.hpp"
#include "gaiotto/jack.hpp"
#include "gaiotto/ratfunc.hpp"
#include "gaiotto/virops.hpp"

using namespace gaiotto;

namespace {

using Q = Rational;
const RatFunc B = RatFunc::variable();
const RatFunc ONE(1);

// Fock space of one boson, vectors as maps from mode partitions λ to the
// coefficient of a_{−λ}|α⟩. Here β = 2t² with t rational, so the vertex
// normalization s = √(β/2) = t and every quantity stays in Q.
using Fock = std::map<Partition, Q>;

struct Boson {
  Q t, alpha, rho;

  Fock mode(int k, const Fock& v) const {
    Fock out;
    for (const auto& [lambda, c] : v) {
      if (k < 0) {
        out[with_part(lambda, -k)] += c;
      } else if (k == 0) {
        out[lambda] += c * alpha;
      } else if (lambda.multiplicity(k) > 0) {
        out[without_part(lambda, k)] += c * Q(k) * Q(lambda.multiplicity(k));
      }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }

  // ½Σ_m :a_m a_{n−m}: − (n+1)ρ a_n, straight from the defining formula
  Fock virasoro(int n, const Fock& v, int degree) const {
    Fock out;
    const int range = degree + std::abs(n) + 1;
    for (int m = -range; m <= range; ++m) {
      int left = m, right = n - m;
      if (left > right) std::swap(left, right);  // annihilator to the right
      for (const auto& [k, c] : mode(left, mode(right, v))) out[k] += c * Q(1, 2);
    }
    for (const auto& [k, c] : mode(n, v)) out[k] -= c * Q(n + 1) * rho;
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
  }
};

Boson boson_at(const Q& t, const Q& u) {
  // u = √(2β)α = 2tα and ρ√(2β) = β − 1
  const Q beta = Q(2) * t * t;
  return {t, u / (Q(2) * t), (beta - Q(1)) / (Q(2) * t)};
}

}  // namespace

TEST_CASE("virasoro modes match a direct Fock-space computation") {
  const int cap = 6;
  for (const auto& [t, u] : std::vector<std::pair<Q, Q>>{{Q(1), Q(3, 7)}, {Q(3, 2), Q(-5, 4)}, {Q(2, 5), Q(11)}}) {
    const Q beta = Q(2) * t * t;
    const Boson fock = boson_at(t, u);
    for (int n = -3; n <= 3; ++n) {
      const auto& op = virasoro_mode(n, beta, u, cap);
      for (int d = 0; d <= cap; ++d) {
        if (d - n < 0 || d - n > cap) continue;
        for (const auto& lambda : canonical_partitions(d)) {
          // ι⁻¹(p_λ) = t^{−ℓ(λ)} a_{−λ}|α⟩
          const Fock image = fock.virasoro(n, Fock{{lambda, pow_of(t, -lambda.length())}}, d);
          SymFunc<Q> expect(Basis<Q>::power_sum(), cap);
          for (const auto& [mu, c] : image) expect.add(mu, c * pow_of(t, mu.length()));
          CHECK(op.apply(SymFunc<Q>::power_sum(lambda, cap)) == expect);
        }
      }
    }
  }
}

TEST_CASE("hand-computed mode actions") {
  const int cap = 4;
  const auto one = SymFunc<RatFunc>::one(cap);
  const RatFunc u(Q(3, 5));
  const RatFunc h = highest_weight(B, u);
  CHECK(h == u * (u - RatFunc(2) * B + RatFunc(2)) / (RatFunc(4) * B));
  CHECK(virasoro_mode(0, B, u, cap).apply(one) == one * h);
  CHECK(virasoro_mode(-1, B, u, cap).apply(one) == SymFunc<RatFunc>::power_sum({1}, cap) * (u / RatFunc(2)));
  CHECK(virasoro_mode(2, B, u, cap).apply(one).is_zero());
  CHECK(virasoro_mode(2, B, u, cap).apply(SymFunc<RatFunc>::power_sum({1}, cap)).is_zero());

  const RatFunc c = central_charge(B);
  const auto& l2 = virasoro_mode(2, B, u, cap);
  const auto& lm2 = virasoro_mode(-2, B, u, cap);
  const auto bracket = l2.apply(lm2.apply(one)) - lm2.apply(l2.apply(one));
  CHECK(bracket == one * (RatFunc(4) * h + c / RatFunc(2)));

  CHECK_THROWS_AS(virasoro_mode(5, B, u, cap), DegreeCapExceeded);
}

TEST_CASE("central charge") {
  CHECK(central_charge(Q(1)) == Q(1));
  CHECK(central_charge(Q(3, 2)) == Q(0));
  CHECK(central_charge(Q(2, 7)) == central_charge(Q(7, 2)));
}

TEST_CASE("transport keeps entries rational or refuses") {
  CHECK_THROWS_AS(transport(ModeWord<Q>{Q(1), 0, {-1}}, Q(2)), std::logic_error);
  const auto t = transport(ModeWord<Q>{Q(1), 0, {-1, 2}}, Q(6));
  CHECK(t.creators == std::vector<int>{1});
  CHECK(t.annihilators == std::vector<int>{2});
  CHECK(t.coeff == Q(2));
  const auto w = transport(ModeWord<Q>{Q(1), 0, {-1, -1}}, Q(6));
  CHECK(w.coeff == Q(3));
}

TEST_CASE("virasoro bracket on the truncation") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 3; ++i) {
    const Q beta = random_rational(rng, false), u = random_rational(rng);
    for (int m = -3; m <= 3; ++m)
      for (int n = -3; n <= 3; ++n) CHECK(virasoro_bracket_holds(m, n, beta, u, 7));
  }
  for (int m = -2; m <= 2; ++m)
    for (int n = -2; n <= 2; ++n) CHECK(virasoro_bracket_holds(m, n, B, ONE / RatFunc(3), 5));
}

TEST_CASE("split operator eigenvalues") {
  const int cap = 6;
  const auto e = e_operator(B, cap);
  CHECK(e.apply(SymFunc<RatFunc>::power_sum({1}, cap)) ==
        SymFunc<RatFunc>::power_sum({1}, cap) * (ONE - B));
  CHECK(e.apply(SymFunc<RatFunc>::one(cap)).is_zero());
  CHECK(eps_eigenvalue({2, 1}, B) == RatFunc(5) - RatFunc(5) * B);
  CHECK(eps_eigenvalue(Partition{}, B).is_zero());
  for (int d = 0; d <= cap; ++d)
    for (const auto& lambda : canonical_partitions(d)) {
      const auto p = to_power_sum(jack(lambda, ONE / B, cap));
      CHECK(e.apply(p) == p * eps_eigenvalue(lambda, B));
    }
}

TEST_CASE("cubic and split constructions agree") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 4; ++i) {
    const Q beta = random_rational(rng, false), u = random_rational(rng);
    CHECK(e_operator(beta, 6) == e_operator_split(beta, u, 6));
  }
  CHECK(e_operator(B, 4) == e_operator_split(B, RatFunc(Q(-2, 9)), 4));
}

TEST_CASE("cubic hamiltonian") {
  const int cap = 5;
  for (int n_vars : {1, 2, 3, 5}) {
    const auto h = cubic_hamiltonian(B, n_vars, cap);
    CHECK(h == e_operator(B, cap) + GradedOperator<RatFunc>::degree_operator(cap) * (RatFunc(n_vars) * B));
    const auto p1 = SymFunc<RatFunc>::power_sum({1}, cap);
    CHECK(h.apply(p1) == p1 * (ONE + B * RatFunc(n_vars - 1)));
  }
  const auto p11 = to_power_sum(jack({1, 1}, ONE / B, 3));
  CHECK(cubic_hamiltonian(B, 2, 3).apply(p11) == p11 * eps_eigenvalue_finite({1, 1}, B, 2));
  CHECK(eps_eigenvalue_finite({1, 1}, B, 2) == RatFunc(2));
}

TEST_CASE("finite-N operator") {
  const Q t(2, 3);
  for (int n = 1; n <= 4; ++n) {
    const auto m1 = restrict_to_variables(SymFunc<Q>::monomial({1}, 2), n);
    NVarPoly<Q> expect;
    for (const auto& [e, c] : m1) expect[e] = c * (Q(1) + t * Q(n - 1));
    CHECK(cs_apply(m1, n, t) == expect);
  }
  CHECK(cs_apply(restrict_to_variables(SymFunc<Q>::one(2), 3), 3, t).empty());

  const auto p2 = jack({2}, Q(1) / t, 2);
  const auto r = restrict_to_variables(p2, 3);
  NVarPoly<Q> expect;
  for (const auto& [e, c] : r) expect[e] = c * eps_eigenvalue_finite({2}, t, 3);
  CHECK(cs_apply(r, 3, t) == expect);

  NVarPoly<Q> lopsided{{{2, 0}, Q(1)}};
  CHECK_THROWS_AS(cs_apply(lopsided, 2, t), NonSymmetricInput);
}

TEST_CASE("restriction commutes with the hamiltonian") {
  const int cap = 4;
  for (const Q beta : {Q(1, 3), Q(5, 2)}) {
    for (int d = 0; d <= cap; ++d)
      for (int n_vars : {std::max(d, 1), d + 1, 5}) {
        const auto h = cubic_hamiltonian(beta, n_vars, cap);
        for (const auto& lambda : canonical_partitions(d)) {
          const auto p = SymFunc<Q>::power_sum(lambda, cap);
          CHECK(restrict_to_variables(h.apply(p), n_vars) ==
                cs_apply(restrict_to_variables(p, n_vars), n_vars, beta));
        }
      }
  }
  // finite-N eigenvalues on Jack polynomials
  const RatFunc t = B;
  for (int d = 0; d <= 4; ++d)
    for (const auto& lambda : canonical_partitions(d))
      for (int n_vars : {std::max(d, 1), d + 1}) {
        const auto r = restrict_to_variables(jack(lambda, ONE / t, d), n_vars);
        NVarPoly<RatFunc> expect;
        for (const auto& [e, c] : r) expect[e] = c * eps_eigenvalue_finite(lambda, t, n_vars);
        std::erase_if(expect, [](const auto& kv) { return kv.second.is_zero(); });
        CHECK(cs_apply(r, n_vars, t) == expect);
      }
}

#include "gaiotto/whittaker.hpp"

#include "gaiotto/errors.hpp"
#include "gaiotto/field.hpp"
#include "gaiotto/jack.hpp"
#include "gaiotto/ratfunc.hpp"
#include "gaiotto/virops.hpp"

namespace gaiotto {

namespace {

template <class F>
F closed_product(const Partition& lambda, const F& beta, const F& u, bool skip_corner) {
  F result(1);
  const Partition conj = conjugate(lambda);
  for (const auto& [i, j] : boxes(lambda)) {
    const F hook = F(lambda.row(i) - j + 1) + beta * F(conj.row(j) - i);
    if (hook.is_zero())
      throw DegenerateParameter("hook factor vanishes at box (" + std::to_string(i) + "," +
                                std::to_string(j) + ") of " + lambda.str());
    result /= hook;
    if (skip_corner && i == 1 && j == 1) continue;
    const F den = F(j + 1) + u - F(i + 1) * beta;
    if (den.is_zero())
      throw DegenerateParameter("weight factor vanishes at box (" + std::to_string(i) + "," +
                                std::to_string(j) + ") of " + lambda.str());
    result *= beta / den;
  }
  return result;
}

template <class F>
F resonance_factor(const Partition& lambda, const F& beta, const F& u) {
  const F f = eps_eigenvalue(lambda, beta) + F(lambda.size()) * (F(1) + u - beta);
  if (f.is_zero())
    throw ResonantParameter("recursion denominator vanishes at " + lambda.str() + " (beta = " +
                            field_str(beta) + ", u = " + field_str(u) + ")");
  return f;
}

template <class F>
WhittakerExpansion<F> recursive(int cap, const F& beta, const F& u, const F& theta, WhittakerKind kind) {
  if (cap < 0) throw std::invalid_argument("negative degree cap");
  WhittakerExpansion<F> e;
  e.kind = kind;
  e.beta = beta;
  e.u = u;
  e.theta = theta;
  e.cap = cap;
  e.coefficients.emplace(Partition{}, F(1));
  const F jack_b = F(1) / beta;
  for (int n = 1; n <= cap; ++n)
    for (const auto& lambda : canonical_partitions(n)) {
      F rhs;
      for (const auto& mu : shrink_by(lambda, 1)) {
        const F& c = e.coefficients.at(mu);
        if (!c.is_zero()) rhs += pieri_p1_closed(lambda, mu, beta) * c;
      }
      if (!theta.is_zero() && n >= 2)
        for (const auto& nu : shrink_by(lambda, 2)) {
          const F& d = e.coefficients.at(nu);
          if (d.is_zero()) continue;
          const auto pieri = pieri_p2(nu, jack_b);
          if (auto it = pieri.find(lambda); it != pieri.end()) rhs += theta * it->second * d;
        }
      e.coefficients.emplace(lambda, beta * rhs / resonance_factor(lambda, beta, u));
    }
  return e;
}

}  // namespace

template <class F>
F gaiotto_coeff_closed(const Partition& lambda, const F& beta, const F& u) {
  return closed_product(lambda, beta, u, false);
}

template <class F>
F gaiotto_coeff_closed_without_corner(const Partition& lambda, const F& beta, const F& u) {
  return closed_product(lambda, beta, u, true);
}

template <class F>
WhittakerExpansion<F> gaiotto_coeffs_recursive(int cap, const F& beta, const F& u) {
  return recursive(cap, beta, u, F(), WhittakerKind::Gaiotto);
}

template <class F>
WhittakerExpansion<F> whittaker_coeffs_recursive(int cap, const F& beta, const F& u, const F& theta) {
  return recursive(cap, beta, u, theta, WhittakerKind::NonDegenerate);
}

template <class F>
WhittakerExpansion<F> gaiotto_coeffs_closed(int cap, const F& beta, const F& u) {
  WhittakerExpansion<F> e;
  e.beta = beta;
  e.u = u;
  e.cap = cap;
  for (int n = 0; n <= cap; ++n)
    for (const auto& lambda : canonical_partitions(n))
      e.coefficients.emplace(lambda, gaiotto_coeff_closed(lambda, beta, u));
  return e;
}

template <class F>
std::vector<SymFunc<F>> assemble_state(const WhittakerExpansion<F>& e, StateBasis basis) {
  const F jack_b = F(1) / e.beta;
  std::vector<SymFunc<F>> out;
  for (int n = 0; n <= e.cap; ++n) {
    SymFunc<F> g(Basis<F>::jack(jack_b), e.cap);
    for (const auto& lambda : canonical_partitions(n)) g.set(lambda, e.at(lambda));
    out.push_back(basis == StateBasis::PowerSum ? to_power_sum(g) : g);
  }
  return out;
}

template <class F>
PropertyReport whittaker_property_check(const WhittakerExpansion<F>& e, int cap) {
  if (cap > e.cap) throw DegreeCapExceeded(cap, e.cap);
  const auto g = assemble_state(e, StateBasis::PowerSum);
  PropertyReport report;
  const std::string name = e.kind == WhittakerKind::Gaiotto ? "G" : "W";
  auto check = [&](const std::string& relation, const SymFunc<F>& lhs, const SymFunc<F>& rhs) {
    ++report.checked;
    if (!(lhs == rhs)) report.failures.push_back({relation});
  };
  const SymFunc<F> zero(Basis<F>::power_sum(), e.cap);
  for (int n = 1; n <= cap; ++n) {
    const auto& l1 = virasoro_mode(1, e.beta, e.u, e.cap);
    check("L_1 " + name + "_" + std::to_string(n) + " = " + name + "_" + std::to_string(n - 1),
          l1.apply(g[static_cast<std::size_t>(n)]), g[static_cast<std::size_t>(n - 1)]);
  }
  for (int n = 2; n <= cap; ++n) {
    const auto& l2 = virasoro_mode(2, e.beta, e.u, e.cap);
    const std::string rhs_name =
        e.theta.is_zero() ? "0" : "theta " + name + "_" + std::to_string(n - 2);
    check("L_2 " + name + "_" + std::to_string(n) + " = " + rhs_name,
          l2.apply(g[static_cast<std::size_t>(n)]), g[static_cast<std::size_t>(n - 2)] * e.theta);
  }
  for (int k = 3; k <= cap; ++k)
    for (int n = k; n <= cap; ++n) {
      const auto& lk = virasoro_mode(k, e.beta, e.u, e.cap);
      check("L_" + std::to_string(k) + " " + name + "_" + std::to_string(n) + " = 0",
            lk.apply(g[static_cast<std::size_t>(n)]), zero);
    }
  return report;
}

#define GAIOTTO_INSTANTIATE_WHITTAKER(F)                                                      \
  template F gaiotto_coeff_closed(const Partition&, const F&, const F&);                      \
  template F gaiotto_coeff_closed_without_corner(const Partition&, const F&, const F&);       \
  template WhittakerExpansion<F> gaiotto_coeffs_recursive(int, const F&, const F&);           \
  template WhittakerExpansion<F> whittaker_coeffs_recursive(int, const F&, const F&, const F&); \
  template WhittakerExpansion<F> gaiotto_coeffs_closed(int, const F&, const F&);              \
  template std::vector<SymFunc<F>> assemble_state(const WhittakerExpansion<F>&, StateBasis);  \
  template PropertyReport whittaker_property_check(const WhittakerExpansion<F>&, int);

GAIOTTO_INSTANTIATE_WHITTAKER(Rational)
GAIOTTO_INSTANTIATE_WHITTAKER(RatFunc)

}  // namespace gaiotto

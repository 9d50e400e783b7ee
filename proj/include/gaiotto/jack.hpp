#pragma once

#include <map>
#include <memory>
#include <vector>

#include "gaiotto/matrix.hpp"
#include "gaiotto/partition.hpp"
#include "gaiotto/symfunc.hpp"

namespace gaiotto {

/// Total orders on partitions of n refining dominance; Gram-Schmidt may run
/// along either and must give the same result.
enum class LinearExtension {
  Lexicographic,       // increasing lexicographic order
  ConjugateReverseLex  // by decreasing lexicographic order of the conjugate
};

/// Monic Jack functions P_λ^{(b)} for all λ ⊢ degree, rows in canonical
/// (reverse-lexicographic) order.
template <class F>
struct JackTable {
  int degree = 0;
  F b{};
  std::vector<Partition> partitions;
  Matrix<F> monomial;   // row λ: coefficients of P_λ on m_μ
  Matrix<F> power_sum;  // row λ: coefficients of P_λ on p_ρ
  std::vector<F> norms; // ⟨P_λ, P_λ⟩_b

  std::size_t index(const Partition& lambda) const { return canonical_index(lambda); }
};

/// Gram-Schmidt over the monomial basis along `order`. Throws
/// DegenerateParameter when a pivot norm vanishes.
template <class F>
JackTable<F> build_jack_table(int degree, const F& b,
                              LinearExtension order = LinearExtension::Lexicographic);

/// Memoized build_jack_table, also persisted through the disk cache.
template <class F>
std::shared_ptr<const JackTable<F>> jack_table(int degree, const F& b);

/// P_λ^{(b)} in the monomial basis.
template <class F>
SymFunc<F> jack(const Partition& lambda, const F& b, int cap);

/// ψ'_{λ/μ}(β): coefficient of P_λ in p_1·P_μ at Jack parameter 1/β, from the
/// product formula. Throws NotOneBoxCover unless λ = μ plus one box.
template <class F>
F pieri_p1_closed(const Partition& lambda, const Partition& mu, const F& beta);

/// Coefficients of p_k·P_μ^{(b)} in the Jack basis, from inner products
/// ⟨p_k P_μ, P_λ⟩_b / ⟨P_λ, P_λ⟩_b. Zero coefficients are omitted.
template <class F>
std::map<Partition, F> pieri_power_sum(const Partition& mu, int k, const F& b);

template <class F>
std::map<Partition, F> pieri_p1_oracle(const Partition& mu, const F& b) {
  return pieri_power_sum(mu, 1, b);
}

/// ψ'^{(2)}: p_2·P_ν^{(b)} in the Jack basis. Memoized per (ν, b).
template <class F>
std::map<Partition, F> pieri_p2(const Partition& nu, const F& b);

/// ⟨P_ν, P_ν⟩_b = Π_{s∈ν} (b(a(s)+1) + ℓ(s)) / (b·a(s) + ℓ(s) + 1).
template <class F>
F jack_norm_closed(const Partition& nu, const F& b);

/// Π (a + bℓ + 1)/(a + bℓ + b), the other orientation of the product. It gives
/// 1/b at ν = (1), so it is not the Gram norm; tests use it to pin that down.
template <class F>
F jack_norm_swapped_orientation(const Partition& nu, const F& b);

/// γ^ν_λ with P_λ^{(from)} = Σ_ν γ^ν_λ P_ν^{(to)}; zero entries omitted.
template <class F>
std::map<Partition, F> jack_reexpand(const Partition& lambda, const F& from, const F& to);

}  // namespace gaiotto

#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaiotto/partition.hpp"
#include "gaiotto/symfunc.hpp"

namespace gaiotto {

enum class WhittakerKind { Gaiotto, NonDegenerate };

/// Coefficients of a Whittaker-type vector on the Jack basis P_λ^{(1/β)}, all
/// |λ| ≤ cap. θ is the L_2 eigenvalue and is zero for the Gaiotto kind.
template <class F>
struct WhittakerExpansion {
  WhittakerKind kind = WhittakerKind::Gaiotto;
  F beta{};
  F u{};
  F theta{};
  int cap = 0;
  std::map<Partition, F> coefficients;

  const F& at(const Partition& lambda) const { return coefficients.at(lambda); }
};

/// Π_{(i,j)∈λ} 1/(λ_i − j + 1 + β(λ'_j − i)) · Π_{(i,j)∈λ} β/((j+1) + u − (i+1)β),
/// both products over every box. Throws DegenerateParameter on a zero factor.
template <class F>
F gaiotto_coeff_closed(const Partition& lambda, const F& beta, const F& u);

/// The same product with the box (1,1) left out of the second factor. It does
/// not satisfy the recursion; kept for the test that shows this.
template <class F>
F gaiotto_coeff_closed_without_corner(const Partition& lambda, const F& beta, const F& u);

/// (ε_λ + |λ|(1 + u − β)) c_λ = β Σ_{μ<₁λ} ψ'_{λ/μ}(β) c_μ, c_∅ = 1.
/// Throws ResonantParameter naming λ when the left factor vanishes.
template <class F>
WhittakerExpansion<F> gaiotto_coeffs_recursive(int cap, const F& beta, const F& u);

/// Adds βθ Σ_{ν<₂λ} ψ'^{(2)}_{λ/ν} d_ν to the right side, with ψ'^{(2)} from
/// the p_2 Pieri rule at Jack parameter 1/β.
template <class F>
WhittakerExpansion<F> whittaker_coeffs_recursive(int cap, const F& beta, const F& u, const F& theta);

/// Gaiotto expansion from the closed form.
template <class F>
WhittakerExpansion<F> gaiotto_coeffs_closed(int cap, const F& beta, const F& u);

enum class StateBasis { Jack, PowerSum };

/// Degree-n components Σ_{λ⊢n} coeff(λ)·P_λ^{(1/β)}, n = 0..cap.
template <class F>
std::vector<SymFunc<F>> assemble_state(const WhittakerExpansion<F>& e, StateBasis basis);

struct PropertyFailure {
  std::string relation;  // e.g. "L_2 G_4 = 0"
};

struct PropertyReport {
  int checked = 0;
  std::vector<PropertyFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks 𝓛_1 G_{n+1} = G_n (n < cap), 𝓛_2 G_{n+2} = θ G_n, and 𝓛_k G_n = 0
/// for 3 ≤ k ≤ n ≤ cap (also k = 2 with θ = 0), through the transported
/// Virasoro operators.
template <class F>
PropertyReport whittaker_property_check(const WhittakerExpansion<F>& e, int cap);

}  // namespace gaiotto

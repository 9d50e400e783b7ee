#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gaiotto/nekrasov.hpp"
#include "gaiotto/rational.hpp"

namespace gaiotto {

/// Virasoro-side data attached to rank-2 gauge parameters:
/// β = −ε1/ε2, h = ((ε1+ε2)² − (a2−a1)²)/(4ε1ε2), c = 13 − 6(β + 1/β), and the
/// two roots u, u′ = (−(ε1+ε2) ± (a2−a1))/ε2 of the weight equation
/// u(u − 2β + 2) = 4βh. The ket carries u, the bra u′.
struct AgtContext {
  GaugeParams gp;
  Rational beta;
  Rational u;
  Rational u_prime;
  Rational h;
  Rational c;
  /// x = (ε1ε2)²·Λ⁴, so the x^d coefficient is scaled by (ε1ε2)^{2d}.
  Rational x_per_lambda4;
};

AgtContext params_from_gauge(const GaugeParams& gp);

enum class Pairing {
  Conjugate,  // Σ c_λ(u)·c_μ(u′)·⟨P_λ, P_μ⟩
  Literal     // Σ c_λ(u)·c_μ(u)·⟨P_λ, P_μ⟩
};

/// Σ_{λ,μ⊢d} c_λ c_μ ⟨P_λ^{(1/β)}, P_μ^{(1/β)}⟩_{−2/β}.
Rational agt_lhs_degree(int d, const AgtContext& ctx, Pairing pairing = Pairing::Conjugate);

/// (ε1ε2)^{2d}·z_d.
Rational agt_rhs_degree(int d, const AgtContext& ctx);

/// Σ_{λ,μ,ν⊢d} c_λ(u) c_μ(u′) γ^ν_λ γ^ν_μ N_ν(−2/β), where P_λ^{(1/β)} =
/// Σ_ν γ^ν_λ P_ν^{(−2/β)}.
Rational agt_alt_degree(int d, const AgtContext& ctx);

struct AgtDegreeResult {
  int d = 0;
  std::optional<Rational> lhs;
  std::optional<Rational> rhs;
  std::optional<Rational> alt;
  bool pass = false;
  std::string error;  // set when a side could not be evaluated
};

struct AgtReport {
  std::vector<AgtDegreeResult> degrees;
  bool ok() const;
};

/// Evaluates both sides for d = 0..d_max. Degenerate or resonant degrees are
/// reported as failures carrying the diagnostic, not thrown.
AgtReport agt_check(int d_max, const AgtContext& ctx, Pairing pairing = Pairing::Conjugate,
                    bool with_alt = false);

}  // namespace gaiotto

#pragma once

#include <map>
#include <optional>
#include <vector>

#include "gaiotto/matrix.hpp"
#include "gaiotto/partition.hpp"
#include "gaiotto/symfunc.hpp"

namespace gaiotto {

/// Linear map Λ^d → Λ^{d−shift} on symmetric functions truncated at `cap`,
/// stored as one power-sum matrix (target × source, canonical order) per
/// source degree. Blocks whose target degree leaves [0, cap] are absent and
/// act as zero.
template <class F>
class GradedOperator {
 public:
  GradedOperator(int shift, int cap);

  int shift() const { return shift_; }
  int cap() const { return cap_; }

  bool has_block(int source_degree) const;
  const Matrix<F>& block(int source_degree) const;
  Matrix<F>& block(int source_degree);

  /// Result is in the power-sum basis.
  SymFunc<F> apply(const SymFunc<F>& f) const;

  GradedOperator& operator+=(const GradedOperator& o);
  GradedOperator& operator-=(const GradedOperator& o);
  GradedOperator& operator*=(const F& s);
  friend GradedOperator operator+(GradedOperator a, const GradedOperator& b) { return a += b; }
  friend GradedOperator operator-(GradedOperator a, const GradedOperator& b) { return a -= b; }
  friend GradedOperator operator*(GradedOperator a, const F& s) { return a *= s; }

  bool operator==(const GradedOperator& o) const;

  static GradedOperator identity(int cap);
  /// Σ n p_n ∂/∂p_n, i.e. multiplication by the degree.
  static GradedOperator degree_operator(int cap);
  /// Multiplication by p_k (shift −k).
  static GradedOperator multiplication(int k, int cap);

 private:
  bool target_in_range(int d) const { return d - shift_ >= 0 && d - shift_ <= cap_; }
  int shift_;
  int cap_;
  std::vector<std::optional<Matrix<F>>> blocks_;
};

/// a ∘ b. Intermediate degrees beyond the cap are truncated away.
template <class F>
GradedOperator<F> compose(const GradedOperator<F>& a, const GradedOperator<F>& b);

/// a∘b − b∘a.
template <class F>
GradedOperator<F> commutator(const GradedOperator<F>& a, const GradedOperator<F>& b);

/// c·p_{creators}·∂_{annihilators}; p_k multiplies, ∂_k = ∂/∂p_k.
template <class F>
struct DiffTerm {
  F coeff;
  std::vector<int> creators;
  std::vector<int> annihilators;
};

/// Sum of DiffTerms of common shift Σ annihilators − Σ creators.
template <class F>
GradedOperator<F> from_diff_terms(const std::vector<DiffTerm<F>>& terms, int shift, int cap);

/// Normal-ordered Heisenberg word c·s^{s_power}·a_{m_1}⋯a_{m_k} with
/// s = √(β/2). Negative modes are creators, positive ones annihilators; a_0
/// must already be replaced by its eigenvalue.
template <class F>
struct ModeWord {
  F coeff;
  int s_power = 0;
  std::vector<int> modes;
};

/// Transport a mode word through a_{−k} ↦ s·p_k, a_k ↦ (k/s)·∂_k. Throws
/// std::logic_error if an odd power of s survives.
template <class F>
DiffTerm<F> transport(const ModeWord<F>& w, const F& beta);

/// ℒ_n = ½Σ_m :a_m a_{n−m}: − (n+1)ρ a_n with a_0 = α, u = √(2β)α and
/// ρ√(2β) = β − 1, as a matrix with entries rational in (β, u). Memoized.
template <class F>
const GradedOperator<F>& virasoro_mode(int n, const F& beta, const F& u, int cap);

/// h = u(u − 2β + 2)/(4β).
template <class F>
F highest_weight(const F& beta, const F& u);

/// c = 13 − 6(β + 1/β).
template <class F>
F central_charge(const F& beta);

/// [ℒ_m, ℒ_n] = (m−n)ℒ_{m+n} + (c/12)m(m²−1)δ_{m+n,0} on every source degree
/// d with d, d−m, d−n, d−m−n all in [0, cap], where truncation cannot interfere.
template <class F>
bool virasoro_bracket_holds(int m, int n, const F& beta, const F& u, int cap);

/// Σ_{m,n>0}[mn p_{m+n}∂_m∂_n + β(m+n) p_m p_n ∂_{m+n}] + (1−β)Σ n² p_n∂_n.
template <class F>
GradedOperator<F> e_operator(const F& beta, int cap);

/// β Σ_{n>0} p_n∘ℒ_n + (β − 1 − u)·degree.
template <class F>
GradedOperator<F> e_operator_split(const F& beta, const F& u, int cap);

/// Ĥ^{(N)}_{β,√(β/2)} from its mode expansion
/// Σ_{m,n>0}(t′a_{−m−n}a_m a_n + (t/t′)a_{−m}a_{−n}a_{m+n}) + Σ(n(1−t)+Nt)a_{−n}a_n.
template <class F>
GradedOperator<F> cubic_hamiltonian(const F& beta, int n_vars, int cap);

/// ε_λ(β) = Σ_i (λ_i² + β(1−2i)λ_i).
template <class F>
F eps_eigenvalue(const Partition& lambda, const F& beta);

/// ε^{(N)}_λ(t) = Σ_i (λ_i² + t(N+1−2i)λ_i).
template <class F>
F eps_eigenvalue_finite(const Partition& lambda, const F& t, int n_vars);

/// Polynomial in N variables keyed by exponent vectors of length N.
template <class F>
using NVarPoly = std::map<std::vector<int>, F>;

/// ρ_N: set x_{N+1} = x_{N+2} = ⋯ = 0.
template <class F>
NVarPoly<F> restrict_to_variables(const SymFunc<F>& f, int n_vars);

/// Σ(x_i∂_i)² + tΣ_{i<j}((x_i+x_j)/(x_i−x_j))(x_i∂_i − x_j∂_j). Throws
/// NonSymmetricInput when f is not symmetric.
template <class F>
NVarPoly<F> cs_apply(const NVarPoly<F>& f, int n_vars, const F& t);

}  // namespace gaiotto

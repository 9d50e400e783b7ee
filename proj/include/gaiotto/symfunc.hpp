#pragma once

#include <map>
#include <vector>

#include "gaiotto/matrix.hpp"
#include "gaiotto/partition.hpp"
#include "gaiotto/rational.hpp"

namespace gaiotto {

enum class BasisKind { PowerSum, Monomial, Jack };

template <class F>
struct Basis {
  BasisKind kind = BasisKind::PowerSum;
  F jack_parameter{};  // only meaningful for BasisKind::Jack

  static Basis power_sum() { return {BasisKind::PowerSum, F()}; }
  static Basis monomial() { return {BasisKind::Monomial, F()}; }
  static Basis jack(const F& b) { return {BasisKind::Jack, b}; }

  bool operator==(const Basis& o) const {
    return kind == o.kind && (kind != BasisKind::Jack || jack_parameter == o.jack_parameter);
  }
};

/// Symmetric function truncated at degree `cap`, stored degree by degree as a
/// sparse map from partitions to coefficients in a single basis. Zero
/// coefficients are never stored.
template <class F>
class SymFunc {
 public:
  using Terms = std::map<Partition, F>;

  SymFunc(Basis<F> basis, int cap);

  static SymFunc one(int cap);
  static SymFunc basis_element(Basis<F> basis, const Partition& lambda, int cap);
  static SymFunc power_sum(const Partition& lambda, int cap) {
    return basis_element(Basis<F>::power_sum(), lambda, cap);
  }
  static SymFunc monomial(const Partition& lambda, int cap) {
    return basis_element(Basis<F>::monomial(), lambda, cap);
  }

  const Basis<F>& basis() const { return basis_; }
  int cap() const { return cap_; }

  F coeff(const Partition& lambda) const;
  /// Throws DegreeCapExceeded when |λ| > cap.
  void set(const Partition& lambda, const F& value);
  void add(const Partition& lambda, const F& value);

  const Terms& degree(int d) const { return by_degree_.at(static_cast<std::size_t>(d)); }
  /// Highest degree carrying a nonzero coefficient; -1 for zero.
  int max_degree() const;
  bool is_zero() const { return max_degree() < 0; }
  std::size_t term_count() const;
  SymFunc homogeneous_part(int d) const;

  SymFunc& operator+=(const SymFunc& o);
  SymFunc& operator-=(const SymFunc& o);
  SymFunc& operator*=(const F& s);
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const F& s) { return a *= s; }

  /// Same basis and same coefficients (the caps may differ).
  bool operator==(const SymFunc& o) const;

 private:
  void check_compatible(const SymFunc& o) const;
  Basis<F> basis_;
  int cap_;
  std::vector<Terms> by_degree_;
};

enum class Direction { PowerToMonomial, MonomialToPower };

/// Exact change of basis at one degree. Row i expresses the i-th source basis
/// element (canonical partition order) in the target basis.
struct TransitionTable {
  int degree = 0;
  Direction direction = Direction::PowerToMonomial;
  std::vector<Partition> partitions;
  Matrix<Rational> matrix;
};

/// Built on first use, then shared read-only; consults the disk cache.
const TransitionTable& transition_table(int degree, Direction direction);

/// p_λ in the monomial basis, computed directly by repeated m_μ·p_k products.
std::map<Partition, Rational> power_sum_in_monomials(const Partition& rho);

template <class F>
SymFunc<F> p_to_m(const SymFunc<F>& f);
template <class F>
SymFunc<F> m_to_p(const SymFunc<F>& f);

/// Converts from any basis (Jack included) to power sums.
template <class F>
SymFunc<F> to_power_sum(const SymFunc<F>& f);
template <class F>
SymFunc<F> to_monomial(const SymFunc<F>& f);

/// f·p_k in the power-sum basis; DegreeCapExceeded when deg f + k > cap.
template <class F>
SymFunc<F> multiply_by_power_sum(const SymFunc<F>& f, int k);

/// ⟨f, g⟩_b with ⟨p_λ, p_μ⟩_b = δ_{λμ} z_λ b^{ℓ(λ)}.
template <class F>
F inner_product(const SymFunc<F>& f, const SymFunc<F>& g, const F& b);

/// Gram matrix of {m_λ : λ ⊢ d} under ⟨·,·⟩_b, canonical order.
template <class F>
Matrix<F> monomial_gram_matrix(int degree, const F& b);

}  // namespace gaiotto

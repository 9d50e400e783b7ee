#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gaiotto/partition.hpp"
#include "gaiotto/ratfunc.hpp"
#include "gaiotto/rational.hpp"

namespace gaiotto {

/// λ = (n_1^{j_1}, …, n_l^{j_l}) with n_1 > ⋯ > n_l > 0 and cumulative row
/// counts m_k = j_1 + ⋯ + j_k. The corners of λ are exactly (m_k, n_k).
struct BlockEncoding {
  std::vector<int> n;
  std::vector<int> m;

  static BlockEncoding of(const Partition& lambda);
  Partition to_partition() const;
  int blocks() const { return static_cast<int>(n.size()); }
};

/// Σ_{(I,λ_I)∈C(λ)} Π_{i<I} (λ_i−λ_I+β(I−i+1))/(λ_i−λ_I+β(I−i))
///                 · Π_{i<λ_I} (λ_I−i+1+β(λ'_i−I))/(λ_I−i+β(λ'_i−I)).
/// Zero for ∅. Throws PoleAtPoint when a denominator vanishes.
template <class F>
F f1_eval(const Partition& lambda, const F& beta);

/// The same corner sum with each term weighted by (λ_I − (I+1)β).
template <class F>
F f2_eval(const Partition& lambda, const F& beta);

/// |λ|.
template <class F>
F f1_expected(const Partition& lambda, const F& beta);

/// Σ_i (λ_i² − 2iλ_iβ).
template <class F>
F f2_expected(const Partition& lambda, const F& beta);

/// The corner sums rewritten block by block:
/// F_{1,k} = (m_k − m_{k−1})(n_k − n_{k+1}) Π_{i<k} (n_i−n_k+β(m_k−m_{i−1}))/(n_i−n_k+β(m_k−m_i))
///           · Π_{j>k} (n_k−n_{j+1}+β(m_j−m_k))/(n_k−n_j+β(m_j−m_k)),
/// F_{2,k} = (n_k − (m_k+1)β)·F_{1,k}; m_0 = 0, n_{l+1} = 0.
template <class F>
F f1_blocks(const BlockEncoding& b, const F& beta);
template <class F>
F f2_blocks(const BlockEncoding& b, const F& beta);

enum class IdentityMode { Symbolic, Sampled };

template <class F>
using CornerSum = std::function<F(const Partition&, const F&)>;

/// Left-hand sides under test; replaced only by the harness self-check.
struct IdentitySides {
  CornerSum<RatFunc> f1 = f1_eval<RatFunc>;
  CornerSum<RatFunc> f2 = f2_eval<RatFunc>;
  CornerSum<Rational> f1_at = f1_eval<Rational>;
  CornerSum<Rational> f2_at = f2_eval<Rational>;
};

struct IdentityFailure {
  Partition lambda;
  std::string identity;  // "F1" or "F2"
};

struct IdentityReport {
  int partitions = 0;
  std::vector<IdentityFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Checks F1 = |λ| and F2 = Σ(λ_i² − 2iλ_iβ) for every |λ| ≤ max_size, either
/// as identities in Q(β) or at `trials` seeded random rational β each.
IdentityReport verify_identities(int max_size, IdentityMode mode, std::uint64_t seed = 0,
                                 int trials = 5, const IdentitySides& sides = {});

}  // namespace gaiotto

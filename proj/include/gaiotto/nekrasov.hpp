#pragma once

#include <string>
#include <vector>

#include "gaiotto/partition.hpp"
#include "gaiotto/rational.hpp"

namespace gaiotto {

/// Pure SU(r) gauge data: Ω-background parameters and Coulomb moduli.
struct GaugeParams {
  Rational eps1;
  Rational eps2;
  std::vector<Rational> a;

  int rank() const { return static_cast<int>(a.size()); }
  /// Throws std::invalid_argument unless ε1ε2 ≠ 0 and r ≥ 2.
  void validate() const;
};

using PartitionTuple = std::vector<Partition>;

/// All r-tuples of partitions of total size d, in a fixed order.
std::vector<PartitionTuple> partition_tuples(int d, int r);

/// n^Y_{s,t} = Π_{□∈Y_s}(−ℓ_{Y_t}(□)ε1 + (a_{Y_s}(□)+1)ε2 + a_t − a_s)
///           · Π_{■∈Y_t}((ℓ_{Y_s}(■)+1)ε1 − a_{Y_t}(■)ε2 + a_t − a_s),
/// with generalized arms and legs; s, t are 1-based.
Rational nek_factor(const PartitionTuple& y, int s, int t, const GaugeParams& gp);

/// Coefficient of x^d: Σ_{|Y|=d} 1/Π_{s,t} n^Y_{s,t}. Throws
/// VanishingDenominator naming the tuple whose product is zero.
Rational z_degree(int d, const GaugeParams& gp);

std::string tuple_str(const PartitionTuple& y);

}  // namespace gaiotto

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gaiotto {

/// A weakly decreasing sequence of positive integers. The empty partition is
/// the unique partition of 0. Trailing zeros passed to the constructor are
/// dropped; anything else that is not weakly decreasing is rejected.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const { return parts_; }

  /// |λ|
  int size() const { return size_; }
  /// ℓ(λ)
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// λ_i with 1-based row index; 0 beyond the last row.
  int row(int i) const {
    return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }
  /// m_k(λ)
  int multiplicity(int k) const;

  /// Ordered by size first, then lexicographically by parts.
  std::strong_ordering operator<=>(const Partition& other) const;
  bool operator==(const Partition& other) const = default;

  /// JSON-style rendering, e.g. "[4,4,2,1,1,1]" and "[]".
  std::string str() const;

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Box {
  int row;
  int col;
  bool operator==(const Box&) const = default;
};

struct ArmLeg {
  int arm;
  int leg;
  bool operator==(const ArmLeg&) const = default;
};

enum class Dominance { Equal, Less, Greater, Incomparable, DifferentSize };

/// All partitions of n in reverse-lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions_of(int n);

/// Process-wide cached copy of partitions_of(n).
const std::vector<Partition>& canonical_partitions(int n);
/// Position of p within canonical_partitions(p.size()).
std::size_t canonical_index(const Partition& p);

/// Number of partitions of n, by counting the enumeration (n <= 60 or so).
std::int64_t partition_count(int n);

Partition conjugate(const Partition& lambda);

bool contains_box(const Partition& lambda, int i, int j);

/// Arm λ_i − j and leg λ'_j − i for an arbitrary box; the box need not lie in
/// λ, in which case either value may be negative.
ArmLeg arm_leg(const Partition& lambda, int i, int j);

/// Boxes whose removal leaves a partition, ordered by increasing row.
std::vector<Box> removable_corners(const Partition& lambda);

/// Cells where a box can be added, ordered by increasing row.
std::vector<Box> addable_cells(const Partition& lambda);

/// All boxes (i, j) of λ in row-major order.
std::vector<Box> boxes(const Partition& lambda);

/// z_λ = Π_i i^{m_i} m_i!
std::int64_t z_of(const Partition& lambda);

Dominance compare_dominance(const Partition& mu, const Partition& lambda);

/// μ ≤ λ in dominance order (false when sizes differ or incomparable).
bool dominance_leq(const Partition& mu, const Partition& lambda);

/// μ ⊆ λ as Young diagrams.
bool contained_in(const Partition& mu, const Partition& lambda);

/// All μ ⊆ λ with |μ| = |λ| − k, for k ∈ {1, 2}; reverse-lexicographic order.
std::vector<Partition> shrink_by(const Partition& lambda, int k);

/// All λ ⊇ μ with |λ| = |μ| + 1.
std::vector<Partition> grow_by_one(const Partition& mu);

/// λ with the box in row i (1-based) removed / added. No validity check beyond
/// the resulting sequence being a partition.
Partition remove_box(const Partition& lambda, int row);
Partition add_box(const Partition& lambda, int row);

/// λ with one extra part k inserted.
Partition with_part(const Partition& lambda, int k);

/// λ with one part equal to k removed (k must occur in λ).
Partition without_part(const Partition& lambda, int k);

/// Parse "[2,1]" or "2,1" or "" (empty).
Partition parse_partition(const std::string& text);

}  // namespace gaiotto

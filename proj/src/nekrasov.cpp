#include "gaiotto/nekrasov.hpp"

#include <stdexcept>

#include "gaiotto/errors.hpp"

namespace gaiotto {

void GaugeParams::validate() const {
  if (eps1.is_zero() || eps2.is_zero()) throw std::invalid_argument("eps1 and eps2 must be nonzero");
  if (rank() < 2) throw std::invalid_argument("gauge rank must be at least 2");
}

std::vector<PartitionTuple> partition_tuples(int d, int r) {
  if (r < 1) throw std::invalid_argument("tuple length must be positive");
  if (r == 1) {
    std::vector<PartitionTuple> out;
    for (const auto& p : partitions_of(d)) out.push_back({p});
    return out;
  }
  std::vector<PartitionTuple> out;
  for (int k = d; k >= 0; --k)
    for (const auto& head : partitions_of(k))
      for (auto& rest : partition_tuples(d - k, r - 1)) {
        rest.insert(rest.begin(), head);
        out.push_back(std::move(rest));
      }
  return out;
}

Rational nek_factor(const PartitionTuple& y, int s, int t, const GaugeParams& gp) {
  const Partition& ys = y.at(static_cast<std::size_t>(s - 1));
  const Partition& yt = y.at(static_cast<std::size_t>(t - 1));
  const Rational shift = gp.a.at(static_cast<std::size_t>(t - 1)) - gp.a.at(static_cast<std::size_t>(s - 1));
  Rational result(1);
  for (const auto& [i, j] : boxes(ys)) {
    const int leg_t = arm_leg(yt, i, j).leg;
    const int arm_s = arm_leg(ys, i, j).arm;
    result *= -Rational(leg_t) * gp.eps1 + Rational(arm_s + 1) * gp.eps2 + shift;
  }
  for (const auto& [i, j] : boxes(yt)) {
    const int leg_s = arm_leg(ys, i, j).leg;
    const int arm_t = arm_leg(yt, i, j).arm;
    result *= Rational(leg_s + 1) * gp.eps1 - Rational(arm_t) * gp.eps2 + shift;
  }
  return result;
}

std::string tuple_str(const PartitionTuple& y) {
  std::string s = "(";
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i) s += ",";
    s += y[i].str();
  }
  return s + ")";
}

Rational z_degree(int d, const GaugeParams& gp) {
  gp.validate();
  Rational total;
  for (const auto& y : partition_tuples(d, gp.rank())) {
    Rational prod(1);
    for (int s = 1; s <= gp.rank(); ++s)
      for (int t = 1; t <= gp.rank(); ++t) prod *= nek_factor(y, s, t, gp);
    if (prod.is_zero()) throw VanishingDenominator("Nekrasov denominator vanishes for " + tuple_str(y));
    total += prod.inverse();
  }
  return total;
}

}  // namespace gaiotto

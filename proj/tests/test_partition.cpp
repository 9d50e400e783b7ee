#include <doctest.h>

#include <algorithm>
#include <set>

#include "gaiotto/partition.hpp"
#include "gaiotto/serialize.hpp"

using namespace gaiotto;

namespace {

// Euler's pentagonal recurrence, kept independent of the enumerator.
std::vector<std::int64_t> pentagonal_counts(int n_max) {
  std::vector<std::int64_t> p(static_cast<std::size_t>(n_max) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t total = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = (k % 2 == 1) ? 1 : -1;
      total += sign * p[static_cast<std::size_t>(n - g1)];
      if (g2 <= n) total += sign * p[static_cast<std::size_t>(n - g2)];
    }
    p[static_cast<std::size_t>(n)] = total;
  }
  return p;
}

std::vector<Partition> all_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& p : partitions_of(k)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("enumeration") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition{}});
  CHECK(partitions_of(3) == std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}});
  CHECK(partitions_of(4).size() == 5);

  const auto p = pentagonal_counts(40);
  for (int n = 0; n <= 40; ++n) CHECK(partition_count(n) == p[static_cast<std::size_t>(n)]);
  for (int n = 0; n <= 20; ++n) {
    const auto parts = partitions_of(n);
    CHECK(static_cast<std::int64_t>(parts.size()) == p[static_cast<std::size_t>(n)]);
    CHECK(std::set<Partition>(parts.begin(), parts.end()).size() == parts.size());
    CHECK(std::is_sorted(parts.rbegin(), parts.rend()));
  }
}

TEST_CASE("rejects malformed parts") {
  CHECK_THROWS(Partition(std::vector<int>{1, 2}));
  CHECK_THROWS(Partition(std::vector<int>{2, -1}));
  CHECK(Partition(std::vector<int>{2, 0}) == Partition{2});
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition{}) == Partition{});
  CHECK(conjugate({4, 4, 2, 1, 1, 1}) == Partition{6, 3, 2, 2});
  CHECK(conjugate({2, 1}) == Partition{2, 1});
  for (const auto& p : all_up_to(12)) CHECK(conjugate(conjugate(p)) == p);
}

TEST_CASE("boxes, arms and legs") {
  CHECK(contains_box({4, 4, 2, 1, 1}, 2, 3));
  CHECK_FALSE(contains_box({4, 4, 2, 1, 1}, 4, 3));
  CHECK_FALSE(contains_box(Partition{}, 1, 1));

  CHECK(arm_leg({2, 1}, 1, 1) == ArmLeg{1, 1});
  CHECK(arm_leg(Partition{}, 1, 1) == ArmLeg{-1, -1});
  // (1,2) lies inside (3) and λ'_2 = 1, so the leg is 0
  CHECK(arm_leg({3}, 1, 2) == ArmLeg{1, 0});
  CHECK(arm_leg({3}, 2, 1) == ArmLeg{-1, -1});
  CHECK(arm_leg({1}, 1, 2) == ArmLeg{-1, -1});

  for (const auto& p : all_up_to(9)) {
    const auto bs = boxes(p);
    CHECK(static_cast<int>(bs.size()) == p.size());
    for (const auto& b : bs) {
      const auto al = arm_leg(p, b.row, b.col);
      CHECK(al.arm >= 0);
      CHECK(al.leg >= 0);
    }
  }
}

TEST_CASE("removable corners") {
  CHECK(removable_corners({1}) == std::vector<Box>{{1, 1}});
  CHECK(removable_corners({2, 2, 1}) == std::vector<Box>{{2, 2}, {3, 1}});
  CHECK(removable_corners({4, 4, 2, 1, 1, 1}) == std::vector<Box>{{2, 4}, {3, 2}, {6, 1}});
  for (const auto& p : all_up_to(10)) {
    std::set<int> values(p.parts().begin(), p.parts().end());
    CHECK(removable_corners(p).size() == values.size());
    for (const auto& c : removable_corners(p)) CHECK_NOTHROW(remove_box(p, c.row));
  }
}

TEST_CASE("z_lambda") {
  CHECK(z_of({2, 1}) == 2);
  CHECK(z_of({1, 1, 1}) == 6);
  CHECK(z_of({3}) == 3);
  CHECK(z_of(Partition{}) == 1);
  CHECK(z_of({2, 2, 1}) == 8);
}

TEST_CASE("dominance") {
  CHECK(dominance_leq({1, 1, 1}, {2, 1}));
  CHECK(compare_dominance({3, 3}, {4, 1, 1}) == Dominance::Incomparable);
  CHECK_FALSE(dominance_leq({3, 3}, {4, 1, 1}));
  CHECK_FALSE(dominance_leq({4, 1, 1}, {3, 3}));
  CHECK(dominance_leq({2, 1}, {2, 1}));
  CHECK(compare_dominance({2}, {1}) == Dominance::DifferentSize);

  for (int n = 0; n <= 10; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps) {
      CHECK(dominance_leq(a, a));
      for (const auto& b : ps) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        if (n <= 7)
          for (const auto& c : ps)
            if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
    }
  }
}

TEST_CASE("shrink_by") {
  CHECK(shrink_by({2, 1}, 1) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(shrink_by({1}, 2).empty());
  CHECK(shrink_by({2, 2}, 2) == std::vector<Partition>{{2}, {1, 1}});
  CHECK(shrink_by({2, 1}, 2) == std::vector<Partition>{{1}});
  CHECK_THROWS_AS(shrink_by({3}, 3), std::invalid_argument);
  for (const auto& p : all_up_to(8))
    for (int k : {1, 2})
      for (const auto& mu : shrink_by(p, k)) {
        CHECK(mu.size() == p.size() - k);
        CHECK(contained_in(mu, p));
      }
  for (const auto& mu : all_up_to(7))
    for (const auto& lambda : grow_by_one(mu)) {
      const auto back = shrink_by(lambda, 1);
      CHECK(std::find(back.begin(), back.end(), mu) != back.end());
    }
}

TEST_CASE("json encoding") {
  CHECK(to_json(Partition{4, 4, 2, 1, 1, 1}).dump() == "[4,4,2,1,1,1]");
  CHECK(to_json(Partition{}).dump() == "[]");
  CHECK(partition_from_json(Json::parse("[3,1]")) == Partition{3, 1});
  CHECK(parse_partition("2,1") == Partition{2, 1});
  CHECK(Partition{4, 4, 2, 1, 1, 1}.str() == "[4,4,2,1,1,1]");
}

#include <doctest.h>

#include "gaiotto/errors.hpp"
#include "gaiotto/identities.hpp"

using namespace gaiotto;

namespace {

using Q = Rational;
const RatFunc B = RatFunc::variable();

RatFunc r(long n) { return RatFunc(n); }

}  // namespace

TEST_CASE("corner sum examples") {
  CHECK(f1_eval({1}, B) == r(1));
  CHECK(f1_eval({2, 1}, B) == r(3));
  CHECK(f1_eval({4, 4, 2, 1, 1, 1}, B) == r(13));
  CHECK(f2_eval({4, 4, 2, 1, 1, 1}, B) == f2_expected(Partition{4, 4, 2, 1, 1, 1}, B));
  CHECK(f1_eval(Partition{}, B).is_zero());
  CHECK(f2_eval({1}, B) == r(1) - r(2) * B);
  CHECK(f2_eval({2}, B) == r(4) - r(4) * B);
  CHECK(f2_eval({2, 1}, B) == r(5) - r(8) * B);
  CHECK(f1_eval({3, 1}, Q(2, 5)) == Q(4));
}

TEST_CASE("poles at special points") {
  CHECK_THROWS_AS(f1_eval({1, 1}, Q(0)), PoleAtPoint);
  CHECK_THROWS_AS(f2_eval({1, 1}, Q(0)), PoleAtPoint);
}

TEST_CASE("block encoding") {
  const auto b = BlockEncoding::of({4, 4, 2, 1, 1, 1});
  CHECK(b.n == std::vector<int>{4, 2, 1});
  CHECK(b.m == std::vector<int>{2, 3, 6});
  CHECK(BlockEncoding::of(Partition{}).blocks() == 0);
  for (int d = 1; d <= 10; ++d)
    for (const auto& lambda : canonical_partitions(d)) {
      const auto e = BlockEncoding::of(lambda);
      CHECK(e.to_partition() == lambda);
      const auto corners = removable_corners(lambda);
      REQUIRE(static_cast<int>(corners.size()) == e.blocks());
      for (int k = 0; k < e.blocks(); ++k) {
        CHECK(corners[static_cast<std::size_t>(k)].row == e.m[static_cast<std::size_t>(k)]);
        CHECK(corners[static_cast<std::size_t>(k)].col == e.n[static_cast<std::size_t>(k)]);
      }
    }
}

TEST_CASE("block form agrees with the corner sums") {
  for (int d = 1; d <= 7; ++d)
    for (const auto& lambda : canonical_partitions(d)) {
      const auto e = BlockEncoding::of(lambda);
      CHECK(f1_blocks(e, B) == f1_eval(lambda, B));
      CHECK(f2_blocks(e, B) == f2_eval(lambda, B));
    }
}

TEST_CASE("identities up to size 8") {
  const auto small = verify_identities(3, IdentityMode::Symbolic);
  CHECK(small.ok());
  CHECK(small.partitions == 1 + 1 + 2 + 3);
  const auto rep = verify_identities(8, IdentityMode::Symbolic);
  CHECK(rep.ok());
  CHECK(rep.partitions == 67);
  const auto sampled = verify_identities(8, IdentityMode::Sampled, 7, 3);
  CHECK(sampled.ok());
}

TEST_CASE("F2 limits") {
  for (int d = 1; d <= 8; ++d)
    for (const auto& lambda : canonical_partitions(d)) {
      const RatFunc f = f2_eval(lambda, B);
      REQUIRE(f.den() == Polynomial(Q(1)));
      long linear = 0, constant = 0;
      for (int i = 1; i <= lambda.length(); ++i) {
        linear -= 2L * i * lambda.row(i);
        constant += static_cast<long>(lambda.row(i)) * lambda.row(i);
      }
      CHECK(f.num().coeff(0) == Q(constant));
      CHECK(f.num().coeff(1) == Q(linear));
      CHECK(f.num().degree() <= 1);
    }
}

TEST_CASE("harness notices a mutated side") {
  // bump the exponent of β in one term: multiply by β on a single partition
  IdentitySides sides;
  sides.f1 = [](const Partition& l, const RatFunc& b) {
    return l == Partition{2, 1} ? f1_eval(l, b) * b : f1_eval(l, b);
  };
  sides.f1_at = [](const Partition& l, const Rational& b) {
    return l == Partition{2, 1} ? f1_eval(l, b) * b : f1_eval(l, b);
  };
  for (auto mode : {IdentityMode::Symbolic, IdentityMode::Sampled}) {
    const auto rep = verify_identities(4, mode, 3, 4, sides);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].lambda == Partition{2, 1});
    CHECK(rep.failures[0].identity == "F1");
  }
  IdentitySides f2_broken;
  f2_broken.f2 = [](const Partition& l, const RatFunc& b) { return f2_eval(l, b) + RatFunc(l.size() == 3 ? 1 : 0); };
  const auto rep = verify_identities(4, IdentityMode::Symbolic, 0, 5, f2_broken);
  CHECK(rep.failures.size() == 3);
}

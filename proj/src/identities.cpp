#include "gaiotto/identities.hpp"

#include <stdexcept>

#include "gaiotto/errors.hpp"
#include "gaiotto/field.hpp"
#include "gaiotto/identity_test.hpp"

namespace gaiotto {

BlockEncoding BlockEncoding::of(const Partition& lambda) {
  BlockEncoding b;
  for (int i = 1; i <= lambda.length(); ++i) {
    if (lambda.row(i) != lambda.row(i + 1)) {
      b.n.push_back(lambda.row(i));
      b.m.push_back(i);
    }
  }
  return b;
}

Partition BlockEncoding::to_partition() const {
  std::vector<int> parts;
  int prev = 0;
  for (std::size_t k = 0; k < n.size(); ++k) {
    if (m[k] <= prev || (k > 0 && n[k] >= n[k - 1]) || n[k] <= 0)
      throw std::invalid_argument("not a block encoding of a partition");
    parts.insert(parts.end(), static_cast<std::size_t>(m[k] - prev), n[k]);
    prev = m[k];
  }
  return Partition(std::move(parts));
}

namespace {

template <class F>
F checked_ratio(const F& num, const F& den, const char* where) {
  if (den.is_zero()) throw PoleAtPoint(where);
  return num / den;
}

template <class F>
F corner_term(const Partition& lambda, const Partition& conj, int I, const F& beta) {
  const int li = lambda.row(I);
  F term(1);
  for (int i = 1; i < I; ++i) {
    const int d = lambda.row(i) - li;
    term *= checked_ratio(F(d) + beta * F(I - i + 1), F(d) + beta * F(I - i), "corner sum, first product");
  }
  for (int i = 1; i < li; ++i) {
    const int leg = conj.row(i) - I;
    term *= checked_ratio(F(li - i + 1) + beta * F(leg), F(li - i) + beta * F(leg),
                          "corner sum, second product");
  }
  return term;
}

template <class F>
F corner_sum(const Partition& lambda, const F& beta, bool weighted) {
  const Partition conj = conjugate(lambda);
  F total;
  for (const auto& [I, j] : removable_corners(lambda)) {
    F term = corner_term(lambda, conj, I, beta);
    if (weighted) term *= F(lambda.row(I)) - F(I + 1) * beta;
    total += term;
  }
  return total;
}

template <class F>
F block_sum(const BlockEncoding& b, const F& beta, bool weighted) {
  const int l = b.blocks();
  auto n = [&](int k) { return k > l ? 0 : b.n[static_cast<std::size_t>(k - 1)]; };
  auto m = [&](int k) { return k == 0 ? 0 : b.m[static_cast<std::size_t>(k - 1)]; };
  F total;
  for (int k = 1; k <= l; ++k) {
    F term(F((m(k) - m(k - 1)) * (n(k) - n(k + 1))));
    for (int i = 1; i < k; ++i)
      term *= checked_ratio(F(n(i) - n(k)) + beta * F(m(k) - m(i - 1)),
                            F(n(i) - n(k)) + beta * F(m(k) - m(i)), "block sum, first product");
    for (int j = k + 1; j <= l; ++j)
      term *= checked_ratio(F(n(k) - n(j + 1)) + beta * F(m(j) - m(k)),
                            F(n(k) - n(j)) + beta * F(m(j) - m(k)), "block sum, second product");
    if (weighted) term *= F(n(k)) - F(m(k) + 1) * beta;
    total += term;
  }
  return total;
}

}  // namespace

template <class F>
F f1_eval(const Partition& lambda, const F& beta) {
  return corner_sum(lambda, beta, false);
}

template <class F>
F f2_eval(const Partition& lambda, const F& beta) {
  return corner_sum(lambda, beta, true);
}

template <class F>
F f1_expected(const Partition& lambda, const F&) {
  return F(lambda.size());
}

template <class F>
F f2_expected(const Partition& lambda, const F& beta) {
  F total;
  for (int i = 1; i <= lambda.length(); ++i) {
    const int li = lambda.row(i);
    total += F(li * li) - beta * F(2 * i * li);
  }
  return total;
}

template <class F>
F f1_blocks(const BlockEncoding& b, const F& beta) {
  return block_sum(b, beta, false);
}

template <class F>
F f2_blocks(const BlockEncoding& b, const F& beta) {
  return block_sum(b, beta, true);
}

IdentityReport verify_identities(int max_size, IdentityMode mode, std::uint64_t seed, int trials,
                                 const IdentitySides& sides) {
  IdentityReport report;
  const RatFunc beta = RatFunc::variable();
  for (int n = 0; n <= max_size; ++n)
    for (const auto& lambda : canonical_partitions(n)) {
      ++report.partitions;
      bool f1_ok = false, f2_ok = false;
      if (mode == IdentityMode::Symbolic) {
        try {
          f1_ok = sides.f1(lambda, beta) == f1_expected(lambda, beta);
          f2_ok = sides.f2(lambda, beta) == f2_expected(lambda, beta);
        } catch (const Error&) {
        }
      } else {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(report.partitions);
        auto at = [&](const CornerSum<Rational>& f) {
          return [&, f](std::span<const Rational> v) { return f(lambda, v[0]); };
        };
        try {
          f1_ok = identity_test(at(sides.f1_at), at(f1_expected<Rational>), 1, trials, s);
          f2_ok = identity_test(at(sides.f2_at), at(f2_expected<Rational>), 1, trials, s);
        } catch (const Error&) {
        }
      }
      if (!f1_ok) report.failures.push_back({lambda, "F1"});
      if (!f2_ok) report.failures.push_back({lambda, "F2"});
    }
  return report;
}

#define GAIOTTO_INSTANTIATE_IDENTITIES(F)                   \
  template F f1_eval(const Partition&, const F&);           \
  template F f2_eval(const Partition&, const F&);           \
  template F f1_expected(const Partition&, const F&);       \
  template F f2_expected(const Partition&, const F&);       \
  template F f1_blocks(const BlockEncoding&, const F&);     \
  template F f2_blocks(const BlockEncoding&, const F&);

GAIOTTO_INSTANTIATE_IDENTITIES(Rational)
GAIOTTO_INSTANTIATE_IDENTITIES(RatFunc)

}  // namespace gaiotto

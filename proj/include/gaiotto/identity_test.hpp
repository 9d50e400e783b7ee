#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>

#include "gaiotto/rational.hpp"

namespace gaiotto {

/// Numerator and denominator uniform in [1, 10^6]; negative with probability
/// 1/2 when `allow_negative`.
Rational random_rational(std::mt19937_64& rng, bool allow_negative = true);

using Evaluator = std::function<Rational(std::span<const Rational>)>;

/// Randomized identity test for expressions in `variables` rational unknowns.
/// Each trial draws a fresh point; a trial whose evaluation throws any
/// gaiotto::Error (pole, resonance, division by zero) is redrawn, at most
/// `max_retries` times in total. Returns true iff lhs == rhs at all points.
bool identity_test(const Evaluator& lhs, const Evaluator& rhs, int variables, int trials,
                   std::uint64_t seed, int max_retries = 200);

}  // namespace gaiotto

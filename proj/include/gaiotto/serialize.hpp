#pragma once

#include <json.hpp>

#include "gaiotto/partition.hpp"
#include "gaiotto/ratfunc.hpp"
#include "gaiotto/rational.hpp"
#include "gaiotto/scalar.hpp"

namespace gaiotto {

using Json = nlohmann::ordered_json;

/// Rational as "p/q" (or "p").
Json to_json(const Rational& r);
/// RatFunc as {"num": {"deg": "coeff"}, "den": {...}}.
Json to_json(const RatFunc& f);
Json to_json(const Scalar& s);
/// Partition as an array of parts; [] for the empty partition.
Json to_json(const Partition& p);

Rational rational_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
Partition partition_from_json(const Json& j);

template <class F>
F scalar_from_json(const Json& j);

template <>
inline Rational scalar_from_json<Rational>(const Json& j) { return rational_from_json(j); }
template <>
inline RatFunc scalar_from_json<RatFunc>(const Json& j) { return ratfunc_from_json(j); }

}  // namespace gaiotto

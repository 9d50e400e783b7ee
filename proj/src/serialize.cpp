#include "gaiotto/serialize.hpp"

#include <string>

#include "gaiotto/errors.hpp"

namespace gaiotto {

namespace {

Json poly_to_json(const Polynomial& p) {
  Json j = Json::object();
  for (int k = 0; k <= p.degree(); ++k)
    if (!p.coeff(k).is_zero()) j[std::to_string(k)] = p.coeff(k).str();
  return j;
}

Polynomial poly_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("polynomial must be a {degree: coeff} object");
  std::vector<Rational> c;
  for (const auto& [key, val] : j.items()) {
    const int deg = std::stoi(key);
    if (deg < 0) throw ParseError("negative degree in polynomial");
    if (static_cast<int>(c.size()) <= deg) c.resize(static_cast<std::size_t>(deg) + 1);
    c[static_cast<std::size_t>(deg)] = Rational::parse(val.get<std::string>());
  }
  return Polynomial(std::move(c));
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const RatFunc& f) {
  Json j = Json::object();
  j["num"] = poly_to_json(f.num());
  j["den"] = poly_to_json(f.den());
  return j;
}

Json to_json(const Scalar& s) {
  return s.mode() == ScalarMode::ExactPoint ? to_json(s.rational()) : to_json(s.ratfunc());
}

Json to_json(const Partition& p) {
  Json j = Json::array();
  for (int part : p.parts()) j.push_back(part);
  return j;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("rational must be a \"p/q\" string");
}

RatFunc ratfunc_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return RatFunc(rational_from_json(j));
  return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

Partition partition_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("partition must be an array");
  std::vector<int> parts;
  for (const auto& v : j) parts.push_back(v.get<int>());
  return Partition(std::move(parts));
}

}  // namespace gaiotto

#include "epoly/exchange.hpp"

#include <json.hpp>

#include "epoly/error.hpp"

namespace epoly {

using nlohmann::json;

namespace {

json integer_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    Integer z;
    if (z.set_str(j.get<std::string>(), 10) != 0)
      throw Error(ErrorCode::ParseError, "not an integer: " + j.dump());
    return z;
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

json poly_json(const HalfPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(json::array({e, integer_json(c.get_num()), integer_json(c.get_den())}));
  return out;
}

HalfPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial must be an array of triples");
  std::vector<HalfPoly::Term> terms;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer())
      throw Error(ErrorCode::ParseError, "bad term " + t.dump());
    const Integer den = integer_from_json(t[2]);
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in " + t.dump());
    Rational c(integer_from_json(t[1]), den);
    c.canonicalize();
    terms.emplace_back(t[0].get<int>(), c);
  }
  return HalfPoly::from_terms(terms);
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

std::string to_exchange(const HalfPoly& p) { return poly_json(p).dump(); }

HalfPoly half_poly_from_exchange(const std::string& text) { return poly_from_json(parse(text)); }

std::string to_exchange(const RationalFunction& f) {
  return json::array({poly_json(f.num()), poly_json(f.den())}).dump();
}

RationalFunction rational_function_from_exchange(const std::string& text) {
  const json j = parse(text);
  if (!j.is_array() || j.size() != 2) throw Error(ErrorCode::ParseError, "expected [numerator, denominator]");
  return RationalFunction(poly_from_json(j[0]), poly_from_json(j[1]));
}

}  // namespace epoly

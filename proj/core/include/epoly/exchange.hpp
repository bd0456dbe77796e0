#pragma once

#include <string>

#include "epoly/rational_function.hpp"

namespace epoly {

/// Polynomial exchange format: a JSON array of [half_exponent, numerator,
/// denominator] triples in ascending exponent order. Integers that fit in 64
/// bits are JSON numbers, larger ones are decimal strings; both parse.
std::string to_exchange(const HalfPoly& p);
HalfPoly half_poly_from_exchange(const std::string& text);

/// A rational function is the pair [numerator, denominator].
std::string to_exchange(const RationalFunction& f);
RationalFunction rational_function_from_exchange(const std::string& text);

}  // namespace epoly

#pragma once

#include <string>
#include <string_view>

#include "dmm/sparse_poly.hpp"

namespace dmm {

/// Parses `coeff:e1,...,en;coeff:e1,...,en` (or `0`). Whitespace is ignored.
/// When nvars is 0 it is inferred from the first term; the zero polynomial then needs nvars.
SparsePoly parse_poly(std::string_view text, std::size_t nvars = 0);

/// Inverse of parse_poly; terms in canonical order.
std::string serialize_poly(const SparsePoly& p);

/// Parses a decimal integer with optional sign. Throws ParseError.
Integer parse_integer(std::string_view text);
/// Parses `p/q`, `p` or a finite decimal such as `-1.25`. Throws ParseError.
Rational parse_rational(std::string_view text);
/// "p/q" or "p" when the denominator is 1.
std::string rational_str(const Rational& q);

}  // namespace dmm

#pragma once

#include <string>

#include "mero/exact/homopoly.hpp"

namespace mero::exact {

/// Canonical text form of a polynomial: lex-ordered terms joined by " + ",
/// each term `((a/b)+(c/d)i)*z0^e0*z1^e1*...` with every variable listed.
/// The zero polynomial prints one zero-coefficient term carrying the
/// declared degree on z0.  print/parse round-trip bit-exactly.
std::string print_poly(const HomoPoly& p);

/// Inverse of print_poly; accepts arbitrary whitespace around '+' and '*'.
HomoPoly parse_poly(const std::string& text);

}  // namespace mero::exact

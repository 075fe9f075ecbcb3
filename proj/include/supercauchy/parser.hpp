#pragma once

#include <string>

#include "supercauchy/element.hpp"

namespace supercauchy {

// Parses the canonical text form of an element and evaluates it in the given
// signature. Grammar (whitespace free between tokens is fine, spaces allowed):
//
//   expr   := ['-'] term { ('+' | '-') term }
//   term   := factor { '*' factor }
//   factor := base [ '^' ['-'] integer ]      (negative exponents require a
//                                              scalar base: rationals or pi)
//   base   := integer [ '/' integer ] | 'pi' | variable | vector
//           | op '(' expr ')' | '(' expr ')'
//   variable := ('x'|'q'|'y'|'e'|'f') index
//   vector   := 'X' | 'Xb' | 'Xf'
//   op       := 'Dl' | 'Dr' | 'Lap' | 'Eul' | 'Ber'
//
// Dl/Dr are the left/right Dirac operators, Lap the Laplace operator, Eul the
// Euler operator and Ber the Berezin integral. parse_element(to_string())
// reproduces any element bit-exactly. Errors throw std::invalid_argument
// carrying the 1-based character position.
SuperElement parse_element(const std::string& text, const Signature& sig);

}  // namespace supercauchy

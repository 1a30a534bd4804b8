#pragma once

#include <string>

#include "polarcalc/polynomial.hpp"

namespace polarcalc {

// Parses the textual polynomial format used in job files.
//
// Grammar (whitespace insignificant):
//   expr    := term (('+' | '-') term)*        leading '-' allowed
//   term    := factor ('*' factor)*
//   factor  := base ('^' natural)?
//   base    := rational | variable | '(' expr ')'
//   rational:= integer ('/' natural)?
//   variable: [A-Za-z][A-Za-z0-9_]*
//
// Multiplication is always explicit ("2*x", never "2x"). Every variable must
// be declared in the ring. Errors carry a zero-based character offset.
Polynomial parse_polynomial(const std::string& text, RingPtr ring);

}  // namespace polarcalc

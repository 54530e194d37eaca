#pragma once

#include <string_view>

#include "klk/graded.hpp"

namespace klk {

// Parses polynomials in s, t with scalar coefficients:
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := ('-'|'+') factor | atom ('^' ['-'] integer)?
//   atom   := integer ['/' integer] | s | t | pi | lambda | '(' expr ')'
// Negative exponents are accepted only on invertible constants such as pi.
// Throws ParseError with the byte offset of the problem.
ScalarPoly parse_expression(std::string_view text);

}  // namespace klk

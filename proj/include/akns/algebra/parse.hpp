#pragma once

#include <string_view>

#include "akns/algebra/diff_poly.hpp"
#include "akns/algebra/sym_poly.hpp"

namespace akns {

// Parsers for the canonical text forms produced by str(). The grammar is a
// plain sum of products: rational literals "a/b", the unit "i", constant
// symbols (identifiers other than i, p, q), p and q with an optional
// derivative order "^(j)", integer powers "^e", and parentheses.
// Errors carry the 1-based column of the offending character.

DiffPoly parse_diff_poly(std::string_view text);

// Throws ParseError if p or q appears.
SymPoly parse_sym_poly(std::string_view text);

}  // namespace akns

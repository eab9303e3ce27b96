#pragma once

#include <string_view>

#include "novlag/diffpoly.hpp"
#include "novlag/novikov.hpp"

namespace novlag {

/// Diff mode: commutative polynomials in x_k with derivative marks.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := rational ('*'? factor)* | factor ('*'? factor)*
///   factor := var | '(' expr ')' ['^' digits]
///   var    := 'x' digits [primes] ['^' digits]
///   primes := "'" | "''" | '^(' digits ')'
///   rational := ['-'] digits ['/' digits]
///
/// Throws ParseError with the line and column of the offending token.
DiffPoly parse_diff(std::string_view src);

/// Nov mode: '*' is the Novikov product, 'o' the symmetrized product and
/// [a, b] the commutator. Products are left-associative.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [scalar ['*']] atom (('*'|'o') atom)*
///   scalar := rational | '(' rational ')'
///   atom   := 'x' digits | '[' expr ',' expr ']' | '(' expr ')'
NovExpr parse_nov(std::string_view src);

}  // namespace novlag

#pragma once

#include "singwf/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace singwf {

// Grammar (whitespace-insensitive):
//   poly   := term (('+' | '-') term)*
//   term   := [sign] [coeff ['*']] factor (['*'] factor)*  |  [sign] coeff
//   coeff  := integer | integer '/' integer | param
//   factor := var ['^' (integer | '{' integer '}')]
//   var    := one of the VarList names (t z x y, or x1 x2 ...)
//   param  := 'a' .. 'e'
// Juxtaposition multiplies; repeated variables in a term accumulate exponents.

// Terms in source order, not normalized.
std::vector<Term> parse_terms(std::string_view text, const VarList& vars);

Polynomial parse_polynomial(std::string_view text, const VarList& vars);

// t,z,x,y unless the text mentions indexed variables x1, x2, ... (then x1..xN for the largest N, N >= 2).
VarList guess_vars(std::string_view text);

// Canonical form, e.g. "t^2 + z^3 x + z x^5 y^2", "2 t^2", "a z x^5".
std::string render(const Polynomial& poly);

// Same terms without spaces, in the given order: "t^3+zx+tx^3+ty".
std::string render_compact(const std::vector<Term>& terms, const VarList& vars);

std::string render_monomial(const Monomial& m, const VarList& vars, bool spaced = true);

}  // namespace singwf

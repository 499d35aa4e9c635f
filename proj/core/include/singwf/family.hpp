#pragma once

#include "singwf/polynomial.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace singwf {

// Values for the integer parameters of a parametric table row (n, i, k, ...).
using Bindings = std::map<std::string, std::int64_t>;

// Replaces every {expr} with its integer value. expr uses + - * /, parentheses, integer
// literals and bound names; juxtaposition multiplies ("2n", "2(n+1)"). Division must be exact.
// Throws InconsistentFamily on unbound names, inexact division or malformed expressions.
std::string substitute_templates(std::string_view text, const Bindings& bindings);

// Splits "(A ||| B)" groups (or a top-level "A ||| B") into one string per alternative.
// Several groups in one text multiply out. Groups whose alternatives contain no '+'/'-'
// lose their parentheses.
std::vector<std::string> expand_alternatives(std::string_view text);

// Expands a family description into its representative: f_k(u,v) becomes u^k + v^k,
// parenthesized sums are multiplied out, and the rest goes through the polynomial grammar.
// Templates must already be substituted.
Polynomial instantiate_generic_forms(std::string_view text, const VarList& vars);

}  // namespace singwf

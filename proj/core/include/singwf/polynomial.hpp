#pragma once

#include "singwf/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace singwf {

// Ordered, duplicate-free variable names. Position i is the index used for q_i, C_i, ...
class VarList {
public:
    explicit VarList(std::vector<std::string> names);

    // t, z, x, y — the coordinate order used by the classification tables.
    static VarList tzxy();
    // x1, ..., xn.
    static VarList indexed(std::size_t n);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& operator[](std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool is_tzxy() const;
    bool is_indexed() const;

    friend bool operator==(const VarList&, const VarList&) = default;

private:
    std::vector<std::string> names_;
};

// Generic coefficient a..e. Only its presence matters; it never takes part in arithmetic.
struct Parameter {
    char tag = 'a';
    bool nonzero = false;

    friend bool operator==(const Parameter& a, const Parameter& b) { return a.tag == b.tag; }
};

using Coefficient = std::variant<Rational, Parameter>;

bool is_parameter(const Coefficient& c);

using Exponent = int;
using Monomial = std::vector<Exponent>;

int total_degree(const Monomial& m);

// Graded lexicographic: lower total degree first; ties put the lexicographically larger
// exponent vector first (so t^2 precedes z^2 in t,z,x,y order).
bool graded_lex_less(const Monomial& a, const Monomial& b);

struct Term {
    Monomial exponents;
    Coefficient coeff;
};

class Polynomial;

// Merges like terms, drops zero rational terms, sorts by graded lex.
// Throws ZeroPolynomial when nothing survives, ParameterCollision when a parameter
// coefficient shares its monomial with any other term.
Polynomial normalize(const VarList& vars, std::vector<Term> terms);
Polynomial normalize(const Polynomial& poly);

// Normalized, nonempty polynomial. Immutable after construction.
class Polynomial {
public:
    const VarList& vars() const noexcept { return vars_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    std::size_t nvars() const noexcept { return vars_.size(); }

    std::vector<Monomial> support() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    friend Polynomial normalize(const VarList& vars, std::vector<Term> terms);
    Polynomial(VarList vars, std::vector<Term> terms) : vars_(std::move(vars)), terms_(std::move(terms)) {}

    VarList vars_;
    std::vector<Term> terms_;
};

// Smallest exponent of variable i over the support.
Exponent variable_divides(const Polynomial& poly, std::size_t i);

// True iff every monomial is divisible by x_i or by x_j.
bool split_check(const Polynomial& poly, std::size_t i, std::size_t j);

}  // namespace singwf

#include "singwf/polynomial.hpp"

#include "singwf/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace singwf {

VarList::VarList(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() < 2) throw Error(ErrorCode::FormatError, "a variable list needs at least two names");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (n.empty()) throw Error(ErrorCode::FormatError, "empty variable name");
        if (!seen.insert(n).second) throw Error(ErrorCode::FormatError, "duplicate variable name " + n);
    }
}

VarList VarList::tzxy() { return VarList({"t", "z", "x", "y"}); }

VarList VarList::indexed(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    return VarList(std::move(names));
}

std::optional<std::size_t> VarList::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return i;
    }
    return std::nullopt;
}

bool VarList::is_tzxy() const { return *this == tzxy(); }

bool VarList::is_indexed() const { return *this == indexed(names_.size()); }

bool is_parameter(const Coefficient& c) { return std::holds_alternative<Parameter>(c); }

int total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

bool graded_lex_less(const Monomial& a, const Monomial& b) {
    const int da = total_degree(a);
    const int db = total_degree(b);
    if (da != db) return da < db;
    return b < a;
}

namespace {

struct GradedLexOrder {
    bool operator()(const Monomial& a, const Monomial& b) const { return graded_lex_less(a, b); }
};

std::string monomial_debug(const Monomial& m) {
    std::string s = "(";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(m[i]);
    }
    return s + ")";
}

}  // namespace

Polynomial normalize(const VarList& vars, std::vector<Term> terms) {
    std::map<Monomial, Coefficient, GradedLexOrder> merged;
    for (auto& term : terms) {
        if (term.exponents.size() != vars.size())
            throw Error(ErrorCode::FormatError, "monomial length does not match the variable list");
        for (Exponent e : term.exponents) {
            if (e < 0) throw Error(ErrorCode::NegativeExponent, "negative exponent in " + monomial_debug(term.exponents));
        }
        auto [it, inserted] = merged.try_emplace(term.exponents, term.coeff);
        if (inserted) continue;
        if (is_parameter(it->second) || is_parameter(term.coeff))
            throw Error(ErrorCode::ParameterCollision,
                        "generic parameter shares monomial " + monomial_debug(term.exponents) + " with another term");
        std::get<Rational>(it->second) += std::get<Rational>(term.coeff);
    }
    std::vector<Term> out;
    out.reserve(merged.size());
    for (auto& [mono, coeff] : merged) {
        if (!is_parameter(coeff) && std::get<Rational>(coeff) == 0) continue;
        out.push_back(Term{mono, coeff});
    }
    if (out.empty()) throw Error(ErrorCode::ZeroPolynomial, "all terms cancel");
    return Polynomial(vars, std::move(out));
}

Polynomial normalize(const Polynomial& poly) { return normalize(poly.vars(), poly.terms()); }

std::vector<Monomial> Polynomial::support() const {
    std::vector<Monomial> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back(t.exponents);
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        const auto& ta = a.terms_[i];
        const auto& tb = b.terms_[i];
        if (ta.exponents != tb.exponents || ta.coeff != tb.coeff) return false;
    }
    return true;
}

Exponent variable_divides(const Polynomial& poly, std::size_t i) {
    Exponent lowest = poly.terms().front().exponents.at(i);
    for (const auto& t : poly.terms()) lowest = std::min(lowest, t.exponents.at(i));
    return lowest;
}

bool split_check(const Polynomial& poly, std::size_t i, std::size_t j) {
    return std::all_of(poly.terms().begin(), poly.terms().end(),
                       [&](const Term& t) { return t.exponents.at(i) > 0 || t.exponents.at(j) > 0; });
}

}  // namespace singwf

#include "singwf/parser.hpp"

#include "singwf/errors.hpp"

#include <cctype>

namespace singwf {

namespace {

bool is_param_letter(char c) { return c >= 'a' && c <= 'e'; }

class Parser {
public:
    Parser(std::string_view text, const VarList& vars) : src_(text), vars_(vars) {}

    std::vector<Term> parse() {
        std::vector<Term> terms;
        skip_ws();
        if (at_end()) throw SyntaxError(pos_, "term", src_);
        terms.push_back(term(/*first=*/true));
        while (true) {
            skip_ws();
            if (at_end()) break;
            if (peek() != '+' && peek() != '-') throw SyntaxError(pos_, "'+' or '-'", src_);
            terms.push_back(term(/*first=*/false));
        }
        return terms;
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BigInt integer() {
        skip_ws();
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError(pos_, "integer", src_);
        return BigInt(std::string(src_.substr(start, pos_ - start)));
    }

    Exponent exponent() {
        skip_ws();
        const bool braced = accept('{');
        skip_ws();
        if (peek() == '-') throw Error(ErrorCode::NegativeExponent, "at position " + std::to_string(pos_) + " in \"" + std::string(src_) + "\"");
        const std::size_t at = pos_;
        BigInt value = integer();
        if (value > 1000000) throw SyntaxError(at, "exponent below 10^6", src_);
        if (braced && !accept('}')) throw SyntaxError(pos_, "'}'", src_);
        return static_cast<Exponent>(value);
    }

    // Length of the variable name starting at pos_, or 0.
    std::optional<std::size_t> match_variable(std::size_t& length) const {
        const char c = peek();
        if (!std::isalpha(static_cast<unsigned char>(c))) return std::nullopt;
        std::size_t end = pos_ + 1;
        if (vars_.is_indexed() || !vars_.index_of(std::string(1, c))) {
            while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
        }
        length = end - pos_;
        return vars_.index_of(src_.substr(pos_, length));
    }

    bool at_factor() {
        skip_ws();
        if (peek() == '*') return true;
        std::size_t len = 0;
        return std::isalpha(static_cast<unsigned char>(peek())) && (match_variable(len) || !is_param_letter(peek()));
    }

    void factor(Monomial& mono) {
        skip_ws();
        std::size_t len = 0;
        auto index = match_variable(len);
        if (!index) {
            if (std::isalpha(static_cast<unsigned char>(peek()))) {
                std::size_t end = pos_ + 1;
                while (end < src_.size() && std::isalnum(static_cast<unsigned char>(src_[end]))) ++end;
                throw Error(ErrorCode::UnknownVariable,
                            "\"" + std::string(src_.substr(pos_, end - pos_)) + "\" at position " + std::to_string(pos_) +
                                " is not one of the declared variables");
            }
            throw SyntaxError(pos_, "variable", src_);
        }
        pos_ += len;
        Exponent e = 1;
        if (accept('^')) e = exponent();
        mono[*index] += e;
    }

    Term term(bool first) {
        skip_ws();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        } else if (!first) {
            throw SyntaxError(pos_, "'+' or '-'", src_);
        }
        skip_ws();
        Term t{Monomial(vars_.size(), 0), Rational(1)};
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            BigInt num = integer();
            BigInt den = 1;
            if (accept('/')) {
                const std::size_t at = pos_;
                den = integer();
                if (den == 0) throw SyntaxError(at, "nonzero denominator", src_);
            }
            t.coeff = Rational(num, den);
            have_coeff = true;
        } else if (is_param_letter(peek())) {
            std::size_t len = 0;
            const bool is_var = match_variable(len).has_value();
            const bool followed_by_digit =
                pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]));
            if (!is_var && !followed_by_digit) {
                t.coeff = Parameter{peek(), false};
                ++pos_;
                have_coeff = true;
            }
        }
        if (have_coeff) accept('*');
        bool have_factor = false;
        while (true) {
            skip_ws();
            if (at_end() || peek() == '+' || peek() == '-') break;
            if (have_factor) accept('*');
            factor(t.exponents);
            have_factor = true;
        }
        if (!have_coeff && !have_factor) throw SyntaxError(pos_, "coefficient or variable", src_);
        if (negative) {
            if (is_parameter(t.coeff)) {
                // The sign of a generic coefficient carries no information.
            } else {
                t.coeff = Rational(-std::get<Rational>(t.coeff));
            }
        }
        return t;
    }

    std::string_view src_;
    const VarList& vars_;
    std::size_t pos_ = 0;
};

std::string coefficient_text(const Coefficient& c, bool has_factors, bool& negative) {
    negative = false;
    if (is_parameter(c)) return std::string(1, std::get<Parameter>(c).tag);
    Rational r = std::get<Rational>(c);
    if (r < 0) {
        negative = true;
        r = -r;
    }
    if (r == 1 && has_factors) return "";
    return to_display_string(r);
}

std::string render_terms(const std::vector<Term>& terms, const VarList& vars, bool spaced) {
    std::string out;
    bool first = true;
    for (const auto& t : terms) {
        const bool has_factors = total_degree(t.exponents) > 0;
        bool negative = false;
        const std::string coeff = coefficient_text(t.coeff, has_factors, negative);
        if (first) {
            if (negative) out += "-";
        } else {
            out += spaced ? (negative ? " - " : " + ") : (negative ? "-" : "+");
        }
        first = false;
        out += coeff;
        if (has_factors) {
            if (!coeff.empty() && spaced) out += " ";
            out += render_monomial(t.exponents, vars, spaced);
        }
    }
    return out;
}

}  // namespace

std::vector<Term> parse_terms(std::string_view text, const VarList& vars) { return Parser(text, vars).parse(); }

Polynomial parse_polynomial(std::string_view text, const VarList& vars) {
    return normalize(vars, parse_terms(text, vars));
}

VarList guess_vars(std::string_view text) {
    std::size_t max_index = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        if (text[i] != 'x' || !std::isdigit(static_cast<unsigned char>(text[i + 1]))) continue;
        std::size_t j = i + 1;
        std::size_t value = 0;
        while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) {
            value = value * 10 + static_cast<std::size_t>(text[j] - '0');
            if (value > 1000) break;
            ++j;
        }
        max_index = std::max(max_index, value);
    }
    if (max_index == 0) return VarList::tzxy();
    return VarList::indexed(std::max<std::size_t>(max_index, 2));
}

std::string render_monomial(const Monomial& m, const VarList& vars, bool spaced) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty() && spaced) out += " ";
        out += vars[i];
        if (m[i] != 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::string render(const Polynomial& poly) { return render_terms(poly.terms(), poly.vars(), /*spaced=*/true); }

std::string render_compact(const std::vector<Term>& terms, const VarList& vars) {
    return render_terms(terms, vars, /*spaced=*/false);
}

}  // namespace singwf

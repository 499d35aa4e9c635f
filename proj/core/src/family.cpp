#include "singwf/family.hpp"

#include "singwf/errors.hpp"
#include "singwf/parser.hpp"

#include <cctype>

namespace singwf {

namespace {

[[noreturn]] void family_error(const std::string& what) { throw Error(ErrorCode::InconsistentFamily, what); }

class ExprParser {
public:
    ExprParser(std::string_view text, const Bindings& b) : s_(text), b_(b) {}

    std::int64_t parse() {
        const std::int64_t v = sum();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected character");
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < s_.size() && s_[pos_] == c;
    }

    [[noreturn]] void fail(const std::string& why) {
        family_error("template {" + std::string(s_) + "}: " + why);
    }

    std::int64_t sum() {
        std::int64_t v = product();
        for (;;) {
            if (peek('+')) {
                ++pos_;
                v += product();
            } else if (peek('-')) {
                ++pos_;
                v -= product();
            } else {
                return v;
            }
        }
    }

    std::int64_t product() {
        std::int64_t v = unary();
        for (;;) {
            skip_ws();
            if (pos_ >= s_.size()) return v;
            const char c = s_[pos_];
            if (c == '*') {
                ++pos_;
                v *= unary();
            } else if (c == '/') {
                ++pos_;
                const std::int64_t den = unary();
                if (den == 0 || v % den != 0) fail("inexact division");
                v /= den;
            } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c))) {
                v *= unary();
            } else {
                return v;
            }
        }
    }

    std::int64_t unary() {
        if (peek('-')) {
            ++pos_;
            return -unary();
        }
        return atom();
    }

    std::int64_t atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            const std::int64_t v = sum();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::int64_t v = 0;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) v = v * 10 + (s_[pos_++] - '0');
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            // Single-letter names, so "2nk" reads as 2*n*k.
            const std::string name(1, c);
            ++pos_;
            auto it = b_.find(name);
            if (it == b_.end()) fail("unbound name '" + name + "'");
            return it->second;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    const Bindings& b_;
    std::size_t pos_ = 0;
};

std::size_t matching_paren(std::string_view s, std::size_t open) {
    int depth = 0;
    for (std::size_t k = open; k < s.size(); ++k) {
        if (s[k] == '(') ++depth;
        if (s[k] == ')' && --depth == 0) return k;
    }
    family_error("unbalanced parentheses in \"" + std::string(s) + "\"");
}

std::vector<std::string> split_top(std::string_view s, std::string_view sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '(') ++depth;
        if (s[k] == ')') --depth;
        if (depth == 0 && s.substr(k, sep.size()) == sep) {
            parts.emplace_back(s.substr(start, k - start));
            k += sep.size() - 1;
            start = k + 1;
        }
    }
    parts.emplace_back(s.substr(start));
    return parts;
}

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

using TermList = std::vector<Term>;

Coefficient multiply(const Coefficient& a, const Coefficient& b) {
    if (is_parameter(a) && is_parameter(b)) family_error("product of two generic coefficients");
    if (is_parameter(a)) {
        if (std::get<Rational>(b) != 1) family_error("scaled generic coefficient");
        return a;
    }
    if (is_parameter(b)) {
        if (std::get<Rational>(a) != 1) family_error("scaled generic coefficient");
        return b;
    }
    return Coefficient(std::get<Rational>(a) * std::get<Rational>(b));
}

TermList multiply(const TermList& a, const TermList& b) {
    TermList out;
    for (const auto& x : a) {
        for (const auto& y : b) {
            Term t{x.exponents, multiply(x.coeff, y.coeff)};
            for (std::size_t k = 0; k < t.exponents.size(); ++k) t.exponents[k] += y.exponents[k];
            out.push_back(std::move(t));
        }
    }
    return out;
}

TermList one(const VarList& vars) { return {Term{Monomial(vars.size(), 0), Coefficient(Rational(1))}}; }

TermList expand_sum(std::string_view s, const VarList& vars);

Term single_monomial(std::string_view s, const VarList& vars) {
    auto terms = parse_terms(s, vars);
    if (terms.size() != 1) family_error("f-form argument \"" + std::string(s) + "\" is not a monomial");
    return terms.front();
}

std::size_t parse_uint(std::string_view s, std::size_t& pos) {
    const std::size_t start = pos;
    std::size_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) v = v * 10 + static_cast<std::size_t>(s[pos++] - '0');
    if (pos == start) family_error("expected an integer in \"" + std::string(s) + "\"");
    return v;
}

TermList expand_term(std::string_view s, const VarList& vars) {
    TermList acc = one(vars);
    std::string atom;
    auto flush = [&] {
        const std::string a = trim(atom);
        atom.clear();
        if (a.empty() || a == "*") return;
        acc = multiply(acc, parse_terms(a, vars));
    };
    std::size_t k = 0;
    while (k < s.size()) {
        const char c = s[k];
        if (c == '(') {
            flush();
            const std::size_t close = matching_paren(s, k);
            TermList group = expand_sum(s.substr(k + 1, close - k - 1), vars);
            k = close + 1;
            if (k < s.size() && s[k] == '^') {
                ++k;
                const std::size_t e = parse_uint(s, k);
                TermList powered = one(vars);
                for (std::size_t r = 0; r < e; ++r) powered = multiply(powered, group);
                group = std::move(powered);
            }
            acc = multiply(acc, group);
        } else if (c == 'f' && k + 1 < s.size() && s[k + 1] == '_') {
            flush();
            k += 2;
            const int deg = static_cast<int>(parse_uint(s, k));
            if (k >= s.size() || s[k] != '(') family_error("f-form without arguments in \"" + std::string(s) + "\"");
            const std::size_t close = matching_paren(s, k);
            const auto args = split_top(s.substr(k + 1, close - k - 1), ",");
            if (args.size() != 2) family_error("f-form needs two arguments");
            TermList form;
            for (const auto& arg : args) {
                Term m = single_monomial(arg, vars);
                for (auto& e : m.exponents) e *= deg;
                if (!is_parameter(m.coeff)) {
                    Rational c = 1;
                    for (int r = 0; r < deg; ++r) c *= std::get<Rational>(m.coeff);
                    m.coeff = c;
                }
                form.push_back(std::move(m));
            }
            acc = multiply(acc, form);
            k = close + 1;
        } else {
            atom += c;
            ++k;
        }
    }
    flush();
    return acc;
}

TermList expand_sum(std::string_view s, const VarList& vars) {
    TermList out;
    int depth = 0;
    std::size_t start = 0;
    bool negative = false;
    auto emit = [&](std::size_t end) {
        const std::string body = trim(s.substr(start, end - start));
        if (body.empty()) family_error("empty term in \"" + std::string(s) + "\"");
        TermList t = expand_term(body, vars);
        if (negative) {
            for (auto& term : t) {
                if (is_parameter(term.coeff)) family_error("negated generic coefficient");
                term.coeff = Coefficient(-std::get<Rational>(term.coeff));
            }
        }
        out.insert(out.end(), t.begin(), t.end());
    };
    for (std::size_t k = 0; k < s.size(); ++k) {
        const char c = s[k];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == '+' || c == '-')) {
            if (trim(s.substr(start, k - start)).empty()) {
                if (c == '-') negative = !negative;
            } else {
                emit(k);
                negative = (c == '-');
            }
            start = k + 1;
        }
    }
    emit(s.size());
    return out;
}

}  // namespace

std::string substitute_templates(std::string_view text, const Bindings& bindings) {
    std::string out;
    std::size_t k = 0;
    while (k < text.size()) {
        if (text[k] == '{') {
            const std::size_t close = text.find('}', k);
            if (close == std::string_view::npos) family_error("unterminated template in \"" + std::string(text) + "\"");
            out += std::to_string(ExprParser(text.substr(k + 1, close - k - 1), bindings).parse());
            k = close + 1;
        } else if (text[k] == '}') {
            family_error("stray '}' in \"" + std::string(text) + "\"");
        } else {
            out += text[k++];
        }
    }
    return out;
}

std::vector<std::string> expand_alternatives(std::string_view text) {
    if (text.find("|||") == std::string_view::npos) return {std::string(text)};

    const auto top = split_top(text, "|||");
    if (top.size() > 1) {
        std::vector<std::string> out;
        for (const auto& part : top) {
            for (auto& alt : expand_alternatives(trim(part))) out.push_back(std::move(alt));
        }
        return out;
    }

    // First parenthesized group that holds a top-level "|||".
    for (std::size_t k = 0; k < text.size(); ++k) {
        if (text[k] != '(') continue;
        const std::size_t close = matching_paren(text, k);
        const std::string_view inner = text.substr(k + 1, close - k - 1);
        const auto alts = split_top(inner, "|||");
        if (alts.size() < 2) continue;
        std::vector<std::string> out;
        for (const auto& a : alts) {
            const std::string body = trim(a);
            const bool bare = body.find_first_of("+-") == std::string::npos;
            const std::string piece = bare ? body : "(" + body + ")";
            const std::string joined = std::string(text.substr(0, k)) + piece + std::string(text.substr(close + 1));
            for (auto& alt : expand_alternatives(joined)) out.push_back(std::move(alt));
        }
        return out;
    }
    family_error("'|||' outside a parenthesized group in \"" + std::string(text) + "\"");
}

Polynomial instantiate_generic_forms(std::string_view text, const VarList& vars) {
    return normalize(vars, expand_sum(text, vars));
}

}  // namespace singwf

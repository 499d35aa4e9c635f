#include "singwf/rational.hpp"

#include "singwf/errors.hpp"

#include <cctype>

namespace singwf {

std::string to_fraction_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

std::string to_display_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
    if (digits.empty()) throw Error(ErrorCode::FormatError, "malformed rational \"" + std::string(whole) + "\"");
    for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw Error(ErrorCode::FormatError, "malformed rational \"" + std::string(whole) + "\"");
    }
    return BigInt(std::string(digits));
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    const auto slash = s.find('/');
    BigInt num = parse_integer(trim(s.substr(0, slash)), text);
    BigInt den = 1;
    if (slash != std::string_view::npos) den = parse_integer(trim(s.substr(slash + 1)), text);
    if (den == 0) throw Error(ErrorCode::FormatError, "zero denominator in \"" + std::string(text) + "\"");
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

}  // namespace singwf

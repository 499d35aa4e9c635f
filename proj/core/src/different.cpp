#include "singwf/different.hpp"

#include "singwf/errors.hpp"

#include <algorithm>
#include <array>

namespace singwf {

namespace {

constexpr std::array<std::string_view, 4> kGreek = {"Γ", "Δ", "Υ", "Ω"};
constexpr std::array<char, 4> kAscii = {'G', 'D', 'U', 'O'};
constexpr std::array<std::string_view, 10> kSubscripts = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};

Rational one_minus_inverse(const Rational& m) { return Rational(1) - Rational(1) / m; }

[[noreturn]] void unknown(std::string_view name) {
    throw Error(ErrorCode::UnknownStratumName, "\"" + std::string(name) + "\"");
}

std::size_t parse_index(std::string_view digits, std::string_view whole, std::size_t nvars) {
    if (digits.size() != 1 || digits[0] < '1' || digits[0] > '9') unknown(whole);
    const std::size_t v = static_cast<std::size_t>(digits[0] - '1');
    if (v >= nvars) unknown(whole);
    return v;
}

}  // namespace

StratumId StratumId::pair(std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return {Kind::CoordPair, i, j};
}

std::string canonical_name(const StratumId& s) {
    if (s.kind == StratumId::Kind::CoordPrime) return "C" + std::to_string(s.i + 1) + "p";
    return "C" + std::to_string(s.i + 1) + std::to_string(s.j + 1);
}

std::string display_name(const StratumId& s, std::size_t nvars) {
    if (nvars == 4) {
        std::string out(kGreek[s.i]);
        if (s.kind == StratumId::Kind::CoordPair) out += std::to_string(s.j + 1);
        return out;
    }
    if (s.kind == StratumId::Kind::CoordPrime) return "C" + std::to_string(s.i + 1) + "'";
    return canonical_name(s);
}

StratumId parse_stratum_name(std::string_view name, std::size_t nvars) {
    if (name.empty()) unknown(name);
    if (name[0] == 'C' && name.size() >= 3) {
        if (name.size() == 3 && name[2] == 'p') return StratumId::prime(parse_index(name.substr(1, 1), name, nvars));
        if (name.size() == 3) {
            const std::size_t i = parse_index(name.substr(1, 1), name, nvars);
            const std::size_t j = parse_index(name.substr(2, 1), name, nvars);
            if (i >= j) unknown(name);
            return StratumId::pair(i, j);
        }
        unknown(name);
    }
    if (nvars != 4) unknown(name);

    std::optional<std::size_t> letter;
    std::string_view rest;
    for (std::size_t k = 0; k < 4; ++k) {
        if (name[0] == kAscii[k]) {
            letter = k;
            rest = name.substr(1);
            break;
        }
        if (name.substr(0, kGreek[k].size()) == kGreek[k]) {
            letter = k;
            rest = name.substr(kGreek[k].size());
            break;
        }
    }
    if (!letter) unknown(name);
    if (rest.empty()) return StratumId::prime(*letter);

    std::string digit;
    if (rest.size() == 1) {
        digit = std::string(rest);
    } else {
        for (std::size_t k = 0; k < kSubscripts.size(); ++k) {
            if (rest == kSubscripts[k]) digit = std::to_string(k);
        }
    }
    if (digit.empty()) unknown(name);
    const std::size_t j = parse_index(digit, name, nvars);
    if (j <= *letter) unknown(name);
    return StratumId::pair(*letter, j);
}

void BoundaryDivisor::add(const StratumId& s, const Rational& c) {
    if (c == 0) return;
    Rational& slot = coeffs_[s];
    slot += c;
    if (slot == 0) coeffs_.erase(s);
}

void BoundaryDivisor::set(const StratumId& s, const Rational& c) {
    if (c == 0)
        coeffs_.erase(s);
    else
        coeffs_[s] = c;
}

Rational BoundaryDivisor::coefficient(const StratumId& s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

std::string to_display_string(const BoundaryDivisor& div, std::size_t nvars) {
    if (div.is_zero()) return "0";
    std::vector<std::pair<Rational, StratumId>> items;
    for (const auto& [s, c] : div.coefficients()) items.emplace_back(c, s);
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string out;
    for (const auto& [c, s] : items) {
        if (!out.empty()) out += " + ";
        out += to_display_string(c) + " " + display_name(s, nvars);
    }
    return out;
}

void validate_boundary(const WellFormProfile& prof, const StdBoundary& b) {
    if (b.c.size() != prof.n)
        throw Error(ErrorCode::InvalidBoundary, "expected " + std::to_string(prof.n) + " boundary coefficients");
    for (std::size_t i = 0; i < prof.n; ++i) {
        if (b.c[i] < 0 || b.c[i] > 1)
            throw Error(ErrorCode::InvalidBoundary, "c_" + std::to_string(i + 1) + " = " + to_display_string(b.c[i]) +
                                                        " is outside [0,1]");
    }
    for (const auto& pr : prof.failing_pairs) {
        if (b.c[pr.i] + b.c[pr.j] > 1)
            throw Error(ErrorCode::InvalidBoundary, "c_" + std::to_string(pr.i + 1) + " + c_" +
                                                        std::to_string(pr.j + 1) + " exceeds 1 on a failing pair");
    }
}

BoundaryDivisor diff_on_E(const WellFormProfile& prof, const StdBoundary& b) {
    validate_boundary(prof, b);
    for (const auto& pr : prof.failing_pairs) {
        if (prof.q[pr.i] > 1 && prof.q[pr.j] > 1)
            throw Error(ErrorCode::RemarkViolation,
                        "failing pair {" + std::to_string(pr.i + 1) + "," + std::to_string(pr.j + 1) +
                            "} has q_i = " + std::to_string(prof.q[pr.i]) + " and q_j = " + std::to_string(prof.q[pr.j]));
    }
    BoundaryDivisor out;
    for (std::size_t i = 0; i < prof.n; ++i) {
        out.set(StratumId::prime(i), Rational(1) - (Rational(1) - b.c[i]) / prof.q[i]);
    }
    for (const auto& pr : prof.failing_pairs) {
        const Rational order = Rational(prof.qij(pr.i, pr.j)) * prof.q[pr.i] * prof.q[pr.j];
        out.set(StratumId::pair(pr.i, pr.j), Rational(1) - (Rational(1) - b.c[pr.i] - b.c[pr.j]) / order);
    }
    return out;
}

BoundaryDivisor diff_over_wps(const WellFormProfile& prof, const StdBoundary& b) {
    validate_boundary(prof, b);
    BoundaryDivisor out;
    for (std::size_t i = 0; i < prof.n; ++i) out.set(StratumId::prime(i), b.c[i]);
    for (const auto& pr : prof.failing_pairs) {
        out.set(StratumId::pair(pr.i, pr.j),
                Rational(1) - (Rational(1) - b.c[pr.i] - b.c[pr.j]) / prof.qij(pr.i, pr.j));
    }
    return out;
}

StdBoundary build_Dhat(const WellFormProfile& prof) {
    StdBoundary b = StdBoundary::zero(prof.n);
    for (std::size_t i = 0; i < prof.n; ++i) b.c[i] = one_minus_inverse(prof.q[i]);
    return b;
}

BoundaryDivisor build_D(const WellFormProfile& prof) {
    BoundaryDivisor out;
    for (std::size_t i = 0; i < prof.n; ++i) out.set(StratumId::prime(i), one_minus_inverse(prof.q[i]));
    for (const auto& pr : prof.failing_pairs) {
        out.set(StratumId::pair(pr.i, pr.j), one_minus_inverse(prof.q[pr.i]) + one_minus_inverse(prof.q[pr.j]));
    }
    return out;
}

bool check_adjunction(const WellFormProfile& prof) {
    return diff_on_E(prof, StdBoundary::zero(prof.n)) == diff_over_wps(prof, build_Dhat(prof));
}

std::optional<ExceptionalHint> exceptional_hint(const WellFormProfile& prof, int dim) {
    Rational threshold;
    if (dim == 3)
        threshold = Rational(6, 7);
    else if (dim == 2)
        threshold = Rational(2, 3);
    else
        return std::nullopt;
    for (std::size_t k = 0; k < prof.n; ++k) {
        const Rational dk = one_minus_inverse(prof.q[k]);
        if (dk >= threshold) return ExceptionalHint{k, threshold, dk};
    }
    return std::nullopt;
}

}  // namespace singwf

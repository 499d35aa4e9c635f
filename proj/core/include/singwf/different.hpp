#pragma once

#include "singwf/rational.hpp"
#include "singwf/wellform.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace singwf {

// A formal stratum of E:
//   CoordPrime(i)   C_i' — the curve {x_i = 0} on E minus its failing pair curves
//   CoordPair(i,j)  C_ij — the curve {x_i = x_j = 0}, divisorial only for failing pairs
// Primes sort before pairs; both by index.
struct StratumId {
    enum class Kind { CoordPrime, CoordPair };

    Kind kind = Kind::CoordPrime;
    std::size_t i = 0;
    std::size_t j = 0;  // unused for CoordPrime

    static StratumId prime(std::size_t i) { return {Kind::CoordPrime, i, 0}; }
    static StratumId pair(std::size_t i, std::size_t j);

    friend auto operator<=>(const StratumId&, const StratumId&) = default;
};

// "C1p", "C13" (1-based).
std::string canonical_name(const StratumId& s);

// Four-variable display: Γ Δ Υ Ω for C_1'..C_4' and Γ2 Γ3 Γ4 Δ3 Δ4 Υ4 for the pairs.
// Other dimensions: "C1'", "C13".
std::string display_name(const StratumId& s, std::size_t nvars);

// Accepts canonical names, the ASCII aliases G D U O G2 G3 G4 D3 D4 U4, and the Greek forms
// (Γ2 or Γ₂). Aliases are only meaningful with four variables. Throws UnknownStratumName.
StratumId parse_stratum_name(std::string_view name, std::size_t nvars);

// Formal Q-divisor supported on strata; zero coefficients are never stored.
class BoundaryDivisor {
public:
    using Map = std::map<StratumId, Rational>;

    BoundaryDivisor() = default;

    // Adds to the existing coefficient (tuple entries and named curves on one stratum add up).
    void add(const StratumId& s, const Rational& c);
    void set(const StratumId& s, const Rational& c);
    Rational coefficient(const StratumId& s) const;

    const Map& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    friend bool operator==(const BoundaryDivisor&, const BoundaryDivisor&) = default;

private:
    Map coeffs_;
};

// Terms in increasing coefficient order, ties by stratum: "1/2 Δ + 3/4 Γ2 + 4/5 Ω"; "0" when empty.
std::string to_display_string(const BoundaryDivisor& div, std::size_t nvars);

// Coefficients c_i of the coordinate divisors {x_i = 0} on the ambient weighted projective space.
struct StdBoundary {
    std::vector<Rational> c;

    static StdBoundary zero(std::size_t n) { return StdBoundary{std::vector<Rational>(n)}; }
};

// Throws InvalidBoundary unless 0 <= c_i <= 1 and c_i + c_j <= 1 on every failing pair.
void validate_boundary(const WellFormProfile& prof, const StdBoundary& b);

// Diff_E(B): C_i' gets 1 - (1 - c_i)/q_i, a failing C_ij gets 1 - (1 - c_i - c_j)/(q_ij q_i q_j).
// Throws RemarkViolation when a failing pair has q_i > 1 and q_j > 1.
BoundaryDivisor diff_on_E(const WellFormProfile& prof, const StdBoundary& b);

// Diff_{E/P}(B): C_i' gets c_i, a failing C_ij gets 1 - (1 - c_i - c_j)/q_ij.
BoundaryDivisor diff_over_wps(const WellFormProfile& prof, const StdBoundary& b);

// D^ = sum (1 - 1/q_i){x_i = 0} on the ambient space.
StdBoundary build_Dhat(const WellFormProfile& prof);

// D = sum (1 - 1/q_i) C_i on E, resolved onto strata.
BoundaryDivisor build_D(const WellFormProfile& prof);

// Diff_E(0) == Diff_{E/P}(D^), compared coefficient by coefficient.
bool check_adjunction(const WellFormProfile& prof);

inline constexpr std::string_view kExceptionalCaveat =
    "sufficient condition only: assumes (X,H) is not lc for any hyperplane section H, which is not verified";

struct ExceptionalHint {
    std::size_t k = 0;
    Rational threshold;    // 6/7 for surfaces E of threefolds, 2/3 for curves
    Rational coefficient;  // d_k = 1 - 1/q_k
};

// First k whose D-coefficient reaches the threshold for the given dimension of X (2 or 3).
std::optional<ExceptionalHint> exceptional_hint(const WellFormProfile& prof, int dim);

}  // namespace singwf

#pragma once

#include "singwf/polynomial.hpp"

#include <cstdint>
#include <string_view>
#include <vector>

namespace singwf {

using Weight = std::int64_t;

// Primitive positive weights p and the quasihomogeneous degree d of a polynomial under p.
struct WeightAssignment {
    std::vector<Weight> p;
    Weight d = 0;

    friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;
};

Weight weighted_degree(const Monomial& m, const std::vector<Weight>& p);

// Common weighted degree of every monomial; NotQuasihomogeneous names two monomials that disagree.
Weight quasi_degree(const Polynomial& poly, const std::vector<Weight>& p);

// Validates positivity and quasihomogeneity, divides out a common factor of p, and returns (p, d).
WeightAssignment explicit_weights(const Polynomial& poly, std::vector<Weight> p);

// Solves { sum_i p_i m_i = d : m in support } exactly. A one-dimensional solution space with a
// strictly positive ray yields its primitive integer point. NonUniqueWeights otherwise (the
// error message lists a basis), NoPositiveSolution when there is no positive ray.
WeightAssignment infer_weights(const Polynomial& poly);

// Rational basis of the solution space of the weight system, each vector laid out (p_1..p_n, d).
std::vector<std::vector<Rational>> weight_solution_basis(const Polynomial& poly);

enum class DiscrepancyTag { CanonicalCompatible, StrictlyLcCandidate, Neither };

std::string_view to_string(DiscrepancyTag tag);

struct Discrepancy {
    std::int64_t a = 0;  // sum(p) - d - 1
    DiscrepancyTag tag = DiscrepancyTag::Neither;
};

Discrepancy discrepancy(const WeightAssignment& w);

}  // namespace singwf

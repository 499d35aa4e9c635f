#pragma once

#include "singwf/polynomial.hpp"
#include "singwf/weights.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace singwf {

// Unordered index pair, stored with i < j.
struct IndexPair {
    std::size_t i = 0;
    std::size_t j = 0;

    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

// The gcd bookkeeping of a weighted blow-up and of its well-formed model.
//   q_i     gcd of p with p_i omitted
//   Q       product of the q_i
//   p~_i    p_i q_i / Q,   d~ = d / Q
//   q_ij    gcd of p~ with p~_i and p~_j omitted
// A pair {i,j} fails when q_ij does not divide d~; failing pairs carry the divisorial curves C_ij.
struct WellFormProfile {
    std::size_t n = 0;
    std::vector<Weight> p;
    Weight d = 0;
    std::vector<Weight> q;
    Weight Q = 1;
    std::vector<Weight> p_tilde;
    Weight d_tilde = 0;
    std::vector<std::vector<Weight>> q_pair;  // symmetric, zero diagonal
    std::vector<IndexPair> failing_pairs;     // sorted
    std::vector<std::vector<std::size_t>> I;  // I[i] = { j : {i,j} failing }
    int fixpoint_iterations = 0;              // substitution passes with Q > 1

    Weight qij(std::size_t i, std::size_t j) const { return q_pair[i][j]; }
    bool is_failing(std::size_t i, std::size_t j) const;
};

struct GcdProfile {
    std::vector<Weight> q;
    Weight Q = 1;
};

GcdProfile gcd_profile(const std::vector<Weight>& p);
GcdProfile gcd_profile(const WeightAssignment& w);

// Profile built from weights alone (no polynomial), used for property tests and CLI reports.
// Throws NonNormalInput when Q does not divide d.
WellFormProfile make_profile(const WeightAssignment& w);

struct WellFormed {
    Polynomial tilde;
    WellFormProfile profile;
};

// Substitutes x_i -> x_i^(1/q_i). Throws NonNormalInput (with the witness monomial) when some
// exponent of x_i is not divisible by q_i or q_i does not divide d.
WellFormed well_form(const Polynomial& poly, const WeightAssignment& w);

bool is_well_formed(const WellFormProfile& prof);

struct ConeReduction {
    std::size_t k = 0;               // eliminated variable
    std::vector<Weight> weights;     // p~_m / s_m for m != k, in variable order
    bool ambiguous = false;          // d~ equals several linear p~_k; the smallest k was used
};

// s_m: product of q_ij over failing pairs not containing m.
Weight cone_divisor(const WellFormProfile& prof, std::size_t m);

// When d~ = p~_k and x_k occurs linearly (as the monomial x_k alone) in g~, the reduced
// weights of E as a weighted projective space of one dimension less.
std::optional<ConeReduction> linear_cone_reduce(const Polynomial& tilde, const WellFormProfile& prof);

}  // namespace singwf

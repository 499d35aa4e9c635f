#pragma once

#include "singwf/different.hpp"
#include "singwf/polynomial.hpp"
#include "singwf/weights.hpp"
#include "singwf/wellform.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace singwf {

struct AnalysisOptions {
    std::optional<std::vector<Weight>> weights;  // skip inference
    std::optional<StdBoundary> boundary;         // extra Diff_E(B), Diff_{E/P}(B)
};

struct AnalysisReport {
    Polynomial input;
    std::vector<Term> input_terms;  // source order, for display
    WeightAssignment weights;
    WellFormProfile profile;
    Polynomial tilde;
    std::vector<Term> tilde_terms;  // tilde monomials in the order of input_terms
    BoundaryDivisor diff_E;
    BoundaryDivisor diff_over_wps;
    BoundaryDivisor D;
    StdBoundary Dhat;
    std::optional<StdBoundary> boundary;
    std::optional<BoundaryDivisor> diff_E_boundary;
    std::optional<BoundaryDivisor> diff_over_wps_boundary;
    std::optional<ConeReduction> cone;
    Discrepancy discrepancy;
    std::optional<ExceptionalHint> hint;
    bool adjunction_holds = false;

    const VarList& vars() const { return input.vars(); }
    bool well_formed() const { return profile.failing_pairs.empty(); }
};

AnalysisReport analyze(const Polynomial& poly, const AnalysisOptions& options = {});

// Parses with the given variables (guessed when absent) and keeps the source term order.
AnalysisReport analyze_text(std::string_view text, const std::optional<VarList>& vars = std::nullopt,
                            const AnalysisOptions& options = {});

}  // namespace singwf

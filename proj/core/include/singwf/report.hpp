#pragma once

#include "singwf/analysis.hpp"
#include "singwf/verify.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace singwf {

// "P(3,7,2,6)".
std::string wps_string(const std::vector<Weight>& w);

// "E: t^3+zx+tx^3+ty ⊂ P(3,7,2,6); Diff_E(0) = 1/2 Δ + 3/4 Γ2 + 4/5 Ω"
std::string summary_line(const AnalysisReport& rep);

// Summary line followed by the remaining report fields, one per line.
std::string report_to_text(const AnalysisReport& rep);

// Field order: input, vars, weights, q, Q, tilde, wellFormed, failingPairs, diffE, diffOverWps,
// D, Dhat, cone, discrepancy, exceptionalHint, fixpointIterations, adjunctionHolds, then
// boundary, diffEBoundary, diffOverWpsBoundary when a boundary was given.
// Rationals are "num/den" strings; i, j, k are 1-based.
std::string report_to_json(const AnalysisReport& rep);

std::string outcome_to_text(const VerifyOutcome& o);

// {"records":[...], "summary":{"total","pass","fail","skip"}}
std::string outcomes_to_json(const std::vector<VerifyOutcome>& outcomes, bool with_timing = false);

// Parses JSON and dumps it with the same layout report_to_json uses.
std::string canonical_json(std::string_view text);

}  // namespace singwf

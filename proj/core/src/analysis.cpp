#include "singwf/analysis.hpp"

#include "singwf/errors.hpp"
#include "singwf/parser.hpp"

#include <algorithm>

namespace singwf {

namespace {

AnalysisReport run(const Polynomial& poly, std::vector<Term> input_terms, const AnalysisOptions& options) {
    WeightAssignment w;
    try {
        w = options.weights ? explicit_weights(poly, *options.weights) : infer_weights(poly);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NonUniqueWeights || e.code() == ErrorCode::NoPositiveSolution)
            throw Error(e.code(), e.detail() + " (pass --weights to fix the weight vector)");
        throw;
    }

    WellFormed wf = well_form(poly, w);
    const WellFormProfile& prof = wf.profile;

    // m~_i = m_i * (p_i d~) / (p~_i d), whatever the number of substitution passes.
    std::vector<Term> tilde_terms;
    for (const auto& t : input_terms) {
        Term out{t.exponents, t.coeff};
        for (std::size_t i = 0; i < prof.n; ++i) {
            const Rational r = Rational(t.exponents[i]) * prof.p[i] * prof.d_tilde / (Rational(prof.p_tilde[i]) * prof.d);
            if (denominator(r) != 1) throw Error(ErrorCode::NonNormalInput, "exponent not divisible after substitution");
            out.exponents[i] = static_cast<Exponent>(numerator(r));
        }
        tilde_terms.push_back(std::move(out));
    }

    const StdBoundary zero = StdBoundary::zero(prof.n);
    AnalysisReport rep{
        .input = poly,
        .input_terms = std::move(input_terms),
        .weights = w,
        .profile = prof,
        .tilde = wf.tilde,
        .tilde_terms = std::move(tilde_terms),
        .diff_E = diff_on_E(prof, zero),
        .diff_over_wps = diff_over_wps(prof, zero),
        .D = build_D(prof),
        .Dhat = build_Dhat(prof),
        .boundary = options.boundary,
        .diff_E_boundary = std::nullopt,
        .diff_over_wps_boundary = std::nullopt,
        .cone = linear_cone_reduce(wf.tilde, prof),
        .discrepancy = discrepancy(w),
        .hint = exceptional_hint(prof, static_cast<int>(prof.n) - 1),
        .adjunction_holds = check_adjunction(prof),
    };
    if (options.boundary) {
        rep.diff_E_boundary = diff_on_E(prof, *options.boundary);
        rep.diff_over_wps_boundary = diff_over_wps(prof, *options.boundary);
    }
    return rep;
}

}  // namespace

AnalysisReport analyze(const Polynomial& poly, const AnalysisOptions& options) {
    return run(poly, poly.terms(), options);
}

AnalysisReport analyze_text(std::string_view text, const std::optional<VarList>& vars, const AnalysisOptions& options) {
    const VarList v = vars ? *vars : guess_vars(text);
    const Polynomial poly = parse_polynomial(text, v);

    // Source order, with like terms merged at their first occurrence.
    std::vector<Term> ordered;
    for (const auto& t : parse_terms(text, v)) {
        auto same = [&](const Term& o) { return o.exponents == t.exponents; };
        if (std::any_of(ordered.begin(), ordered.end(), same)) continue;
        auto it = std::find_if(poly.terms().begin(), poly.terms().end(), same);
        if (it != poly.terms().end()) ordered.push_back(*it);
    }
    return run(poly, std::move(ordered), options);
}

}  // namespace singwf

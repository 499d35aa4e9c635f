#include "singwf/report.hpp"

#include "singwf/parser.hpp"

#include <json.hpp>

namespace singwf {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kIndent = 2;

std::string var_name(const AnalysisReport& rep, std::size_t i) { return rep.vars()[i]; }

Json divisor_json(const BoundaryDivisor& div) {
    Json arr = Json::array();
    for (const auto& [s, c] : div.coefficients()) arr.push_back(Json{{"stratum", canonical_name(s)}, {"coeff", to_fraction_string(c)}});
    return arr;
}

Json boundary_json(const AnalysisReport& rep, const StdBoundary& b) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < b.c.size(); ++i) {
        if (b.c[i] != 0) arr.push_back(Json{{"var", var_name(rep, i)}, {"coeff", to_fraction_string(b.c[i])}});
    }
    return arr;
}

std::string join(const std::vector<Weight>& w) {
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(w[k]);
    }
    return s;
}

std::string ambient_boundary_string(const AnalysisReport& rep, const StdBoundary& b) {
    std::string s;
    for (std::size_t i = 0; i < b.c.size(); ++i) {
        if (b.c[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += to_display_string(b.c[i]) + " {" + var_name(rep, i) + "=0}";
    }
    return s.empty() ? "0" : s;
}

}  // namespace

std::string wps_string(const std::vector<Weight>& w) { return "P(" + join(w) + ")"; }

std::string summary_line(const AnalysisReport& rep) {
    return "E: " + render_compact(rep.tilde_terms, rep.vars()) + " ⊂ " + wps_string(rep.profile.p_tilde) +
           "; Diff_E(0) = " + to_display_string(rep.diff_E, rep.vars().size());
}

std::string report_to_text(const AnalysisReport& rep) {
    const auto& prof = rep.profile;
    const std::size_t n = rep.vars().size();
    std::string out = summary_line(rep) + "\n";
    out += "input: " + render(rep.input) + "\n";
    out += "weights: p=(" + join(rep.weights.p) + ") d=" + std::to_string(rep.weights.d) + "\n";
    out += "q=(" + join(prof.q) + ") Q=" + std::to_string(prof.Q) + "\n";
    out += "tilde: " + render(rep.tilde) + " ⊂ " + wps_string(prof.p_tilde) + ", degree " + std::to_string(prof.d_tilde) + "\n";
    if (prof.failing_pairs.empty()) {
        out += "well-formed: yes\n";
    } else {
        out += "well-formed: no; failing pairs:";
        for (const auto& pr : prof.failing_pairs)
            out += " {" + var_name(rep, pr.i) + "," + var_name(rep, pr.j) + "} q=" + std::to_string(prof.qij(pr.i, pr.j));
        out += "\n";
    }
    out += "Diff_E/P(0) = " + to_display_string(rep.diff_over_wps, n) + "\n";
    out += "D = " + to_display_string(rep.D, n) + "\n";
    out += "D^ = " + ambient_boundary_string(rep, rep.Dhat) + "\n";
    if (rep.boundary) {
        out += "B = " + ambient_boundary_string(rep, *rep.boundary) + "\n";
        out += "Diff_E(B) = " + to_display_string(*rep.diff_E_boundary, n) + "\n";
        out += "Diff_E/P(B) = " + to_display_string(*rep.diff_over_wps_boundary, n) + "\n";
    }
    if (rep.cone) {
        out += "cone: " + wps_string(rep.cone->weights) + " (eliminating " + var_name(rep, rep.cone->k) + ")";
        if (rep.cone->ambiguous) out += " [ambiguous: several linear variables]";
        out += "\n";
    } else {
        out += "cone: none\n";
    }
    out += "discrepancy: " + std::to_string(rep.discrepancy.a) + " (" + std::string(to_string(rep.discrepancy.tag)) + ")\n";
    if (rep.hint) {
        out += "exceptional hint: " + var_name(rep, rep.hint->k) + " (d = " + to_display_string(rep.hint->coefficient) +
               " >= " + to_display_string(rep.hint->threshold) + "); " + std::string(kExceptionalCaveat) + "\n";
    } else {
        out += "exceptional hint: none\n";
    }
    out += "adjunction: " + std::string(rep.adjunction_holds ? "holds" : "FAILS") + "\n";
    out += "fixpoint iterations: " + std::to_string(prof.fixpoint_iterations) + "\n";
    return out;
}

std::string report_to_json(const AnalysisReport& rep) {
    const auto& prof = rep.profile;
    Json j;
    j["input"] = render(rep.input);
    j["vars"] = rep.vars().names();
    j["weights"] = Json{{"p", rep.weights.p}, {"d", rep.weights.d}};
    j["q"] = prof.q;
    j["Q"] = prof.Q;
    j["tilde"] = Json{{"poly", render(rep.tilde)}, {"weights", prof.p_tilde}, {"degree", prof.d_tilde}};
    j["wellFormed"] = rep.well_formed();
    Json pairs = Json::array();
    for (const auto& pr : prof.failing_pairs) pairs.push_back(Json{{"i", pr.i + 1}, {"j", pr.j + 1}, {"q", prof.qij(pr.i, pr.j)}});
    j["failingPairs"] = pairs;
    j["diffE"] = divisor_json(rep.diff_E);
    j["diffOverWps"] = divisor_json(rep.diff_over_wps);
    j["D"] = divisor_json(rep.D);
    j["Dhat"] = boundary_json(rep, rep.Dhat);
    j["cone"] = rep.cone ? Json{{"k", rep.cone->k + 1}, {"weights", rep.cone->weights}} : Json(nullptr);
    j["discrepancy"] = Json{{"a", rep.discrepancy.a}, {"tag", std::string(to_string(rep.discrepancy.tag))}};
    j["exceptionalHint"] = rep.hint ? Json{{"var", var_name(rep, rep.hint->k)},
                                           {"threshold", to_fraction_string(rep.hint->threshold)},
                                           {"caveat", std::string(kExceptionalCaveat)}}
                                    : Json(nullptr);
    j["fixpointIterations"] = prof.fixpoint_iterations;
    j["adjunctionHolds"] = rep.adjunction_holds;
    if (rep.boundary) {
        j["boundary"] = boundary_json(rep, *rep.boundary);
        j["diffEBoundary"] = divisor_json(*rep.diff_E_boundary);
        j["diffOverWpsBoundary"] = divisor_json(*rep.diff_over_wps_boundary);
    }
    return j.dump(kIndent);
}

std::string outcome_to_text(const VerifyOutcome& o) {
    std::string out = std::string(to_string(o.status)) + " " + o.id;
    if (o.status == VerifyStatus::Skip) out += " (" + o.reason + ")";
    for (const auto& d : o.diffs) out += "\n    " + d.field + ": expected " + d.expected + ", computed " + d.computed;
    return out;
}

std::string outcomes_to_json(const std::vector<VerifyOutcome>& outcomes, bool with_timing) {
    Json recs = Json::array();
    std::size_t pass = 0, fail = 0, skip = 0;
    for (const auto& o : outcomes) {
        Json r;
        r["id"] = o.id;
        r["status"] = std::string(to_string(o.status));
        Json diffs = Json::array();
        for (const auto& d : o.diffs) diffs.push_back(Json{{"field", d.field}, {"expected", d.expected}, {"computed", d.computed}});
        r["diffs"] = diffs;
        if (o.status == VerifyStatus::Skip) r["reason"] = o.reason;
        if (with_timing) r["micros"] = o.elapsed.count();
        recs.push_back(r);
        (o.status == VerifyStatus::Pass ? pass : o.status == VerifyStatus::Fail ? fail : skip)++;
    }
    Json j;
    j["records"] = recs;
    j["summary"] = Json{{"total", outcomes.size()}, {"pass", pass}, {"fail", fail}, {"skip", skip}};
    return j.dump(kIndent);
}

std::string canonical_json(std::string_view text) { return Json::parse(text).dump(kIndent); }

}  // namespace singwf

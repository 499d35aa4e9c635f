#include "singwf/verify.hpp"

#include "singwf/analysis.hpp"
#include "singwf/errors.hpp"
#include "singwf/parser.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <set>
#include <thread>

namespace singwf {

namespace {

std::string join_weights(const std::vector<Weight>& w) {
    std::string s = "(";
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(w[k]);
    }
    return s + ")";
}

std::string support_string(const std::set<Monomial>& support, const VarList& vars) {
    std::vector<Monomial> ms(support.begin(), support.end());
    std::sort(ms.begin(), ms.end(), graded_lex_less);
    std::string s;
    for (const auto& m : ms) {
        if (!s.empty()) s += " + ";
        s += render_monomial(m, vars);
    }
    return s;
}

std::set<Monomial> support_set(const Polynomial& p) {
    const auto sup = p.support();
    return {sup.begin(), sup.end()};
}

}  // namespace

std::string_view to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::Pass: return "pass";
        case VerifyStatus::Fail: return "fail";
        case VerifyStatus::Skip: return "skip";
    }
    return "?";
}

VerifyOutcome verify_record(const TableRecord& rec) {
    const auto start = std::chrono::steady_clock::now();
    VerifyOutcome out;
    out.id = rec.id;
    auto finish = [&] {
        out.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
        out.status = out.diffs.empty() ? VerifyStatus::Pass : VerifyStatus::Fail;
        return out;
    };

    if (rec.skip) {
        out.status = VerifyStatus::Skip;
        out.reason = *rec.skip;
        return out;
    }

    std::optional<AnalysisReport> rep;
    try {
        rep = analyze(rec.poly);
    } catch (const Error& e) {
        out.diffs.push_back({"error", "analysis succeeds", e.what()});
        return finish();
    }
    const VarList& vars = rec.poly.vars();

    if (rec.expect_tilde_poly) {
        const auto want = support_set(*rec.expect_tilde_poly);
        const auto got = support_set(rep->tilde);
        if (want != got) out.diffs.push_back({"tilde_poly", support_string(want, vars), support_string(got, vars)});
    }

    if (!rec.expect_tilde_weights.empty() && rec.expect_tilde_weights != rep->profile.p_tilde)
        out.diffs.push_back({"tilde_weights", join_weights(rec.expect_tilde_weights), join_weights(rep->profile.p_tilde)});

    if (rec.cone == ConeExpectation::Present) {
        if (!rep->cone)
            out.diffs.push_back({"cone", "P" + join_weights(rec.expect_cone), "none"});
        else if (rep->cone->weights != rec.expect_cone)
            out.diffs.push_back({"cone", "P" + join_weights(rec.expect_cone), "P" + join_weights(rep->cone->weights)});
    } else if (rec.cone == ConeExpectation::Absent && rep->cone) {
        out.diffs.push_back({"cone", "none", "P" + join_weights(rep->cone->weights)});
    }

    std::set<StratumId> strata;
    for (const auto& [s, c] : rec.expect_diff.coefficients()) strata.insert(s);
    for (const auto& [s, c] : rep->diff_E.coefficients()) strata.insert(s);
    for (const auto& s : strata) {
        const Rational want = rec.expect_diff.coefficient(s);
        const Rational got = rep->diff_E.coefficient(s);
        if (want != got) out.diffs.push_back({"diff:" + canonical_name(s), to_fraction_string(want), to_fraction_string(got)});
    }

    // the tables list canonical singularities only; worked examples may be strictly lc
    if (rec.source.rfind("Table ", 0) == 0 && rep->discrepancy.a < 0)
        out.diffs.push_back({"discrepancy", ">= 0", std::to_string(rep->discrepancy.a)});

    return finish();
}

std::vector<VerifyOutcome> verify_all(const std::vector<TableRecord>& records, unsigned jobs, bool fail_fast) {
    const std::size_t n = records.size();
    std::vector<std::optional<VerifyOutcome>> slots(n);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};

    auto worker = [&] {
        for (;;) {
            if (fail_fast && stop.load()) return;
            const std::size_t k = next.fetch_add(1);
            if (k >= n) return;
            slots[k] = verify_record(records[k]);
            if (slots[k]->status == VerifyStatus::Fail) stop.store(true);
        }
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    }

    std::vector<VerifyOutcome> out;
    for (auto& s : slots) {
        if (s) out.push_back(std::move(*s));
    }
    return out;
}

}  // namespace singwf

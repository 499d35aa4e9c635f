#include "singwf/wellform.hpp"

#include "singwf/errors.hpp"
#include "singwf/parser.hpp"

#include <algorithm>
#include <numeric>

namespace singwf {

namespace {

Weight gcd_omitting(const std::vector<Weight>& p, std::size_t skip_a, std::size_t skip_b) {
    Weight g = 0;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k == skip_a || k == skip_b) continue;
        g = std::gcd(g, p[k]);
    }
    return g;
}

void fill_pairs(WellFormProfile& prof) {
    const std::size_t n = prof.n;
    prof.q_pair.assign(n, std::vector<Weight>(n, 0));
    prof.failing_pairs.clear();
    prof.I.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // With two variables there is nothing left; the empty gcd is 1 by convention.
            Weight g = n > 2 ? gcd_omitting(prof.p_tilde, i, j) : 1;
            prof.q_pair[i][j] = prof.q_pair[j][i] = g;
            if (prof.d_tilde % g != 0) {
                prof.failing_pairs.push_back({i, j});
                prof.I[i].push_back(j);
                prof.I[j].push_back(i);
            }
        }
    }
    for (auto& s : prof.I) std::sort(s.begin(), s.end());
}

// One pass of p -> p~; returns false when all q_i are already 1.
bool substitute_once(std::vector<Weight>& p, Weight& d, std::vector<Weight>& q_total, Weight& Q_total,
                     std::vector<Monomial>* support, const VarList* vars) {
    const GcdProfile g = gcd_profile(p);
    if (g.Q == 1) return false;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (g.q[i] == 1) continue;
        // Checked before the degree: q_i | m_i for every monomial forces q_i | d, so this names a witness.
        if (support) {
            for (auto& m : *support) {
                if (m[i] % g.q[i] != 0)
                    throw Error(ErrorCode::NonNormalInput,
                                "exponent of " + (*vars)[i] + " in " + render_monomial(m, *vars) +
                                    " is not divisible by q = " + std::to_string(g.q[i]));
            }
        }
        if (d % g.q[i] != 0)
            throw Error(ErrorCode::NonNormalInput, "q_" + std::to_string(i + 1) + " = " + std::to_string(g.q[i]) +
                                                       " does not divide the degree " + std::to_string(d));
    }
    if (d % g.Q != 0)
        throw Error(ErrorCode::NonNormalInput,
                    "Q = " + std::to_string(g.Q) + " does not divide the degree " + std::to_string(d));
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Weight others = g.Q / g.q[i];  // product of the q_j, j != i; divides p_i for primitive p
        if (p[i] % others != 0) throw Error(ErrorCode::InvalidWeights, "weight vector is not primitive");
        p[i] /= others;
        q_total[i] *= g.q[i];
        if (support) {
            for (auto& m : *support) m[i] /= static_cast<Exponent>(g.q[i]);
        }
    }
    d /= g.Q;
    Q_total *= g.Q;
    return true;
}

WellFormProfile run_profile(const WeightAssignment& w, std::vector<Monomial>* support, const VarList* vars) {
    WellFormProfile prof;
    prof.n = w.p.size();
    prof.p = w.p;
    prof.d = w.d;
    prof.q.assign(prof.n, 1);
    prof.p_tilde = w.p;
    prof.d_tilde = w.d;
    // p~ stays well-formed after one pass for every primitive p; the loop only guards that claim.
    while (substitute_once(prof.p_tilde, prof.d_tilde, prof.q, prof.Q, support, vars)) {
        ++prof.fixpoint_iterations;
        if (prof.fixpoint_iterations > 64) throw Error(ErrorCode::NonNormalInput, "well-forming did not converge");
    }
    fill_pairs(prof);
    return prof;
}

}  // namespace

bool WellFormProfile::is_failing(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    return std::binary_search(failing_pairs.begin(), failing_pairs.end(), IndexPair{i, j});
}

GcdProfile gcd_profile(const std::vector<Weight>& p) {
    GcdProfile g;
    g.q.resize(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        g.q[i] = gcd_omitting(p, i, i);
        g.Q *= g.q[i];
    }
    return g;
}

GcdProfile gcd_profile(const WeightAssignment& w) { return gcd_profile(w.p); }

WellFormProfile make_profile(const WeightAssignment& w) { return run_profile(w, nullptr, nullptr); }

WellFormed well_form(const Polynomial& poly, const WeightAssignment& w) {
    if (w.p.size() != poly.nvars()) throw Error(ErrorCode::InvalidWeights, "weight vector length mismatch");
    std::vector<Monomial> support = poly.support();
    WellFormProfile prof = run_profile(w, &support, &poly.vars());

    std::vector<Term> terms;
    terms.reserve(poly.size());
    for (std::size_t k = 0; k < poly.size(); ++k) terms.push_back(Term{support[k], poly.terms()[k].coeff});
    Polynomial tilde = normalize(poly.vars(), std::move(terms));
    return WellFormed{std::move(tilde), std::move(prof)};
}

bool is_well_formed(const WellFormProfile& prof) { return prof.failing_pairs.empty(); }

Weight cone_divisor(const WellFormProfile& prof, std::size_t m) {
    Weight s = 1;
    for (const auto& pr : prof.failing_pairs) {
        if (pr.i == m || pr.j == m) continue;
        s *= prof.q_pair[pr.i][pr.j];
    }
    return s;
}

std::optional<ConeReduction> linear_cone_reduce(const Polynomial& tilde, const WellFormProfile& prof) {
    std::vector<std::size_t> candidates;
    for (std::size_t k = 0; k < prof.n; ++k) {
        if (prof.p_tilde[k] != prof.d_tilde) continue;
        Monomial linear(prof.n, 0);
        linear[k] = 1;
        const bool present = std::any_of(tilde.terms().begin(), tilde.terms().end(),
                                         [&](const Term& t) { return t.exponents == linear; });
        if (present) candidates.push_back(k);
    }
    if (candidates.empty()) return std::nullopt;

    ConeReduction cone;
    cone.k = candidates.front();
    cone.ambiguous = candidates.size() > 1;
    for (std::size_t m = 0; m < prof.n; ++m) {
        if (m == cone.k) continue;
        const Weight s = cone_divisor(prof, m);
        if (prof.p_tilde[m] % s != 0)
            throw Error(ErrorCode::InexactConeDivision, "p~_" + std::to_string(m + 1) + " = " +
                                                            std::to_string(prof.p_tilde[m]) + " is not divisible by s = " +
                                                            std::to_string(s));
        cone.weights.push_back(prof.p_tilde[m] / s);
    }
    return cone;
}

}  // namespace singwf

#include "singwf/weights.hpp"

#include "singwf/errors.hpp"
#include "singwf/parser.hpp"

#include <numeric>

namespace singwf {

Weight weighted_degree(const Monomial& m, const std::vector<Weight>& p) {
    Weight d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += p[i] * m[i];
    return d;
}

Weight quasi_degree(const Polynomial& poly, const std::vector<Weight>& p) {
    if (p.size() != poly.nvars())
        throw Error(ErrorCode::InvalidWeights, "expected " + std::to_string(poly.nvars()) + " weights, got " +
                                                   std::to_string(p.size()));
    for (Weight w : p) {
        if (w <= 0) throw Error(ErrorCode::InvalidWeights, "weights must be positive integers");
    }
    const Monomial& first = poly.terms().front().exponents;
    const Weight d = weighted_degree(first, p);
    for (const auto& t : poly.terms()) {
        const Weight e = weighted_degree(t.exponents, p);
        if (e != d) {
            throw Error(ErrorCode::NotQuasihomogeneous,
                        render_monomial(first, poly.vars()) + " has degree " + std::to_string(d) + " but " +
                            render_monomial(t.exponents, poly.vars()) + " has degree " + std::to_string(e));
        }
    }
    return d;
}

WeightAssignment explicit_weights(const Polynomial& poly, std::vector<Weight> p) {
    Weight d = quasi_degree(poly, p);
    Weight g = 0;
    for (Weight w : p) g = std::gcd(g, w);
    for (Weight& w : p) w /= g;
    return WeightAssignment{std::move(p), d / g};
}

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t sel = row;
        while (sel < a.size() && a[sel][col] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[sel], a[row]);
        const Rational lead = a[row][col];
        for (auto& v : a[row]) v /= lead;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            const Rational f = a[r][col];
            for (std::size_t c = 0; c < cols; ++c) a[r][c] -= f * a[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::string format_basis(const std::vector<std::vector<Rational>>& basis, const VarList& vars) {
    std::string s;
    for (const auto& v : basis) {
        s += "\n  (";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += (i < vars.size() ? vars[i] : std::string("d")) + "=" + to_display_string(v[i]);
        }
        s += ")";
    }
    return s;
}

}  // namespace

std::vector<std::vector<Rational>> weight_solution_basis(const Polynomial& poly) {
    const std::size_t n = poly.nvars();
    const std::size_t cols = n + 1;
    Matrix a;
    for (const auto& t : poly.terms()) {
        std::vector<Rational> row(cols);
        for (std::size_t i = 0; i < n; ++i) row[i] = t.exponents[i];
        row[n] = -1;
        a.push_back(std::move(row));
    }
    const auto pivots = rref(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

WeightAssignment infer_weights(const Polynomial& poly) {
    const std::size_t n = poly.nvars();
    auto basis = weight_solution_basis(poly);
    if (basis.empty()) throw Error(ErrorCode::NoPositiveSolution, "the weight system has only the zero solution");
    if (basis.size() > 1) {
        throw Error(ErrorCode::NonUniqueWeights,
                    "solution space has dimension " + std::to_string(basis.size()) +
                        "; supply weights explicitly. Basis (p..., d):" + format_basis(basis, poly.vars()));
    }
    std::vector<Rational> v = basis.front();
    if (v[n] < 0) {
        for (auto& x : v) x = -x;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] <= 0)
            throw Error(ErrorCode::NoPositiveSolution,
                        "the unique weight ray is not positive in " + poly.vars()[i] + format_basis({v}, poly.vars()));
    }
    if (v[n] == 0) throw Error(ErrorCode::NoPositiveSolution, "the weight ray has degree zero");

    BigInt lcm = 1;
    for (const auto& x : v) lcm = boost::multiprecision::lcm(lcm, denominator(x));
    std::vector<BigInt> ints;
    for (const auto& x : v) ints.push_back(numerator(x) * (lcm / denominator(x)));
    BigInt g = 0;
    for (std::size_t i = 0; i < n; ++i) g = boost::multiprecision::gcd(g, ints[i]);

    WeightAssignment w;
    for (std::size_t i = 0; i < n; ++i) {
        const BigInt pi = ints[i] / g;
        if (pi > BigInt(std::numeric_limits<Weight>::max() / 1024))
            throw Error(ErrorCode::InvalidWeights, "weight out of range");
        w.p.push_back(static_cast<Weight>(pi));
    }
    w.d = quasi_degree(poly, w.p);
    return w;
}

std::string_view to_string(DiscrepancyTag tag) {
    switch (tag) {
        case DiscrepancyTag::CanonicalCompatible: return "canonical-compatible";
        case DiscrepancyTag::StrictlyLcCandidate: return "strictly-lc-candidate";
        case DiscrepancyTag::Neither: return "neither";
    }
    return "neither";
}

Discrepancy discrepancy(const WeightAssignment& w) {
    Discrepancy out;
    out.a = std::accumulate(w.p.begin(), w.p.end(), Weight{0}) - w.d - 1;
    if (out.a >= 0)
        out.tag = DiscrepancyTag::CanonicalCompatible;
    else if (out.a == -1)
        out.tag = DiscrepancyTag::StrictlyLcCandidate;
    return out;
}

}  // namespace singwf

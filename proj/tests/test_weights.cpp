#include "oracles.hpp"

#include "singwf/errors.hpp"
#include "singwf/parser.hpp"
#include "singwf/weights.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace singwf;

namespace {

Polynomial P(std::string_view s) { return parse_polynomial(s, guess_vars(s)); }

std::vector<oracle::Exps> support_of(const Polynomial& p) {
    std::vector<oracle::Exps> out;
    for (const auto& m : p.support()) out.emplace_back(m.begin(), m.end());
    return out;
}

}  // namespace

TEST(QuasiDegree, WorkedExamples) {
    EXPECT_EQ(quasi_degree(P("t^3+z^2x+x^4+xy^5"), {40, 45, 30, 18}), 120);
    EXPECT_EQ(quasi_degree(P("t^3+z^2x+tx^3+ty^5"), {30, 35, 20, 12}), 90);
}

TEST(QuasiDegree, ReportsOffendingMonomials) {
    const VarList v({"t", "z"});
    try {
        quasi_degree(parse_polynomial("t^2+z^2", v), {1, 2});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotQuasihomogeneous);
        const std::string msg = e.what();
        EXPECT_NE(msg.find("t^2"), std::string::npos);
        EXPECT_NE(msg.find("z^2"), std::string::npos);
    }
}

TEST(QuasiDegree, RejectsBadVectors) {
    EXPECT_THROW(quasi_degree(P("t^2+z^3+x^5+y^7"), {1, 2, 3}), Error);
    EXPECT_THROW(quasi_degree(P("t^2+z^3+x^5+y^7"), {0, 2, 3, 4}), Error);
}

TEST(InferWeights, WorkedExamples) {
    EXPECT_EQ(infer_weights(P("t^3+z^2x+x^4+xy^5")), (WeightAssignment{{40, 45, 30, 18}, 120}));
    EXPECT_EQ(infer_weights(P("x1^2+x2^2x3+x3^4")), (WeightAssignment{{4, 3, 2}, 8}));
    EXPECT_EQ(infer_weights(P("t^2+z^2+x^2+y^2")), (WeightAssignment{{1, 1, 1, 1}, 2}));
}

TEST(InferWeights, UnderdeterminedIsNonUnique) {
    try {
        infer_weights(P("t^2+z^3"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonUniqueWeights);
        EXPECT_NE(std::string(e.what()).find("Basis"), std::string::npos);
    }
}

TEST(InferWeights, NoPositiveRay) {
    const VarList v({"t", "z"});
    // t^2 = tz forces p_t = p_z; t^3 then disagrees unless d = 0.
    EXPECT_THROW(infer_weights(parse_polynomial("t^2+tz+t^3", v)), Error);
    try {
        infer_weights(parse_polynomial("t^2+tz+t^3", v));
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NoPositiveSolution);
    }
}

TEST(InferWeights, MatchesBruteForceOracle) {
    for (const char* s : {"t^3+z^2x+x^4+xy^5", "t^3+z^2x+tx^3+ty^5", "x1^2+x2^2x3+x3^4", "x1^2+x2^3+x3^3x2",
                          "t^2+z^3+zx^5+zy^15", "t^2x+z^3x+zx^2y+atz^2y+bz^2y^3+cxy^4", "t^2+z^3+zx^7+zy^9"}) {
        const Polynomial p = P(s);
        const auto w = infer_weights(p);
        const auto o = oracle::brute_force_weights(support_of(p));
        if (*std::max_element(w.p.begin(), w.p.end()) > 200) {
            EXPECT_FALSE(o && o->p == w.p) << s;
            continue;
        }
        ASSERT_TRUE(o) << s;
        EXPECT_EQ(o->p, w.p) << s;
        EXPECT_EQ(o->d, w.d) << s;
    }
}

TEST(InferWeights, PermutingTermsDoesNotMatter) {
    std::vector<std::string> terms = {"t^3", "z^2x", "tx^3", "ty^5"};
    const auto ref = infer_weights(P("t^3+z^2x+tx^3+ty^5"));
    std::sort(terms.begin(), terms.end());
    do {
        std::string s;
        for (const auto& t : terms) s += (s.empty() ? "" : "+") + t;
        EXPECT_EQ(infer_weights(P(s)), ref) << s;
    } while (std::next_permutation(terms.begin(), terms.end()));
}

TEST(InferWeights, ResultIsPrimitiveAndConsistent) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> w(1, 30);
    for (int trial = 0; trial < 200; ++trial) {
        // x_i^{a_i} diagonal polynomials: p_i = L / a_i with L the lcm.
        std::vector<int> a(4);
        for (auto& v : a) v = 1 + w(rng) % 9;
        std::string s = "t^" + std::to_string(a[0]) + "+z^" + std::to_string(a[1]) + "+x^" + std::to_string(a[2]) +
                        "+y^" + std::to_string(a[3]);
        const auto res = infer_weights(P(s));
        std::int64_t g = 0;
        for (auto v : res.p) g = std::gcd(g, v);
        EXPECT_EQ(g, 1);
        EXPECT_EQ(quasi_degree(P(s), res.p), res.d);
    }
}

TEST(Discrepancy, Examples) {
    EXPECT_EQ(discrepancy({{30, 35, 20, 12}, 90}).a, 6);
    EXPECT_EQ(discrepancy({{30, 35, 20, 12}, 90}).tag, DiscrepancyTag::CanonicalCompatible);
    EXPECT_EQ(discrepancy({{40, 45, 30, 18}, 120}).a, 12);
    const auto k3 = discrepancy({{1, 1, 1, 1}, 4});
    EXPECT_EQ(k3.a, -1);
    EXPECT_EQ(k3.tag, DiscrepancyTag::StrictlyLcCandidate);
    EXPECT_EQ(discrepancy({{1, 1, 1}, 3}).a, -1);
    EXPECT_EQ(discrepancy({{1, 1, 1}, 5}).tag, DiscrepancyTag::Neither);
    EXPECT_EQ(to_string(DiscrepancyTag::StrictlyLcCandidate), "strictly-lc-candidate");
}

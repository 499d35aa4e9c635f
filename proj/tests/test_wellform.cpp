#include "oracles.hpp"

#include "singwf/errors.hpp"
#include "singwf/parser.hpp"
#include "singwf/wellform.hpp"

#include <gtest/gtest.h>

using namespace singwf;

namespace {

Polynomial P(std::string_view s) { return parse_polynomial(s, guess_vars(s)); }

WellFormed WF(std::string_view s) {
    const Polynomial p = P(s);
    return well_form(p, infer_weights(p));
}

}  // namespace

TEST(GcdProfile, Examples) {
    auto g = gcd_profile(std::vector<Weight>{40, 45, 30, 18});
    EXPECT_EQ(g.q, (std::vector<Weight>{3, 2, 1, 5}));
    EXPECT_EQ(g.Q, 30);
    g = gcd_profile(std::vector<Weight>{1, 1, 1, 1});
    EXPECT_EQ(g.Q, 1);
    g = gcd_profile(std::vector<Weight>{6, 4, 5, 3});
    EXPECT_EQ(g.q, (std::vector<Weight>{1, 1, 1, 1}));
}

TEST(WellForm, FortyFortyFive) {
    const auto wf = WF("t^3+z^2x+x^4+xy^5");
    EXPECT_EQ(wf.tilde, P("t+zx+x^4+xy"));
    EXPECT_EQ(wf.profile.p_tilde, (std::vector<Weight>{4, 3, 1, 3}));
    EXPECT_EQ(wf.profile.d_tilde, 4);
    EXPECT_FALSE(is_well_formed(wf.profile));
    ASSERT_EQ(wf.profile.failing_pairs.size(), 1u);
    EXPECT_EQ(wf.profile.failing_pairs[0], (IndexPair{0, 2}));
    EXPECT_EQ(wf.profile.qij(0, 2), 3);
}

TEST(WellForm, ThirtyThirtyFive) {
    const auto wf = WF("t^3+z^2x+tx^3+ty^5");
    EXPECT_EQ(wf.tilde, P("t^3+zx+tx^3+ty"));
    EXPECT_EQ(wf.profile.p_tilde, (std::vector<Weight>{3, 7, 2, 6}));
    EXPECT_EQ(wf.profile.d_tilde, 9);
    EXPECT_EQ(wf.profile.fixpoint_iterations, 1);
}

TEST(WellForm, E7) {
    const auto wf = WF("x1^2+x2^3+x3^3x2");
    EXPECT_EQ(wf.tilde, P("x1+x2^3+x3x2"));
    EXPECT_EQ(wf.profile.p_tilde, (std::vector<Weight>{3, 1, 2}));
    EXPECT_EQ(wf.profile.d_tilde, 3);
}

TEST(WellForm, IdentityWhenAllQAreOne) {
    const Polynomial p = P("t^2x+z^3x+zx^2y+atz^2y+bz^2y^3+cxy^4");
    const auto w = infer_weights(p);
    EXPECT_EQ(w.p, (std::vector<Weight>{6, 4, 5, 3}));
    const auto wf = well_form(p, w);
    EXPECT_EQ(wf.tilde, p);
    EXPECT_EQ(wf.profile.p_tilde, w.p);
    EXPECT_EQ(wf.profile.d_tilde, w.d);
    EXPECT_EQ(wf.profile.fixpoint_iterations, 0);
    // Failing pairs {z,x} (q=3) and {x,y} (q=2).
    ASSERT_EQ(wf.profile.failing_pairs.size(), 2u);
    EXPECT_EQ(wf.profile.failing_pairs[0], (IndexPair{1, 2}));
    EXPECT_EQ(wf.profile.qij(1, 2), 3);
    EXPECT_EQ(wf.profile.failing_pairs[1], (IndexPair{2, 3}));
    EXPECT_EQ(wf.profile.qij(2, 3), 2);
}

TEST(WellForm, WellFormedAllOnes) {
    const auto prof = make_profile({{1, 1, 1, 1}, 7});
    EXPECT_TRUE(is_well_formed(prof));
}

TEST(WellForm, NonNormalInputCarriesWitness) {
    // p = (2,3,3), d = 8: q_1 = 3 does not divide d and x1 divides every monomial.
    const Polynomial p = P("x1^4+x1x2^2+x1x3^2");
    const auto w = infer_weights(p);
    EXPECT_EQ(w, (WeightAssignment{{2, 3, 3}, 8}));
    try {
        well_form(p, w);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NonNormalInput);
        EXPECT_NE(std::string(e.what()).find("x1"), std::string::npos);
    }
}

TEST(WellForm, InvariantsAgainstOracle) {
    for (const char* s : {"t^3+z^2x+x^4+xy^5", "t^3+z^2x+tx^3+ty^5", "t^2+z^3+zx^5+zy^15", "t^2+z^3+zx^7+zy^9",
                          "t^2+z^3x+zx^4+xy^7", "x1^2+x2^3+x3^3x2"}) {
        const Polynomial p = P(s);
        const auto w = infer_weights(p);
        const auto wf = well_form(p, w);
        const auto o = oracle::profile(std::vector<oracle::Int>(w.p.begin(), w.p.end()), w.d);
        EXPECT_EQ(std::vector<oracle::Int>(wf.profile.q.begin(), wf.profile.q.end()), o.q) << s;
        EXPECT_EQ(wf.profile.Q, o.Q) << s;
        EXPECT_EQ(std::vector<oracle::Int>(wf.profile.p_tilde.begin(), wf.profile.p_tilde.end()), o.pt) << s;
        EXPECT_EQ(wf.profile.d_tilde * wf.profile.Q, w.d) << s;
        for (std::size_t i = 0; i < w.p.size(); ++i) EXPECT_EQ(wf.profile.p_tilde[i] * wf.profile.Q, w.p[i] * wf.profile.q[i]);
        EXPECT_EQ(wf.profile.failing_pairs.size(), o.failing.size()) << s;
        for (const auto& pr : wf.profile.failing_pairs) {
            EXPECT_TRUE(o.failing.count({pr.i, pr.j})) << s;
            EXPECT_TRUE(split_check(wf.tilde, pr.i, pr.j)) << s;
            EXPECT_EQ(std::min(wf.profile.q[pr.i], wf.profile.q[pr.j]), 1) << s;
        }
        EXPECT_EQ(gcd_profile(wf.profile.p_tilde).Q, 1) << s;
        for (const auto& m : wf.tilde.support()) EXPECT_EQ(weighted_degree(m, wf.profile.p_tilde), wf.profile.d_tilde);
    }
}

TEST(LinearCone, Examples) {
    const auto c1 = linear_cone_reduce(P("t+z^3+zx^5+zy^5"), make_profile({{15, 5, 2, 2}, 15}));
    ASSERT_TRUE(c1);
    EXPECT_EQ(c1->k, 0u);
    EXPECT_EQ(c1->weights, (std::vector<Weight>{5, 1, 1}));

    const auto wf = WF("t^3+z^2x+x^4+xy^5");
    const auto c2 = linear_cone_reduce(wf.tilde, wf.profile);
    ASSERT_TRUE(c2);
    EXPECT_EQ(c2->weights, (std::vector<Weight>{1, 1, 1}));

    const auto wf3 = WF("t^3+z^2x+tx^3+ty^5");
    EXPECT_FALSE(linear_cone_reduce(wf3.tilde, wf3.profile));
}

TEST(LinearCone, NeedsTheLinearMonomial) {
    // d~ = p~_t but t does not appear alone.
    const VarList v = VarList::tzxy();
    const Polynomial g = parse_polynomial("z^2+x^2+y^2+z x", v);
    EXPECT_FALSE(linear_cone_reduce(g, make_profile({{2, 1, 1, 1}, 2})));
}

TEST(LinearCone, CoDivisors) {
    const auto prof = make_profile({{15, 5, 2, 2}, 15});
    // failing pairs: {t,z} with q=2 (gcd(2,2)=2, 15 odd).
    EXPECT_EQ(cone_divisor(prof, 2), 2);
    EXPECT_EQ(cone_divisor(prof, 0), 1);
}

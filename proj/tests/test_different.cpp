#include "oracles.hpp"
#include "population.hpp"

#include "singwf/different.hpp"
#include "singwf/errors.hpp"
#include "singwf/parser.hpp"

#include <gtest/gtest.h>

using namespace singwf;

namespace {

WellFormProfile profile_of(std::string_view s) {
    const Polynomial p = parse_polynomial(s, guess_vars(s));
    return well_form(p, infer_weights(p)).profile;
}

BoundaryDivisor named(std::size_t n, std::initializer_list<std::pair<const char*, Rational>> items) {
    BoundaryDivisor d;
    for (const auto& [name, c] : items) d.add(parse_stratum_name(name, n), c);
    return d;
}

Rational R(int a, int b) { return Rational(a, b); }

}  // namespace

TEST(StratumNames, AliasesAndCanonicalForms) {
    EXPECT_EQ(parse_stratum_name("G", 4), StratumId::prime(0));
    EXPECT_EQ(parse_stratum_name("Ω", 4), StratumId::prime(3));
    EXPECT_EQ(parse_stratum_name("Γ₂", 4), StratumId::pair(0, 1));
    EXPECT_EQ(parse_stratum_name("Δ3", 4), StratumId::pair(1, 2));
    EXPECT_EQ(parse_stratum_name("U4", 4), StratumId::pair(2, 3));
    EXPECT_EQ(parse_stratum_name("C13", 3), StratumId::pair(0, 2));
    EXPECT_EQ(parse_stratum_name("C2p", 3), StratumId::prime(1));
    EXPECT_THROW(parse_stratum_name("G", 3), Error);
    EXPECT_THROW(parse_stratum_name("D2", 4), Error);
    EXPECT_THROW(parse_stratum_name("C15", 4), Error);
    EXPECT_THROW(parse_stratum_name("Z", 4), Error);
    for (std::size_t i = 0; i < 4; ++i) {
        EXPECT_EQ(parse_stratum_name(display_name(StratumId::prime(i), 4), 4), StratumId::prime(i));
        for (std::size_t j = i + 1; j < 4; ++j)
            EXPECT_EQ(parse_stratum_name(canonical_name(StratumId::pair(i, j)), 4), StratumId::pair(i, j));
    }
    EXPECT_EQ(display_name(StratumId::pair(2, 3), 4), "Υ4");
    EXPECT_EQ(display_name(StratumId::prime(0), 3), "C1'");
}

TEST(BoundaryDivisor, AddsAndDropsZeros) {
    BoundaryDivisor d;
    d.add(StratumId::prime(1), R(1, 4));
    d.add(StratumId::prime(1), R(1, 4));
    EXPECT_EQ(d.coefficient(StratumId::prime(1)), R(1, 2));
    d.add(StratumId::prime(1), R(-1, 2));
    EXPECT_TRUE(d.is_zero());
    EXPECT_EQ(to_display_string(d, 4), "0");
}

TEST(DiffOnE, FortyFortyFive) {
    const auto prof = profile_of("t^3+z^2x+x^4+xy^5");
    EXPECT_EQ(diff_on_E(prof, StdBoundary::zero(4)),
              named(4, {{"G", R(2, 3)}, {"D", R(1, 2)}, {"O", R(4, 5)}, {"G3", R(8, 9)}}));
}

TEST(DiffOnE, ThirtyThirtyFive) {
    const auto prof = profile_of("t^3+z^2x+tx^3+ty^5");
    EXPECT_EQ(diff_on_E(prof, StdBoundary::zero(4)), named(4, {{"D", R(1, 2)}, {"O", R(4, 5)}, {"G2", R(3, 4)}}));
}

TEST(DiffOnE, SixFourFiveThree) {
    const auto prof = profile_of("t^2x+z^3x+zx^2y+atz^2y+bz^2y^3+cxy^4");
    EXPECT_EQ(diff_on_E(prof, StdBoundary::zero(4)), named(4, {{"D3", R(2, 3)}, {"U4", R(1, 2)}}));
}

TEST(DiffOnE, TrivialProfileGivesZero) {
    EXPECT_TRUE(diff_on_E(make_profile({{1, 1, 1, 1}, 4}), StdBoundary::zero(4)).is_zero());
}

TEST(DiffOnE, E7) {
    const auto prof = profile_of("x1^2+x2^3+x3^3x2");
    EXPECT_EQ(diff_on_E(prof, StdBoundary::zero(3)), named(3, {{"C1p", R(1, 2)}, {"C3p", R(2, 3)}, {"C12", R(3, 4)}}));
}

TEST(DiffOnE, RemarkViolation) {
    // {x,y} fails for p = (2,2,1,1), d = 3; the q vector is then forced so that both ends exceed 1.
    WellFormProfile prof = make_profile({{2, 2, 1, 1}, 3});
    ASSERT_EQ(prof.failing_pairs.size(), 1u);
    ASSERT_EQ(prof.failing_pairs[0], (IndexPair{2, 3}));
    prof.q = {1, 1, 2, 3};
    try {
        diff_on_E(prof, StdBoundary::zero(4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::RemarkViolation);
    }
}

TEST(DiffOverWps, WithBoundary) {
    const auto prof = profile_of("t^3+z^2x+tx^3+ty^5");
    StdBoundary b = StdBoundary::zero(4);
    b.c[1] = R(3, 5);
    b.c[3] = R(4, 5);
    EXPECT_EQ(diff_over_wps(prof, b), named(4, {{"D", R(3, 5)}, {"O", R(4, 5)}, {"G2", R(4, 5)}}));
}

TEST(DiffOverWps, D5) {
    const auto prof = profile_of("x1^2+x2^2x3+x3^4");
    EXPECT_EQ(diff_over_wps(prof, StdBoundary::zero(3)), named(3, {{"C13", R(2, 3)}}));
}

TEST(DiffOverWps, InvalidBoundary) {
    const auto prof = profile_of("t^3+z^2x+tx^3+ty^5");
    StdBoundary b = StdBoundary::zero(4);
    b.c[0] = R(3, 4);
    b.c[1] = R(1, 2);  // t,z fail together: 3/4 + 1/2 > 1
    EXPECT_THROW(diff_over_wps(prof, b), Error);
    b = StdBoundary::zero(4);
    b.c[2] = R(3, 2);
    EXPECT_THROW(diff_over_wps(prof, b), Error);
}

TEST(BuildD, Examples) {
    const auto e7 = profile_of("x1^2+x2^3+x3^3x2");
    EXPECT_EQ(build_D(e7), named(3, {{"C1p", R(1, 2)}, {"C3p", R(2, 3)}, {"C12", R(1, 2)}}));
    for (int n = 2; n <= 6; ++n) {
        const std::string s = "x1^2+x2^2x3+x3^" + std::to_string(2 * n);
        const auto prof = profile_of(s);
        EXPECT_EQ(build_D(prof), named(3, {{"C2p", R(1, 2)}})) << s;
    }
    const auto triv = make_profile({{1, 1, 1, 1}, 4});
    EXPECT_TRUE(build_D(triv).is_zero());
    for (const auto& c : build_Dhat(triv).c) EXPECT_EQ(c, 0);
}

TEST(Adjunction, Examples) {
    EXPECT_TRUE(check_adjunction(profile_of("t^3+z^2x+tx^3+ty^5")));
    EXPECT_TRUE(check_adjunction(profile_of("x1^2+x2^3+x3^3x2")));
    EXPECT_TRUE(check_adjunction(make_profile({{1, 1, 1, 1}, 4})));
}

TEST(ExceptionalHint, Examples) {
    const auto h = exceptional_hint(profile_of("t^2+z^3+zx^7+zy^9"), 3);
    ASSERT_TRUE(h);
    EXPECT_EQ(h->k, 2u);
    EXPECT_EQ(h->coefficient, R(6, 7));
    EXPECT_FALSE(exceptional_hint(profile_of("t^3+z^2x+tx^3+ty^5"), 3));
    EXPECT_FALSE(exceptional_hint(make_profile({{1, 1, 1, 1}, 4}), 3));
    EXPECT_NE(kExceptionalCaveat.find("not lc for any hyperplane section"), std::string_view::npos);
}

TEST(Properties, RandomPopulation) {
    const auto pop = testpop::remark_population(1000);
    ASSERT_EQ(pop.size(), 1000u);
    std::size_t nontrivial = 0;
    for (const auto& w : pop) {
        const auto prof = make_profile(w);
        const std::size_t n = prof.n;
        const auto zero = StdBoundary::zero(n);
        ASSERT_TRUE(check_adjunction(prof));
        EXPECT_EQ(diff_over_wps(prof, zero).is_zero(), is_well_formed(prof));
        if (!prof.failing_pairs.empty()) ++nontrivial;

        // Closed forms against the oracle.
        const auto o = oracle::profile(std::vector<oracle::Int>(w.p.begin(), w.p.end()), w.d);
        const auto od = oracle::diff_E(o);
        const auto got = diff_on_E(prof, zero);
        ASSERT_EQ(got.coefficients().size(), od.size());
        for (const auto& [s, c] : got.coefficients()) {
            const auto key = s.kind == StratumId::Kind::CoordPrime ? std::make_pair(s.i, SIZE_MAX) : std::make_pair(s.i, s.j);
            ASSERT_TRUE(od.count(key));
            EXPECT_EQ(c, Rational(od.at(key).numerator(), od.at(key).denominator()));
            EXPECT_GE(c, 0);
            EXPECT_LT(c, 1);
        }

        // Composition identity on pair curves.
        for (const auto& pr : prof.failing_pairs) {
            const Rational qij = prof.qij(pr.i, pr.j);
            const Rational qq = Rational(prof.q[pr.i]) * prof.q[pr.j];
            EXPECT_EQ((1 - 1 / qij) + (1 / qij) * (1 - 1 / qq), got.coefficient(StratumId::pair(pr.i, pr.j)));
        }

        // Monotonicity in each c_i, staying inside the valid region.
        for (std::size_t i = 0; i < n; ++i) {
            StdBoundary b = zero;
            b.c[i] = Rational(1, 3);
            const auto lo_e = diff_on_E(prof, zero), hi_e = diff_on_E(prof, b);
            const auto lo_w = diff_over_wps(prof, zero), hi_w = diff_over_wps(prof, b);
            for (const auto& [s, c] : lo_e.coefficients()) EXPECT_LE(c, hi_e.coefficient(s));
            for (const auto& [s, c] : lo_w.coefficients()) EXPECT_LE(c, hi_w.coefficient(s));
        }
    }
    EXPECT_GT(nontrivial, 50u);
}

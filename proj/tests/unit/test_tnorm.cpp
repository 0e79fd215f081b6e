#include <gtest/gtest.h>

#include <smtop/error.hpp>
#include <smtop/tnorm.hpp>

using namespace smtop;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> quarters() { return {0, r(1, 4), r(1, 2), r(3, 4), 1}; }

} // namespace

TEST(TNorm, Apply)
{
    EXPECT_EQ(TNorm::product()(r(1, 2), r(1, 2)), r(1, 4));
    EXPECT_EQ(TNorm::product()(1, 1), 1);
    EXPECT_EQ(TNorm::minimum()(r(1, 3), r(2, 3)), r(1, 3));
    EXPECT_THROW(TNorm::product()(r(3, 2), 0), DomainError);
    EXPECT_THROW(TNorm::minimum()(0, -1), DomainError);
}

TEST(TNorm, BuiltinsPassAllAxioms)
{
    for (const auto& t : {TNorm::product(), TNorm::minimum()}) {
        EXPECT_TRUE(check_axioms(t, quarters()).ok()) << t.name();
        EXPECT_TRUE(check_axioms(t, default_grid()).ok()) << t.name();
        EXPECT_TRUE(check_axioms(t, {0, 1}).ok()) << t.name();
    }
}

TEST(TNorm, DefaultGridIsEighths)
{
    const auto g = default_grid();
    ASSERT_EQ(g.size(), 9u);
    EXPECT_EQ(g.front(), 0);
    EXPECT_EQ(g[1], r(1, 8));
    EXPECT_EQ(g.back(), 1);
}

TEST(TNorm, BuiltinsCommuteAndAreMonotone)
{
    const auto g = default_grid();
    for (const auto& t : {TNorm::product(), TNorm::minimum()})
        for (const auto& a : g)
            for (const auto& b : g) {
                EXPECT_EQ(t(a, b), t(b, a));
                for (const auto& c : g)
                    for (const auto& d : g)
                        if (c >= a && d >= b)
                            EXPECT_GE(t(c, d), t(a, b));
            }
}

TEST(TNorm, TableWithBrokenUnitFailsTIV)
{
    const auto t = TNorm::table({0, 1}, {{0, 0}, {0, 0}});
    const auto report = check_axioms(t, quarters());
    EXPECT_FALSE(report.ok());
    const auto& iv = report.at("T-IV");
    EXPECT_FALSE(iv.passed);
    EXPECT_EQ(iv.witness, (std::vector<Rational>{1, 1}));
}

TEST(TNorm, TableInterpolatesBilinearly)
{
    const auto t = TNorm::table({0, 1}, {{0, 0}, {0, 1}});
    EXPECT_EQ(t(r(1, 2), r(1, 2)), r(1, 4));
    EXPECT_EQ(t(r(1, 3), 1), r(1, 3));
    EXPECT_TRUE(check_axioms(t, quarters()).ok());
}

TEST(TNorm, AsymmetricTableFailsTIIIWithWitness)
{
    const auto t = TNorm::table({0, r(1, 2), 1}, {{0, 0, 0}, {0, r(1, 4), r(1, 2)}, {0, r(1, 3), 1}});
    const auto report = check_axioms(t, quarters());
    const auto& iii = report.at("T-III");
    ASSERT_FALSE(iii.passed);
    ASSERT_EQ(iii.witness.size(), 2u);
    EXPECT_NE(t(iii.witness[0], iii.witness[1]), t(iii.witness[1], iii.witness[0]));
}

TEST(TNorm, DecreasingTableFailsTIIWithWitness)
{
    const auto t = TNorm::table({0, r(1, 2), 1}, {{0, 0, 0}, {0, r(1, 2), r(1, 4)}, {0, r(1, 4), 1}});
    const auto report = check_axioms(t, quarters());
    const auto& ii = report.at("T-II");
    ASSERT_FALSE(ii.passed);
    ASSERT_EQ(ii.witness.size(), 4u);
    const auto& w = ii.witness;
    EXPECT_LE(w[0], w[2]);
    EXPECT_LE(w[1], w[3]);
    EXPECT_LT(t(w[2], w[3]), t(w[0], w[1]));
}

TEST(TNorm, ZeroRowFailsTV)
{
    const auto t = TNorm::table({0, r(1, 2), 1}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
    const auto report = check_axioms(t, quarters());
    const auto& v = report.at("T-V");
    ASSERT_FALSE(v.passed);
    ASSERT_FALSE(v.witness.empty());
    EXPECT_GT(v.witness[0], 0);
    EXPECT_EQ(t(v.witness[0], 1), 0);
}

TEST(TNorm, TableValidation)
{
    EXPECT_THROW(TNorm::table({0, r(1, 2)}, {{0, 0}, {0, 0}}), ValidationError);
    EXPECT_THROW(TNorm::table({0, 1, r(1, 2)}, {{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}), ValidationError);
    EXPECT_THROW(TNorm::table({0, 1}, {{0, 0}}), ValidationError);
}

TEST(TNorm, GridRequirements)
{
    EXPECT_THROW(check_axioms(TNorm::product(), {}), DomainError);
    EXPECT_THROW(check_axioms(TNorm::product(), {0, r(1, 2)}), DomainError);
    EXPECT_THROW(check_axioms(TNorm::product(), {0, 1, 2}), DomainError);
}

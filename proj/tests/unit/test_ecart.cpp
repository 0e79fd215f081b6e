#include <gtest/gtest.h>

#include <smtop/ecart.hpp>
#include <smtop/error.hpp>

using namespace smtop;

TEST(Poset, Naturals)
{
    const auto n = Poset::naturals();
    EXPECT_TRUE(n.less(Poset::nat(0), Poset::nat(3)));
    EXPECT_FALSE(n.less(Poset::nat(3), Poset::nat(3)));
    EXPECT_EQ(n.least(), Poset::nat(0));
    EXPECT_EQ(n.positive_up_to(Poset::nat(3)).size(), 3u);
    EXPECT_EQ(n.up_to(Poset::nat(3)).size(), 4u);
    EXPECT_EQ(n.parse("7"), Poset::nat(7));
    EXPECT_EQ(n.format(Poset::nat(7)), "7");
    EXPECT_ANY_THROW(n.parse("x"));
}

TEST(Poset, FiniteTakesTransitiveClosure)
{
    const auto p = Poset::finite({"0", "a", "b", "c"}, {{"0", "a"}, {"a", "b"}, {"0", "c"}}, "0");
    const auto a = p.parse("a"), b = p.parse("b"), c = p.parse("c"), z = p.parse("0");
    EXPECT_TRUE(p.less(z, b));
    EXPECT_TRUE(p.less(a, b));
    EXPECT_FALSE(p.less(b, a));
    EXPECT_FALSE(p.less(a, c));
    EXPECT_FALSE(p.less(c, a));
    EXPECT_EQ(p.least(), z);
    EXPECT_EQ(p.format(c), "c");
    EXPECT_EQ(p.positive_capped(0).size(), 3u);
    EXPECT_THROW(p.parse("zz"), DomainError);
}

TEST(Poset, FiniteValidation)
{
    EXPECT_THROW(Poset::finite({"0", "a"}, {{"0", "a"}, {"a", "0"}}, "0"), ValidationError);
    EXPECT_THROW(Poset::finite({"0", "a", "b"}, {{"0", "a"}}, "0"), ValidationError);
    EXPECT_THROW(Poset::finite({"0", "a"}, {{"0", "a"}}, "q"), ValidationError);
}

TEST(Poset, ProductIsComponentwiseStrict)
{
    const auto pp = Poset::product(Poset::naturals(), Poset::naturals());
    EXPECT_EQ(pp.arity(), 2u);
    const auto e = pp.parse("(2,5)");
    EXPECT_EQ(e.coords, (std::vector<std::uint64_t>{2, 5}));
    EXPECT_EQ(pp.format(e), "(2,5)");
    EXPECT_TRUE(pp.less(pp.parse("(1,1)"), e));
    EXPECT_FALSE(pp.less(pp.parse("(2,1)"), e));
    EXPECT_FALSE(pp.less(pp.least(), pp.parse("(0,3)")));
    EXPECT_TRUE(pp.less_equal(pp.parse("(2,1)"), e));
    const auto pos = pp.positive_capped(3);
    EXPECT_EQ(pos.size(), 9u);
    for (const auto& x : pos)
        EXPECT_TRUE(pp.less(pp.least(), x));
}

TEST(GEcart, DenseValidation)
{
    const auto g = Ground::finite({"a", "b"});
    const auto n = Poset::naturals();
    EXPECT_NO_THROW(GEcart::dense(g, n, {Poset::nat(0), Poset::nat(2), Poset::nat(3), Poset::nat(0)}));
    EXPECT_THROW(GEcart::dense(g, n, {Poset::nat(1), Poset::nat(2), Poset::nat(3), Poset::nat(0)}), ValidationError);
    EXPECT_THROW(GEcart::dense(g, n, {Poset::nat(0), Poset::nat(2)}), ValidationError);
    const auto e = GEcart::dense(g, n, {Poset::nat(0), Poset::nat(2), Poset::nat(3), Poset::nat(0)});
    EXPECT_EQ(e(0, 1), Poset::nat(2));
    EXPECT_EQ(e(1, 0), Poset::nat(3));
}

TEST(GEcart, RuleAndWindow)
{
    GEcart::Rule rule;
    rule.distinguished = {1, 2};
    rule.outside = Poset::nat(0);
    rule.mixed = Poset::nat(1);
    rule.inside = Poset::nat(5);
    rule.table[{1, 2}] = Poset::nat(2);
    const auto g = GEcart::rule(10, Poset::naturals(), rule);
    EXPECT_TRUE(g.is_rule());
    EXPECT_EQ(g(1, 2), Poset::nat(2));
    EXPECT_EQ(g(2, 1), Poset::nat(5));
    EXPECT_EQ(g(1, 9), Poset::nat(1));
    EXPECT_EQ(g(8, 9), Poset::nat(0));
    EXPECT_EQ(g(9, 9), Poset::nat(0));
    EXPECT_EQ(g.with_window(20).domain().window(), 20u);

    const auto w = g.windowed();
    EXPECT_FALSE(w.is_rule());
    ASSERT_EQ(w.domain().size(), 10u);
    EXPECT_EQ(w.domain().label(0), "1");
    for (PointId p = 0; p < 10; ++p)
        for (PointId q = 0; q < 10; ++q)
            EXPECT_EQ(w(p, q), g(p + 1, q + 1));
}

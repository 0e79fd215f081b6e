#include <gtest/gtest.h>

#include <smtop/error.hpp>
#include <smtop/io.hpp>
#include <smtop/neighborhood.hpp>
#include <smtop/product.hpp>

using namespace smtop;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

const std::string kData = SMTOP_FIXTURES;

SMSpace load(const std::string& name) { return io::load_sm_space(kData + "/" + name + ".space"); }

NeighborhoodSystem make(std::vector<std::string> labels, std::vector<std::vector<PointSet>> families)
{
    return NeighborhoodSystem(Ground::finite(std::move(labels)), std::move(families));
}

PointSet box(const PointSet& a, const PointSet& b, std::size_t n2)
{
    PointSet out;
    for (auto i : a.ids())
        for (auto j : b.ids())
            out.insert(i * n2 + j);
    return out;
}

} // namespace

TEST(ProductSpace, CoinTimesCoin)
{
    const auto c = load("coin");
    const auto p = product_space(c, c);
    ASSERT_EQ(p.size(), 4u);
    EXPECT_EQ(p.label(1), "(0,1)");
    EXPECT_EQ(p.dist(0, 1), DistFn::step(1));
    EXPECT_EQ(p.dist(0, 3), DistFn::step(1));
    EXPECT_EQ(p.dist(2, 2), DistFn::one());
}

TEST(ProductSpace, CoinTimesDice)
{
    const auto p = product_space(load("coin"), load("dice"));
    ASSERT_EQ(p.size(), 12u);
    EXPECT_EQ(p.dist(p.id("(0,1)"), p.id("(1,6)")), DistFn::step(5));
    EXPECT_EQ(p.dist(p.id("(0,2)"), p.id("(0,4)")), DistFn::step(2));
}

TEST(ProductSpace, SingletonFactorIsIdentity)
{
    const auto d = load("dice");
    const auto one = SMSpace::build({"*"}, {});
    const auto p = product_space(d, one);
    for (PointId a = 0; a < 6; ++a)
        for (PointId b = 0; b < 6; ++b)
            EXPECT_EQ(p.dist(a, b), d.dist(a, b));
}

TEST(ProductSpace, AxiomsAndMengerForBundledPairs)
{
    for (auto [a, b] : {std::pair{"coin", "coin"}, {"coin", "dice"}, {"dice", "dice"}}) {
        const auto s1 = load(a), s2 = load(b);
        EXPECT_TRUE(verify_product_axioms(s1, s2).ok()) << a << " x " << b;
        const auto m = verify_product_menger(s1, s2);
        EXPECT_TRUE(m.ok()) << a << " x " << b;
        ASSERT_TRUE(m.product);
        EXPECT_EQ(m.product->violating_triples, 0u);
    }
}

TEST(ProductSpace, FailingFactorSkipsProduct)
{
    const auto bad = load("menger_violation");
    const auto m = verify_product_menger(bad, load("coin"));
    EXPECT_FALSE(m.factors_ok());
    EXPECT_FALSE(m.product);
    EXPECT_FALSE(m.ok());
}

TEST(ProductSpace, SpheresContainBoxes)
{
    // N_p1(u,v1) x N_p2(u,v2) lies inside N_(p1,p2)(u, v1 + v2 - v1 v2).
    const auto s1 = load("coin"), s2 = load("dice");
    const auto p = product_space(s1, s2);
    const std::vector<Rational> vals{r(1, 4), r(1, 2), 1, r(3, 2), 3};
    for (PointId a = 0; a < s1.size(); ++a)
        for (PointId b = 0; b < s2.size(); ++b)
            for (const auto& u : vals)
                for (const auto& v1 : {r(1, 4), r(1, 2), Rational(1)})
                    for (const auto& v2 : {r(1, 3), r(2, 3)}) {
                        const auto bx = box(sphere(s1, a, u, v1), sphere(s2, b, u, v2), s2.size());
                        EXPECT_TRUE(bx.subset_of(sphere(p, a * s2.size() + b, u, v1 + v2 - v1 * v2)));
                    }
}

TEST(BoxSystem, FamiliesAreProducts)
{
    const auto a = make({"x", "y"}, {{PointSet{0}, PointSet{0, 1}}, {PointSet{1}}});
    const auto b = make({"u", "v", "w"}, {{PointSet{0}}, {PointSet{1, 2}}, {PointSet{2}}});
    const auto bx = box_system(a, b);
    EXPECT_EQ(bx.ground().label(1), "(x,v)");
    EXPECT_EQ(bx.family(1), (std::vector<PointSet>{PointSet{1, 2}, PointSet{1, 2, 4, 5}}));
    EXPECT_EQ(bx.family(5), (std::vector<PointSet>{PointSet{5}}));
}

TEST(BoxSystem, NeedsFiniteGrounds)
{
    const auto g = io::load_ecart(kData + "/ecart3.space", 10);
    const auto nat = ecart_system(g, Poset::nat(3));
    const auto a = make({"x"}, {{PointSet{0}}});
    EXPECT_THROW(box_system(nat, a), DomainError);
}

TEST(TypePreservation, N1FailingTimesDiscrete)
{
    const auto n1 = io::load_system(kData + "/n1_failing.system");
    const auto d = make({"a", "b"}, {{PointSet{0}}, {PointSet{1}}});
    const auto vd = verify_type_preservation(n1, d, GType::VD);
    EXPECT_TRUE(vd.preserved());
    const auto va = verify_type_preservation(n1, d, GType::VAlpha);
    EXPECT_FALSE(va.precondition_met());
    EXPECT_FALSE(va.product);
}

TEST(CompareSystems, Relations)
{
    const auto fine = make({"a", "b"}, {{PointSet{0}}, {PointSet{1}}});
    const auto coarse = make({"a", "b"}, {{PointSet{0, 1}}, {PointSet{0, 1}}});
    const auto both = make({"a", "b"}, {{PointSet{0}, PointSet{0, 1}}, {PointSet{1}}});
    EXPECT_EQ(compare_systems(fine, coarse).relation, Refinement::LeftRefines);
    EXPECT_EQ(compare_systems(coarse, fine).relation, Refinement::RightRefines);
    const auto eq = compare_systems(fine, both);
    EXPECT_EQ(eq.relation, Refinement::Equal);
    EXPECT_FALSE(eq.identical);
    EXPECT_TRUE(compare_systems(fine, fine).identical);
    const auto x = make({"a", "b"}, {{PointSet{0}}, {PointSet{0, 1}}});
    const auto y = make({"a", "b"}, {{PointSet{0, 1}}, {PointSet{1}}});
    const auto inc = compare_systems(x, y);
    EXPECT_EQ(inc.relation, Refinement::Incomparable);
    EXPECT_TRUE(inc.left_gap && inc.right_gap);
    EXPECT_THROW(compare_systems(fine, make({"a"}, {{PointSet{0}}})), DomainError);
}

TEST(EcartProduct, SphereBoxIdentity)
{
    const auto g = io::load_ecart(kData + "/ecart3.space", 10);
    const auto report = verify_ecart_product(g, g, 10);
    EXPECT_FALSE(report.mismatch);
    EXPECT_GE(report.spheres_checked, 100u * 121u);
    EXPECT_TRUE(report.ok());
    EXPECT_TRUE(meets(report.classification.verdict, GType::V));

    const auto pg = product_ecart(g, g);
    EXPECT_EQ(pg.domain().size(), 100u);
    EXPECT_EQ(pg(0, 1), (PosetElement{{0, 2}}));
}

TEST(RProduct, CoinPairs)
{
    for (const char* other : {"coin", "dice"}) {
        const auto rep = verify_r_product(load("coin"), load(other));
        EXPECT_TRUE(rep.ok()) << other;
        ASSERT_TRUE(rep.system);
        for (auto p : rep.system->points())
            for (const auto& n : rep.system->family(p))
                EXPECT_FALSE(n.empty());
    }
}

TEST(BoxTheorems, RandomPairsPreserveEveryType)
{
    const auto trials = verify_box_theorems(1000, 0);
    ASSERT_EQ(trials.size(), 4u);
    for (const auto& t : trials) {
        EXPECT_EQ(t.pairs, 1000u);
        EXPECT_TRUE(t.ok()) << to_string(t.type);
        EXPECT_FALSE(t.counterexample);
    }
}

TEST(BoxTheorems, SeedDeterminesOutcome)
{
    const auto a = verify_box_theorems(50, 9);
    const auto b = verify_box_theorems(50, 9);
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_EQ(a[i].factor_verdicts, b[i].factor_verdicts);
}

#include <gtest/gtest.h>

#include <set>

#include <smtop/error.hpp>
#include <smtop/io.hpp>
#include <smtop/neighborhood.hpp>

using namespace smtop;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

const std::string kData = SMTOP_FIXTURES;

SMSpace load(const std::string& name) { return io::load_sm_space(kData + "/" + name + ".space"); }

std::vector<SMSpace> bundled() { return {load("coin"), load("dice"), load("ramp")}; }

std::vector<Rational> grid(long max_num, long den)
{
    std::vector<Rational> out;
    for (long k = 1; k <= max_num; ++k)
        out.emplace_back(k, den);
    return out;
}

// Brute force: spheres at every u on a fine grid and at every v just above each
// level 1 - F_pq(u), plus v past 1.
std::vector<PointSet> oracle_family(const SMSpace& s, PointId p)
{
    std::vector<PointSet> out;
    for (const auto& u : grid(12 * 16, 16)) {
        std::vector<Rational> vs{r(1, 1000), 2};
        for (PointId q = 0; q < s.size(); ++q) {
            const Rational v = 1 - s.dist(p, q)(u) + r(1, 1000);
            if (v > 0)
                vs.push_back(v);
        }
        for (const auto& v : vs) {
            PointSet set;
            for (PointId q = 0; q < s.size(); ++q)
                if (s.dist(p, q)(u) > 1 - v)
                    set.insert(q);
            if (!set.empty())
                out.push_back(set);
        }
    }
    normalize(out);
    return out;
}

} // namespace

TEST(Sphere, CoinCaseTable)
{
    const auto s = load("coin");
    const std::vector<Rational> vals{r(1, 2), 1, r(3, 2), 2};
    for (const auto& u : vals)
        for (const auto& v : vals) {
            const PointSet expected = (u > 1 || v > 1) ? PointSet{0, 1} : PointSet{0};
            EXPECT_EQ(sphere(s, 0, u, v), expected);
            const PointSet mirrored = (u > 1 || v > 1) ? PointSet{0, 1} : PointSet{1};
            EXPECT_EQ(sphere(s, 1, u, v), mirrored);
        }
}

TEST(Sphere, RejectsNonPositiveRadii)
{
    const auto s = load("coin");
    EXPECT_THROW(sphere(s, 0, 0, 1), DomainError);
    EXPECT_THROW(sphere(s, 0, 1, r(-1, 2)), DomainError);
    EXPECT_THROW(entourage(s, 1, 0), DomainError);
}

TEST(Sphere, MonotoneAndContainsCenter)
{
    const auto us = grid(40, 4);
    const auto vs = grid(10, 8);
    for (const auto& s : bundled())
        for (PointId p = 0; p < s.size(); ++p)
            for (std::size_t i = 0; i < us.size(); ++i)
                for (std::size_t j = 0; j < vs.size(); ++j) {
                    const auto n = sphere(s, p, us[i], vs[j]);
                    EXPECT_TRUE(n.contains(p));
                    if (i + 1 < us.size())
                        EXPECT_TRUE(n.subset_of(sphere(s, p, us[i + 1], vs[j])));
                    if (j + 1 < vs.size())
                        EXPECT_TRUE(n.subset_of(sphere(s, p, us[i], vs[j + 1])));
                }
}

TEST(Sphere, LargeVGivesEverything)
{
    for (const auto& s : bundled())
        for (PointId p = 0; p < s.size(); ++p)
            EXPECT_EQ(sphere(s, p, r(1, 100), r(11, 10)), s.ground().all());
}

TEST(Entourage, SymmetricAndSlicesAreSpheres)
{
    for (const auto& s : bundled())
        for (const auto& u : grid(24, 2))
            for (const auto& v : {r(1, 4), r(1, 2), r(3, 4), Rational(1)}) {
                const auto e = entourage(s, u, v);
                for (PointId p = 0; p < s.size(); ++p) {
                    EXPECT_EQ(e.slice(p), sphere(s, p, u, v));
                    for (PointId q = 0; q < s.size(); ++q)
                        EXPECT_EQ(e.contains(p, q), e.contains(q, p));
                }
            }
}

TEST(Entourage, DiceChain)
{
    const auto s = load("dice");
    const std::vector<std::pair<Rational, std::size_t>> chain{
        {r(1, 2), 6}, {r(3, 2), 16}, {r(5, 2), 24}, {r(7, 2), 30}, {r(9, 2), 34}, {6, 36}};
    for (std::size_t k = 0; k < chain.size(); ++k) {
        const auto e = entourage(s, chain[k].first, r(1, 2));
        EXPECT_EQ(e.size(), chain[k].second);
        PairSet delta(6);
        for (PointId p = 0; p < 6; ++p)
            for (PointId q = 0; q < 6; ++q)
                if ((p > q ? p - q : q - p) <= k)
                    delta.insert(p, q);
        EXPECT_EQ(e, delta) << "k = " << k;
    }
}

TEST(SphereFamily, MatchesDenseGridOracle)
{
    for (const auto& s : bundled())
        for (PointId p = 0; p < s.size(); ++p)
            EXPECT_EQ(sphere_family(s, p), oracle_family(s, p)) << "p = " << s.label(p);
}

TEST(SphereFamily, CoinFamilies)
{
    const auto s = load("coin");
    EXPECT_EQ(sphere_family(s, 0), (std::vector<PointSet>{PointSet{0}, PointSet{0, 1}}));
    EXPECT_EQ(sphere_family(s, 1), (std::vector<PointSet>{PointSet{1}, PointSet{0, 1}}));
}

TEST(SphereCollection, DeduplicatesOverPoints)
{
    const auto s = load("coin");
    const auto c = sphere_collection(s, {{r(1, 2), r(1, 2)}, {2, r(1, 2)}});
    EXPECT_EQ(c, (std::vector<PointSet>{PointSet{0}, PointSet{1}, PointSet{0, 1}}));
    EXPECT_EQ(entourage_collection(s, {{r(1, 2), r(1, 2)}, {r(1, 3), r(1, 3)}}).size(), 1u);
}

TEST(SphereSystem, BundledSystemsAreTopologies)
{
    for (const auto& s : bundled()) {
        const auto sys = sphere_system(s);
        EXPECT_EQ(classify(sys).verdict, GType::Top);
        EXPECT_TRUE(is_symmetric(sys).symmetric);
    }
}

TEST(EcartSphere, MonotoneInF)
{
    const auto g = io::load_ecart(kData + "/ecart3.space", 10);
    for (PointId p = 1; p <= 10; ++p) {
        EXPECT_TRUE(ecart_sphere(g, p, Poset::nat(0)).empty());
        for (std::uint64_t f = 1; f < 12; ++f) {
            const auto a = ecart_sphere(g, p, Poset::nat(f));
            EXPECT_TRUE(a.contains(p));
            EXPECT_TRUE(a.subset_of(ecart_sphere(g, p, Poset::nat(f + 1))));
        }
    }
}

TEST(EcartSphere, Tables)
{
    const auto g = io::load_ecart(kData + "/ecart3.space", 10);
    EXPECT_EQ(ecart_sphere(g, 1, Poset::nat(1)), (PointSet{1}));
    EXPECT_EQ(ecart_sphere(g, 1, Poset::nat(2)), PointSet::all_but({2, 3}));
    EXPECT_EQ(ecart_sphere(g, 1, Poset::nat(3)), PointSet::all_but({3}));
    EXPECT_EQ(ecart_sphere(g, 2, Poset::nat(4)), PointSet::all_but({1, 3}));
    EXPECT_EQ(ecart_sphere(g, 3, Poset::nat(2)), PointSet::all_but({2}));
    EXPECT_EQ(ecart_sphere(g, 7, Poset::nat(1)), PointSet::all_but({1, 2, 3}));
    EXPECT_EQ(ecart_sphere(g, 7, Poset::nat(2)), PointSet::all_but({}));
}

TEST(RSphere, Examples)
{
    const auto ramp = load("ramp");
    EXPECT_EQ(r_sphere(ramp, ramp.id("1"), ramp.id("2"), r(1, 4)), (PointSet{ramp.id("1")}));
    for (const auto& s : bundled())
        for (PointId p = 0; p < s.size(); ++p)
            for (const auto& u : grid(20, 2))
                EXPECT_TRUE(r_sphere(s, p, p, u).empty());
}

TEST(RSphere, CoinAndDiceSystems)
{
    const auto coin = load("coin");
    EXPECT_EQ(r_family(coin, 0), (std::vector<PointSet>{PointSet{0}}));
    const auto sys = r_system(coin);
    EXPECT_TRUE(check_N0(sys).passed);

    const auto dice = load("dice");
    for (PointId p = 0; p < 6; ++p)
        for (const auto& n : r_family(dice, p)) {
            EXPECT_FALSE(n.empty());
            EXPECT_TRUE(n.contains(p));
        }
    EXPECT_TRUE(check_N0(r_system(dice)).passed);
}

TEST(RSphere, SinglePointHasEmptyFamily)
{
    const auto s = SMSpace::build({"only"}, {});
    EXPECT_TRUE(r_family(s, 0).empty());
    EXPECT_FALSE(check_N0(r_system(s)).passed);
}

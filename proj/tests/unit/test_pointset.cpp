#include <gtest/gtest.h>

#include <random>
#include <set>

#include <smtop/pointset.hpp>

using namespace smtop;

namespace {

// Reference model over the universe {0, ..., 199}.
std::set<PointId> model(const PointSet& s)
{
    std::set<PointId> out;
    for (PointId p = 0; p < 200; ++p)
        if (s.contains(p))
            out.insert(p);
    return out;
}

PointSet random_set(std::mt19937_64& rng)
{
    std::uniform_int_distribution<PointId> pick(0, 150);
    PointSet s;
    const int n = static_cast<int>(rng() % 8);
    for (int i = 0; i < n; ++i)
        s.insert(pick(rng));
    if (rng() % 3 == 0)
        s = PointSet::all_but(s.ids());
    return s;
}

} // namespace

TEST(PointSet, BasicMembership)
{
    PointSet s{1, 3, 64, 130};
    EXPECT_TRUE(s.contains(64));
    EXPECT_FALSE(s.contains(2));
    EXPECT_EQ(s.count(), 4u);
    EXPECT_EQ(s.ids(), (std::vector<PointId>{1, 3, 64, 130}));
    s.erase(130);
    s.erase(64);
    EXPECT_EQ(s, (PointSet{1, 3}));
}

TEST(PointSet, Cofinite)
{
    const auto s = PointSet::all_but({2, 3});
    EXPECT_TRUE(s.is_cofinite());
    EXPECT_FALSE(s.empty());
    EXPECT_TRUE(s.contains(1));
    EXPECT_FALSE(s.contains(3));
    EXPECT_TRUE(s.contains(1000));
    EXPECT_ANY_THROW(s.count());
}

TEST(PointSet, OperationsMatchModel)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto a = random_set(rng);
        const auto b = random_set(rng);
        const auto ma = model(a);
        const auto mb = model(b);
        std::set<PointId> both, either;
        for (auto p : ma)
            if (mb.count(p))
                both.insert(p);
        either = ma;
        either.insert(mb.begin(), mb.end());
        EXPECT_EQ(model(a.intersect(b)), both);
        EXPECT_EQ(model(a.unite(b)), either);
        const bool subset = std::includes(mb.begin(), mb.end(), ma.begin(), ma.end());
        // Beyond the model universe cofinite sets are full, finite ones are empty.
        const bool tail_ok = !a.is_cofinite() || b.is_cofinite();
        EXPECT_EQ(a.subset_of(b), subset && tail_ok);
        EXPECT_EQ(a.intersects(b), !both.empty() || (a.is_cofinite() && b.is_cofinite()));
        EXPECT_EQ(a == b, ma == mb && a.is_cofinite() == b.is_cofinite());
    }
}

TEST(PointSet, OrderIsStrictWeak)
{
    std::vector<PointSet> v{PointSet{2}, PointSet{}, PointSet{0, 1}, PointSet::all_but({1}), PointSet{1},
                            PointSet::all_but({})};
    normalize(v);
    EXPECT_EQ(v.front(), PointSet{});
    EXPECT_EQ(v.back(), PointSet::all_but({}));
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
        EXPECT_TRUE(v[i] < v[i + 1]);
}

TEST(Ground, FiniteAndNaturals)
{
    const auto g = Ground::finite({"a", "b", "c"});
    EXPECT_EQ(g.find("b"), PointId{1});
    EXPECT_FALSE(g.find("z"));
    EXPECT_EQ(g.format(PointSet{0, 2}), "{a, c}");
    EXPECT_EQ(g.complement(PointSet{0}), (PointSet{1, 2}));

    const auto n = Ground::naturals(10);
    EXPECT_EQ(n.points().front(), 1u);
    EXPECT_EQ(n.points().size(), 10u);
    EXPECT_EQ(n.find("7"), PointId{7});
    EXPECT_FALSE(n.find("0"));
    EXPECT_EQ(n.format(PointSet::all_but({2, 3})), "S \\ {2, 3}");
    EXPECT_EQ(n.format(n.all()), "S");
    EXPECT_EQ(n.complement(PointSet{1, 2, 3}), PointSet::all_but({1, 2, 3}));
    EXPECT_EQ(n.view(PointSet::all_but({2})).size(), 9u);
}

TEST(PairSet, Slices)
{
    PairSet s(3);
    s.insert(0, 1);
    s.insert(1, 0);
    s.insert(0, 0);
    EXPECT_EQ(s.size(), 3u);
    EXPECT_EQ(s.slice(0), (PointSet{0, 1}));
    EXPECT_TRUE(s.contains(1, 0));
    EXPECT_FALSE(s.contains(2, 2));
}

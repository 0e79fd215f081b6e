#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include <smtop/error.hpp>
#include <smtop/io.hpp>
#include <smtop/smspace.hpp>

using namespace smtop;

namespace {

Rational r(long n, long d = 1) { return Rational(n, d); }

const std::string kData = SMTOP_FIXTURES;

SMSpace coin() { return io::load_sm_space(kData + "/coin.space"); }
SMSpace dice() { return io::load_sm_space(kData + "/dice.space"); }

SMSpace random_metric_space(std::mt19937_64& rng, std::size_t n, MetricKind kind)
{
    // Shortest paths over random weights give a metric.
    std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            d[i][j] = d[j][i] = Rational(1 + static_cast<long>(rng() % 6), 1 + static_cast<long>(rng() % 2));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j])
                    d[i][j] = d[i][k] + d[k][j];
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back("x" + std::to_string(i));
    return SMSpace::from_metric(labels, d, kind);
}

} // namespace

TEST(SMSpace, BuildInternsFunctions)
{
    const auto s = coin();
    ASSERT_EQ(s.size(), 2u);
    EXPECT_EQ(s.dist(0, 1), DistFn::step(1));
    EXPECT_EQ(s.dist(1, 0), DistFn::step(1));
    EXPECT_EQ(s.dist(0, 0), DistFn::one());
    EXPECT_EQ(s.functions().size(), 2u);
    EXPECT_EQ(s.id("1"), 1u);
    EXPECT_THROW(s.id("7"), DomainError);
}

TEST(SMSpace, BuildErrors)
{
    const std::vector<std::string> abc{"a", "b", "c"};
    auto e = [](std::string p, std::string q) { return SpaceEntry{p, q, DistFn::step(1)}; };
    EXPECT_THROW(SMSpace::build(abc, {e("a", "b"), e("b", "c")}), ValidationError);
    EXPECT_THROW(SMSpace::build(abc, {e("a", "b"), e("b", "c"), e("a", "c"), e("c", "a")}), ValidationError);
    EXPECT_THROW(SMSpace::build(abc, {e("a", "b"), e("b", "c"), e("a", "c"), e("a", "a")}), ValidationError);
    EXPECT_THROW(SMSpace::build(abc, {e("a", "b"), e("b", "c"), e("a", "z")}), ValidationError);
    EXPECT_THROW(SMSpace::build({"a", "a"}, {e("a", "a")}), ValidationError);
    EXPECT_NO_THROW(SMSpace::build(abc, {e("a", "b"), e("c", "b"), e("a", "c")}));
}

TEST(SMSpace, MetricMustBeMetric)
{
    const std::vector<std::string> abc{"a", "b", "c"};
    EXPECT_THROW(SMSpace::from_metric(abc, {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}, MetricKind::Step), ValidationError);
    EXPECT_THROW(SMSpace::from_metric(abc, {{0, 1, 1}, {2, 0, 1}, {1, 1, 0}}, MetricKind::Step), ValidationError);
    EXPECT_THROW(SMSpace::from_metric(abc, {{0, 0, 1}, {0, 0, 1}, {1, 1, 0}}, MetricKind::Ramp), ValidationError);
    EXPECT_NO_THROW(SMSpace::from_metric(abc, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}, MetricKind::Ramp));
}

TEST(SMSpace, Thresholds)
{
    EXPECT_EQ(threshold(DistFn::step(1)).value, ExtRational{Rational(1)});
    EXPECT_FALSE(threshold(DistFn::step(1)).attained);
    EXPECT_TRUE(threshold(DistFn::ramp(3)).attained);
    EXPECT_EQ(threshold(DistFn::ramp(3)).value, ExtRational{Rational(3)});
    EXPECT_EQ(threshold(DistFn::one()).value, ExtRational{Rational(0)});
    const auto d = dice();
    for (PointId p = 0; p < 6; ++p)
        for (PointId q = 0; q < 6; ++q) {
            const auto t = threshold(d, p, q);
            EXPECT_EQ(t.value, threshold(d, q, p).value);
            EXPECT_EQ(t.value, ExtRational{Rational(p > q ? p - q : q - p)});
        }
}

TEST(SMSpace, BundledSpacesPassAxioms)
{
    for (const char* name : {"coin", "dice", "ramp"}) {
        const auto s = io::load_sm_space(kData + "/" + name + ".space");
        const auto report = check_sm_axioms(s);
        EXPECT_TRUE(report.ok()) << name;
        for (const char* a : {"SM-I", "SM-II", "SM-III", "SM-IV"})
            EXPECT_TRUE(report.at(a).passed) << name << " " << a;
        for (const auto& t : {TNorm::product(), TNorm::minimum()})
            EXPECT_TRUE(check_menger(s, t).ok()) << name << " " << t.name();
    }
}

TEST(SMSpace, SmIFailsWhenDistinctPointsHaveDistanceZero)
{
    const auto s = SMSpace::build({"a", "b"}, {{"a", "b", DistFn::one()}});
    const auto report = check_sm_axioms(s);
    const auto& i = report.at("SM-I");
    EXPECT_FALSE(i.passed);
    EXPECT_EQ(i.points.size(), 2u);
}

TEST(SMSpace, MengerViolationWitnessIsGenuine)
{
    const auto s = io::load_sm_space(kData + "/menger_violation.space");
    const auto t = TNorm::product();
    const auto report = check_menger(s, t);
    ASSERT_FALSE(report.ok());
    ASSERT_TRUE(report.witness);
    const auto& w = *report.witness;
    // Re-evaluate independently of the checker.
    EXPECT_EQ(w.lhs, s.dist(w.p, w.r)(w.x + w.y));
    EXPECT_EQ(w.rhs, s.dist(w.p, w.q)(w.x) * s.dist(w.q, w.r)(w.y));
    EXPECT_LT(w.lhs, w.rhs);
    EXPECT_EQ(w.x, 2);
    EXPECT_EQ(w.y, 2);
    EXPECT_FALSE(check_sm_axioms(s).at("SM-IV").passed);
}

TEST(SMSpace, MengerAbscissaeIncludeSumsAndTail)
{
    const auto xs = menger_abscissae(DistFn::step(1), DistFn::step(2), DistFn::step(3));
    auto has = [&](const Rational& x) { return std::find(xs.begin(), xs.end(), x) != xs.end(); };
    EXPECT_TRUE(has(1));
    EXPECT_TRUE(has(3));
    EXPECT_TRUE(has(r(1, 2)));
    EXPECT_TRUE(has(7));
}

TEST(SMSpace, RandomMetricSpacesSatisfyEverything)
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        const auto kind = trial % 2 ? MetricKind::Ramp : MetricKind::Step;
        const auto s = random_metric_space(rng, 2 + trial % 4, kind);
        EXPECT_TRUE(check_sm_axioms(s).ok());
        // Step metrics of a true metric satisfy Menger under any t-norm.
        if (kind == MetricKind::Step) {
            EXPECT_TRUE(check_menger(s, TNorm::minimum()).ok());
            EXPECT_TRUE(check_menger(s, TNorm::product()).ok());
        }
    }
}

TEST(SMSpace, BrokenTriangleBreaksSmIV)
{
    const auto s = SMSpace::build(
        {"p", "q", "r"},
        {{"p", "q", DistFn::step(1)}, {"q", "r", DistFn::step(1)}, {"p", "r", DistFn::step(5)}});
    const auto report = check_sm_axioms(s);
    const auto& iv = report.at("SM-IV");
    ASSERT_FALSE(iv.passed);
    ASSERT_EQ(iv.points.size(), 3u);
    ASSERT_EQ(iv.abscissae.size(), 2u);
    const auto& p = iv.points;
    const auto& x = iv.abscissae;
    EXPECT_EQ(s.dist(p[0], p[1])(x[0]), 1);
    EXPECT_EQ(s.dist(p[1], p[2])(x[1]), 1);
    EXPECT_LT(s.dist(p[0], p[2])(x[0] + x[1]), 1);
}

#include <gtest/gtest.h>

#include <smtop/error.hpp>
#include <smtop/io.hpp>
#include <smtop/neighborhood.hpp>

using namespace smtop;
using io::Json;

namespace {

const std::string kData = SMTOP_FIXTURES;

Json space_with_fn(const Json& fn)
{
    return {{"points", {"a", "b"}}, {"entries", {{{"p", "a"}, {"q", "b"}, {"fn", fn}}}}};
}

template <class E>
std::string message_of(const Json& j)
{
    try {
        io::space_from_json(j, 10);
    } catch (const E& e) {
        return e.what();
    }
    ADD_FAILURE() << "no exception of the expected class";
    return {};
}

} // namespace

TEST(Io, LoadsBundledFixtures)
{
    EXPECT_EQ(io::load_sm_space(kData + "/coin.space").size(), 2u);
    EXPECT_EQ(io::load_sm_space(kData + "/dice.space").size(), 6u);
    EXPECT_EQ(io::load_sm_space(kData + "/ramp.space").dist(0, 2), DistFn::ramp(2));
    EXPECT_TRUE(io::load_ecart(kData + "/ecart3.space", 10).is_rule());
    EXPECT_EQ(io::load_system(kData + "/n1_failing.system").points().size(), 3u);
    EXPECT_EQ(io::load_tnorm(kData + "/min.tnorm")(Rational(1, 2), 1), Rational(1, 2));
    EXPECT_TRUE(std::holds_alternative<GEcart>(io::load_space(kData + "/ecart3.space", 12)));
    EXPECT_THROW(io::load_sm_space(kData + "/ecart3.space"), SchemaError);
    EXPECT_THROW(io::load_space(kData + "/missing.space", 10), ParseError);
}

TEST(Io, FunctionKinds)
{
    EXPECT_EQ(io::fn_from_json({{"kind", "step"}, {"at", "3/2"}}), DistFn::step(Rational(3, 2)));
    EXPECT_EQ(io::fn_from_json({{"kind", "ramp"}, {"d", 2}}), DistFn::ramp(2));
    EXPECT_EQ(io::fn_from_json({{"kind", "one"}}), DistFn::one());
    const Json pieces = {{"kind", "pieces"},
                         {"pieces",
                          {{{"from", "0"}, {"to", "2"}, {"poly", {"0", "1/2"}}},
                           {{"from", "2"}, {"to", nullptr}, {"poly", {"1"}}}}}};
    EXPECT_EQ(io::fn_from_json(pieces), DistFn::ramp(2));
}

TEST(Io, RoundTrips)
{
    for (const char* name : {"coin", "dice", "ramp", "menger_violation"}) {
        const auto s = io::load_sm_space(kData + "/" + name + ".space");
        const auto back = std::get<SMSpace>(io::space_from_json(io::to_json(s), 10));
        ASSERT_EQ(back.size(), s.size());
        for (PointId p = 0; p < s.size(); ++p)
            for (PointId q = 0; q < s.size(); ++q)
                EXPECT_EQ(back.dist(p, q), s.dist(p, q));
    }
    const auto sys = io::load_system(kData + "/n1_failing.system");
    EXPECT_EQ(io::system_from_json(io::to_json(sys)), sys);
    const auto f = DistFn::ramp(3);
    EXPECT_EQ(io::fn_from_json({{"kind", "pieces"}, {"pieces", io::to_json(f)}}), f);
}

TEST(Io, ErrorClassesCarryLocations)
{
    const auto parse = message_of<ParseError>(space_with_fn({{"kind", "step"}, {"at", "1/0"}}));
    EXPECT_NE(parse.find("entries[0].fn.at"), std::string::npos) << parse;

    const auto schema = message_of<SchemaError>(space_with_fn({{"kind", "spline"}}));
    EXPECT_NE(schema.find("entries[0].fn.kind"), std::string::npos) << schema;

    const auto valid = message_of<ValidationError>(space_with_fn({{"kind", "step"}, {"at", "-1"}}));
    EXPECT_NE(valid.find("entries[0]"), std::string::npos) << valid;

    message_of<ValidationError>({{"points", {"a", "b", "c"}}, {"entries", Json::array()}});
    message_of<SchemaError>({{"points", {"a"}}});
    message_of<SchemaError>(Json::array());
    EXPECT_THROW(io::parse_json("{", "inline"), ParseError);
}

TEST(Io, CofiniteSetsRenderWithWindow)
{
    const auto g = Ground::naturals(5);
    const auto j = io::to_json(g, PointSet::all_but({2}));
    EXPECT_EQ(j["all_but"], Json({"2"}));
    EXPECT_EQ(j["window"], Json({"1", "3", "4", "5"}));
    EXPECT_EQ(io::to_json(Ground::finite({"a", "b"}), PointSet{1}), Json({"b"}));
}

TEST(Io, ClassificationJson)
{
    const auto sys = io::load_system(kData + "/n1_failing.system");
    const auto j = io::to_json(sys, classify(sys));
    EXPECT_EQ(j["verdict"], "V_D");
    EXPECT_EQ(j["N1"]["passed"], false);
}

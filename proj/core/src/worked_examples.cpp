#include "smtop/worked_examples.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "smtop/error.hpp"
#include "smtop/io.hpp"
#include "smtop/neighborhood.hpp"

namespace smtop {

bool GoldenGroup::ok() const { return error.empty() && failures() == 0; }

std::size_t GoldenGroup::failures() const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.passed(); }));
}

namespace {

std::string family_text(const Ground& g, const std::vector<PointSet>& family)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < family.size(); ++i)
        os << (i ? ", " : "") << g.format(family[i]);
    os << ']';
    return os.str();
}

std::string pairs_text(const SMSpace& s, const PairSet& pairs)
{
    std::ostringstream os;
    os << pairs.size() << " pairs {";
    bool first = true;
    for (const auto& [p, q] : pairs.pairs()) {
        os << (first ? "" : " ") << '(' << s.label(p) << ',' << s.label(q) << ')';
        first = false;
    }
    os << '}';
    return os.str();
}

std::string passed_text(bool ok) { return ok ? "pass" : "fail"; }

class Recorder {
public:
    explicit Recorder(GoldenGroup& g) : g_(g) {}
    void operator()(std::string name, std::string expected, std::string actual)
    {
        g_.checks.push_back({std::move(name), std::move(expected), std::move(actual)});
    }

private:
    GoldenGroup& g_;
};

const std::vector<Rational>& probe_radii()
{
    static const std::vector<Rational> r{Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
    return r;
}

void coin_group(GoldenGroup& g, const std::filesystem::path& dir)
{
    Recorder check(g);
    const SMSpace s = io::load_sm_space(dir / "coin.space");
    const PointId p0 = s.id("0");
    const PointId p1 = s.id("1");
    const Ground& ground = s.ground();
    const DistFn& f = s.dist(p0, p1);

    check("F_01(1)", "0", to_string(f(1)));
    check("F_01(3/2)", "1", to_string(f(Rational(3, 2))));
    check("G_01(2)", "0", to_string(TailFn(f)(2)));
    check("threshold(0,1)", "1", to_string(threshold(s, p0, p1).value));

    for (PointId p : {p0, p1}) {
        for (const auto& u : probe_radii()) {
            for (const auto& v : probe_radii()) {
                const bool small = u <= 1 && v <= 1;
                const std::string expected = small ? "{" + s.label(p) + "}" : "{0, 1}";
                check("N_" + s.label(p) + "(" + to_string(u) + "," + to_string(v) + ")", expected,
                      ground.format(sphere(s, p, u, v)));
            }
        }
    }
    check("family at 0", "[{0}, {0, 1}]", family_text(ground, sphere_family(s, p0)));
    check("family at 1", "[{1}, {0, 1}]", family_text(ground, sphere_family(s, p1)));
    check("N(Z), Z = {(1/2,1/2)}", "[{0}, {1}]",
          family_text(ground, sphere_collection(s, {{Rational(1, 2), Rational(1, 2)}})));
    check("SM-I..SM-IV", "pass", passed_text(check_sm_axioms(s).ok()));
    check("sphere system type", "Top", to_string(classify(sphere_system(s)).verdict));
}

void dice_group(GoldenGroup& g, const std::filesystem::path& dir)
{
    Recorder check(g);
    const SMSpace s = io::load_sm_space(dir / "dice.space");
    const std::size_t n = s.size();

    // Delta_k from |p - q| <= k, computed from the labels alone.
    auto delta = [&](long k) {
        PairSet out(n);
        for (PointId p = 0; p < n; ++p)
            for (PointId q = 0; q < n; ++q)
                if (std::abs(std::stol(s.label(p)) - std::stol(s.label(q))) <= k)
                    out.insert(p, q);
        return out;
    };

    for (long k = 1; k <= 5; ++k)
        check("threshold(1," + std::to_string(1 + k) + ")", std::to_string(k),
              to_string(threshold(s, s.id("1"), s.id(std::to_string(1 + k))).value));
    const DistFn& f16 = s.dist(s.id("1"), s.id("6"));
    check("F_16(5)", "0", to_string(f16(5)));
    check("F_16(6)", "1", to_string(f16(6)));

    const Rational half(1, 2);
    const std::vector<std::pair<Rational, std::size_t>> chain{
        {Rational(1, 2), 6}, {Rational(3, 2), 16}, {Rational(5, 2), 24},
        {Rational(7, 2), 30}, {Rational(9, 2), 34}, {Rational(6), 36}};
    for (std::size_t k = 0; k < chain.size(); ++k) {
        const auto& [u, count] = chain[k];
        const PairSet got = entourage(s, u, half);
        const std::string name = "U(" + to_string(u) + ",1/2)";
        check(name + " size", std::to_string(count), std::to_string(got.size()));
        check(name + " = Delta_" + std::to_string(k), pairs_text(s, delta(static_cast<long>(k))), pairs_text(s, got));
    }

    const auto coll = entourage_collection(s, {{Rational(3, 2), half}, {Rational(5, 2), half}});
    std::string got;
    for (const auto& e : coll)
        got += (got.empty() ? "" : "; ") + pairs_text(s, e);
    check("U(Z), Z = {(3/2,1/2),(5/2,1/2)}", pairs_text(s, delta(1)) + "; " + pairs_text(s, delta(2)), got);

    check("family at 1", "[{1}, {1, 2}, {1, 2, 3}, {1, 2, 3, 4}, {1, 2, 3, 4, 5}, {1, 2, 3, 4, 5, 6}]",
          family_text(s.ground(), sphere_family(s, s.id("1"))));
    check("SM-I..SM-IV", "pass", passed_text(check_sm_axioms(s).ok()));
    check("Menger, T(a,b) = ab", "pass", passed_text(check_menger(s, TNorm::product()).ok()));
}

void ecart_group(GoldenGroup& g, const std::filesystem::path& dir, std::size_t window)
{
    Recorder check(g);
    const GEcart e = io::load_ecart(dir / "ecart3.space", window);
    const Ground& ground = e.domain();
    const Poset& order = e.range();

    // Expected f-sphere tables, indexed by f = 0..10.
    auto table = [](std::vector<std::pair<int, std::string>> rows) {
        std::vector<std::string> out(11);
        for (int f = 0; f <= 10; ++f)
            for (const auto& [from, text] : rows)
                if (f >= from)
                    out[f] = text;
        return out;
    };
    const std::vector<std::pair<PointId, std::vector<std::string>>> cases{
        {1, table({{0, "{}"}, {1, "{1}"}, {2, "S \\ {2, 3}"}, {3, "S \\ {3}"}, {4, "S"}})},
        {2, table({{0, "{}"}, {1, "{2}"}, {2, "S \\ {1, 3}"}, {5, "S \\ {3}"}, {7, "S"}})},
        {3, table({{0, "{}"}, {1, "{3}"}, {2, "S \\ {2}"}, {3, "S"}})},
        {4, table({{0, "{}"}, {1, "S \\ {1, 2, 3}"}, {2, "S"}})},
        {window, table({{0, "{}"}, {1, "S \\ {1, 2, 3}"}, {2, "S"}})},
    };
    for (const auto& [p, expected] : cases)
        for (std::uint64_t f = 0; f <= 10; ++f)
            check("N_" + std::to_string(p) + "(" + std::to_string(f) + ")", expected[f],
                  ground.format(ecart_sphere(e, p, Poset::nat(f))));

    const NeighborhoodSystem sys = ecart_system(e, order.parse("10"));
    check("family at 1", "[{1}, S \\ {2, 3}, S \\ {3}, S]", family_text(ground, sys.family(1)));
    check("family at 2", "[{2}, S \\ {1, 3}, S \\ {3}, S]", family_text(ground, sys.family(2)));
    check("family at 3", "[{3}, S \\ {2}, S]", family_text(ground, sys.family(3)));
    check("family at 4", "[S \\ {1, 2, 3}, S]", family_text(ground, sys.family(4)));
    check("N0", "pass", passed_text(check_N0(sys).passed));
}

void rsphere_group(GoldenGroup& g, const std::filesystem::path& dir)
{
    Recorder check(g);
    const SMSpace ramp = io::load_sm_space(dir / "ramp.space");
    const PointId p1 = ramp.id("1");
    const PointId p2 = ramp.id("2");
    const Rational quarter(1, 4);
    check("F_12(1/4)", "1/4", to_string(ramp.dist(p1, p2)(quarter)));
    check("G_12(1/4)", "3/4", to_string(TailFn(ramp.dist(p1, p2))(quarter)));
    check("N_1(2;1/4)", "{1}", ramp.ground().format(r_sphere(ramp, p1, p2, quarter)));

    const std::vector<Rational> us{Rational(1, 4), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2),
                                   Rational(5),    Rational(6),    Rational(10), Rational(11)};
    for (const char* file : {"coin.space", "dice.space", "ramp.space"}) {
        const SMSpace s = io::load_sm_space(dir / file);
        PointSet seen;
        for (PointId p = 0; p < s.size(); ++p)
            for (const auto& u : us)
                seen = seen.unite(r_sphere(s, p, p, u));
        check(std::string("N_p(p;u) on ") + file, "{}", s.ground().format(seen));
    }
}

} // namespace

const std::vector<std::string>& golden_group_names()
{
    static const std::vector<std::string> names{"coin", "dice", "ecart", "rsphere"};
    return names;
}

std::vector<GoldenGroup> run_golden(const std::filesystem::path& fixtures, const std::vector<std::string>& only,
                                    std::size_t window)
{
    const auto& names = golden_group_names();
    for (const auto& name : only)
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw DomainError("unknown example group '" + name + "'");
    if (window < 10)
        throw DomainError("the worked examples need a window of at least 10");

    const std::vector<std::pair<std::string, std::function<void(GoldenGroup&)>>> groups{
        {"coin", [&](GoldenGroup& g) { coin_group(g, fixtures); }},
        {"dice", [&](GoldenGroup& g) { dice_group(g, fixtures); }},
        {"ecart", [&](GoldenGroup& g) { ecart_group(g, fixtures, window); }},
        {"rsphere", [&](GoldenGroup& g) { rsphere_group(g, fixtures); }},
    };
    const std::vector<std::string> titles{"coin toss spheres", "die roll entourages",
                                          "f-spheres of a g-ecart on the naturals", "r-spheres on the ramp space"};
    std::vector<GoldenGroup> out;
    for (std::size_t i = 0; i < groups.size(); ++i) {
        const auto& [name, run] = groups[i];
        if (!only.empty() && std::find(only.begin(), only.end(), name) == only.end())
            continue;
        GoldenGroup g{name, titles[i], {}, {}};
        try {
            run(g);
        } catch (const Error& e) {
            g.error = e.what();
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace smtop

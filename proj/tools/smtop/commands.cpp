#include "commands.hpp"

#include <algorithm>
#include <sstream>
#include <variant>

#include <smtop/error.hpp>
#include <smtop/neighborhood.hpp>
#include <smtop/product.hpp>
#include <smtop/worked_examples.hpp>

namespace smtop::cli {

namespace {

using io::Json;
using AnyDoc = std::variant<SMSpace, GEcart, NeighborhoodSystem, TNorm>;

template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const SchemaError& e) {
        throw SchemaError(path + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path + ": " + e.what());
    }
}

AnyDoc load_any(const Context& ctx, const std::string& path)
{
    const Json j = io::read_json(path);
    return at_path(path, [&]() -> AnyDoc {
        if (j.is_object() && j.contains("families"))
            return io::system_from_json(j);
        if (j.is_object() && j.contains("grid"))
            return io::tnorm_from_json(j);
        auto doc = io::space_from_json(j, ctx.window);
        if (auto* s = std::get_if<SMSpace>(&doc))
            return std::move(*s);
        return std::get<GEcart>(std::move(doc));
    });
}

SMSpace load_sm(const Context& ctx, const std::string& path)
{
    auto doc = load_any(ctx, path);
    if (auto* s = std::get_if<SMSpace>(&doc))
        return std::move(*s);
    throw SchemaError(path + ": expected a space file with an 'entries' or 'metric' block");
}

GEcart load_ecart(const Context& ctx, const std::string& path)
{
    auto doc = load_any(ctx, path);
    if (auto* g = std::get_if<GEcart>(&doc))
        return std::move(*g);
    throw SchemaError(path + ": expected a space file with an 'ecart' block");
}

NeighborhoodSystem system_of(AnyDoc doc, const std::string& path, const SystemSource& src)
{
    if (auto* sys = std::get_if<NeighborhoodSystem>(&doc))
        return std::move(*sys);
    if (auto* g = std::get_if<GEcart>(&doc))
        return ecart_system(*g, src.cap);
    if (auto* s = std::get_if<SMSpace>(&doc)) {
        if (src.from == "spheres")
            return sphere_system(*s);
        if (src.from == "r")
            return r_system(*s);
        throw DomainError("unknown system source '" + src.from + "', expected spheres or r");
    }
    throw SchemaError(path + ": a t-norm file does not describe a neighborhood system");
}

NeighborhoodSystem load_system(const Context& ctx, const std::string& path, const SystemSource& src)
{
    return system_of(load_any(ctx, path), path, src);
}

TNorm pick_tnorm(const Context& ctx)
{
    if (ctx.tnorm == "product")
        return TNorm::product();
    if (ctx.tnorm == "min" || ctx.tnorm == "minimum")
        return TNorm::minimum();
    return io::load_tnorm(ctx.tnorm);
}

PointId point(const Ground& g, const std::string& label)
{
    auto id = g.find(label);
    if (!id)
        throw DomainError("unknown point '" + label + "'");
    return *id;
}

PointSet parse_set(const Ground& g, std::string text)
{
    std::erase_if(text, [](char c) { return c == '{' || c == '}' || c == ' '; });
    PointSet out;
    std::istringstream in(text);
    for (std::string item; std::getline(in, item, ',');)
        if (!item.empty())
            out.insert(point(g, item));
    return out;
}

Json family_json(const Ground& g, const std::vector<PointSet>& family)
{
    Json out = Json::array();
    for (const auto& s : family)
        out.push_back(io::to_json(g, s));
    return out;
}

std::string pairs_line(const SMSpace& s, const PairSet& pairs)
{
    std::string text;
    for (const auto& [p, q] : pairs.pairs())
        text += (text.empty() ? "" : " ") + ("(" + s.label(p) + "," + s.label(q) + ")");
    return text;
}

std::vector<Rational> tnorm_grid(const TNorm& t)
{
    auto grid = default_grid();
    grid.insert(grid.end(), t.grid().begin(), t.grid().end());
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

Output check_space(const Context& ctx, const SMSpace& s)
{
    Output out;
    const TNorm t = pick_tnorm(ctx);
    const SmReport axioms = check_sm_axioms(s);
    const MengerReport menger = check_menger(s, t);
    out.line("space: " + std::to_string(s.size()) + " points, " + std::to_string(s.functions().size()) +
             " distinct distribution functions");
    render_sm_report(out, s, axioms);
    out.line("t-norm: " + t.name());
    render_menger(out, s, menger);
    out.ok = axioms.ok() && menger.ok();
    out.json = {{"kind", "space"},
                {"points", s.ground().labels()},
                {"axioms", io::to_json(s, axioms)},
                {"tnorm", t.name()},
                {"menger", io::to_json(s, menger)},
                {"ok", out.ok}};
    return out;
}

void render_comparison(Output& out, const NeighborhoodSystem& sys, const ComparisonReport& c, Json& json)
{
    const Ground& g = sys.ground();
    out.line("versus box of factor systems: " + to_string(c.relation) + (c.identical ? " (identical)" : ""));
    Json gaps = Json::object();
    if (c.left_gap) {
        out.line("  box neighborhood of " + g.label(c.left_gap->first) + " with no direct one inside: " +
                 g.format(c.left_gap->second));
        gaps["left"] = {{"point", g.label(c.left_gap->first)}, {"set", io::to_json(g, c.left_gap->second)}};
    }
    if (c.right_gap) {
        out.line("  direct neighborhood of " + g.label(c.right_gap->first) + " with no box inside: " +
                 g.format(c.right_gap->second));
        gaps["right"] = {{"point", g.label(c.right_gap->first)}, {"set", io::to_json(g, c.right_gap->second)}};
    }
    json["versus_box"] = {{"relation", to_string(c.relation)}, {"identical", c.identical}, {"gaps", gaps}};
}

Output product_sm(const Context& ctx, const SMSpace& a, const SMSpace& b, const std::string& emit)
{
    (void)ctx;
    Output out;
    if (emit == "axioms") {
        const auto r = verify_product_axioms(a, b);
        render_sm_report(out, a, r.left, "left ");
        render_sm_report(out, b, r.right, "right ");
        out.json = {{"left", io::to_json(a, r.left)}, {"right", io::to_json(b, r.right)}, {"product", nullptr}};
        if (r.product) {
            const SMSpace s = product_space(a, b);
            render_sm_report(out, s, *r.product, "product ");
            out.json["product"] = io::to_json(s, *r.product);
        } else {
            out.line("product: not checked, a factor violates the axioms");
        }
        out.ok = r.ok();
        return out;
    }
    if (emit == "menger") {
        const auto r = verify_product_menger(a, b);
        render_menger(out, a, r.left, "left ");
        render_menger(out, b, r.right, "right ");
        out.json = {{"tnorm", "product"}, {"left", io::to_json(a, r.left)}, {"right", io::to_json(b, r.right)},
                    {"product", nullptr}};
        if (r.product) {
            const SMSpace s = product_space(a, b);
            render_menger(out, s, *r.product, "product ");
            out.json["product"] = io::to_json(s, *r.product);
        } else {
            out.line("product: not checked, factor violation");
        }
        out.ok = r.ok();
        return out;
    }
    if (emit == "r") {
        const auto r = verify_r_product(a, b);
        out.json = {{"factors_ok", r.factors_ok()}};
        if (!r.factors_ok()) {
            render_sm_report(out, a, r.left, "left ");
            render_sm_report(out, b, r.right, "right ");
            out.line("product: not checked, a factor violates the axioms");
            out.ok = false;
            return out;
        }
        render_system(out, *r.system);
        render_classification(out, *r.system, *r.classification);
        out.json["system"] = io::to_json(*r.system);
        out.json["classification"] = io::to_json(*r.system, *r.classification);
        render_comparison(out, *r.system, *r.versus_box, out.json);
        out.ok = r.ok();
        return out;
    }

    const SMSpace s = product_space(a, b);
    if (emit == "space") {
        for (PointId p = 0; p < s.size(); ++p)
            for (PointId q = p + 1; q < s.size(); ++q)
                out.line(s.label(p) + " " + s.label(q) + ": " + describe(s.dist(p, q)));
        out.json = io::to_json(s);
        return out;
    }
    const NeighborhoodSystem sys = sphere_system(s);
    if (emit == "spheres") {
        render_system(out, sys);
        out.json = io::to_json(sys);
        return out;
    }
    const auto c = smtop::classify(sys);
    render_classification(out, sys, c);
    out.json = io::to_json(sys, c);
    out.ok = c.verdict != GType::NotV;
    return out;
}

Output system_output(const NeighborhoodSystem& sys, const std::string& emit)
{
    Output out;
    if (emit == "classification") {
        const auto c = smtop::classify(sys);
        render_classification(out, sys, c);
        out.json = io::to_json(sys, c);
        out.ok = c.verdict != GType::NotV;
    } else {
        render_system(out, sys);
        out.json = io::to_json(sys);
    }
    return out;
}

void require_emit(const std::string& emit, std::initializer_list<const char*> allowed, const char* what)
{
    for (const char* a : allowed)
        if (emit == a)
            return;
    throw DomainError("--emit " + emit + " is not available for " + what);
}

} // namespace

Output validate(const Context& ctx, const std::string& path)
{
    auto doc = load_any(ctx, path);
    if (auto* s = std::get_if<SMSpace>(&doc))
        return check_space(ctx, *s);

    Output out;
    if (auto* g = std::get_if<GEcart>(&doc)) {
        const Ground& ground = g->domain();
        out.line(ground.is_finite() ? "g-ecart over " + std::to_string(ground.size()) + " points"
                                    : "g-ecart over the naturals, window " + std::to_string(ground.window()));
        out.line("diagonal: least element");
        out.json = {{"kind", "ecart"}, {"finite", ground.is_finite()}, {"size", ground.size()}, {"ok", true}};
    } else if (auto* sys = std::get_if<NeighborhoodSystem>(&doc)) {
        out.line("system over " + std::to_string(sys->points().size()) + " points");
        render_system(out, *sys);
        out.json = {{"kind", "system"}, {"system", io::to_json(*sys)}, {"ok", true}};
    } else {
        const TNorm& t = std::get<TNorm>(doc);
        const auto r = check_axioms(t, tnorm_grid(t));
        out.line("t-norm table on " + std::to_string(t.grid().size()) + " grid points");
        render_tnorm(out, r);
        out.ok = r.ok();
        out.json = {{"kind", "tnorm"}, {"report", io::to_json(r)}, {"ok", out.ok}};
    }
    return out;
}

Output sphere(const Context& ctx, const std::string& path, const std::string& p, const std::string& u,
              const std::string& v)
{
    const SMSpace s = load_sm(ctx, path);
    const Rational ru = parse_rational(u);
    const Rational rv = parse_rational(v);
    const PointSet set = smtop::sphere(s, s.id(p), ru, rv);
    Output out;
    out.line("N_" + p + "(" + to_string(ru) + "," + to_string(rv) + ") = " + set_text(s.ground(), set));
    out.json = {{"p", p}, {"u", to_string(ru)}, {"v", to_string(rv)}, {"set", io::to_json(s.ground(), set)}};
    return out;
}

Output entourage(const Context& ctx, const std::string& path, const std::string& u, const std::string& v)
{
    const SMSpace s = load_sm(ctx, path);
    const Rational ru = parse_rational(u);
    const Rational rv = parse_rational(v);
    const PairSet pairs = smtop::entourage(s, ru, rv);
    Output out;
    out.line("U(" + to_string(ru) + "," + to_string(rv) + "): " + std::to_string(pairs.size()) + " pairs");
    out.line(pairs_line(s, pairs));
    out.json = {{"u", to_string(ru)}, {"v", to_string(rv)}, {"size", pairs.size()}, {"pairs", io::to_json(s, pairs)}};
    return out;
}

Output ecart_sphere(const Context& ctx, const std::string& path, const std::string& p, const std::string& f)
{
    const GEcart g = load_ecart(ctx, path);
    const PosetElement fe = g.range().parse(f);
    const PointSet set = smtop::ecart_sphere(g, point(g.domain(), p), fe);
    Output out;
    out.line("N_" + p + "(" + g.range().format(fe) + ") = " + set_text(g.domain(), set));
    out.json = {{"p", p}, {"f", g.range().format(fe)}, {"set", io::to_json(g.domain(), set)}};
    return out;
}

Output r_sphere(const Context& ctx, const std::string& path, const std::string& p, const std::string& r,
                const std::string& u)
{
    const SMSpace s = load_sm(ctx, path);
    const Rational ru = parse_rational(u);
    const PointSet set = smtop::r_sphere(s, s.id(p), s.id(r), ru);
    Output out;
    out.line("N_" + p + "(" + r + ";" + to_string(ru) + ") = " + set_text(s.ground(), set));
    out.json = {{"p", p}, {"r", r}, {"u", to_string(ru)}, {"set", io::to_json(s.ground(), set)}};
    return out;
}

Output family(const Context& ctx, const std::string& path, const std::optional<std::string>& p,
              const SystemSource& src)
{
    const NeighborhoodSystem sys = load_system(ctx, path, src);
    Output out;
    if (!p) {
        render_system(out, sys);
        out.json = io::to_json(sys);
        return out;
    }
    const PointId id = point(sys.ground(), *p);
    if (!sys.carries(id))
        throw DomainError("point '" + *p + "' lies outside the window");
    out.line(*p + ": " + family_text(sys.ground(), sys.family(id)));
    out.json = {{"p", *p}, {"family", family_json(sys.ground(), sys.family(id))}};
    return out;
}

Output classify(const Context& ctx, const std::string& path, const SystemSource& src)
{
    return system_output(load_system(ctx, path, src), "classification");
}

Output closure(const Context& ctx, const std::string& path, const std::string& set, const SystemSource& src,
               bool interior)
{
    const NeighborhoodSystem sys = load_system(ctx, path, src);
    const PointSet e = parse_set(sys.ground(), set);
    const PointSet result = interior ? smtop::interior(sys, e) : smtop::closure(sys, e);
    Output out;
    out.line(std::string(interior ? "interior" : "closure") + " of " + sys.ground().format(e) + " = " +
             sys.ground().format(result));
    out.json = {{"operation", interior ? "interior" : "closure"},
                {"set", io::to_json(sys.ground(), e)},
                {"result", io::to_json(sys.ground(), result)}};
    return out;
}

Output symmetric(const Context& ctx, const std::string& path, const SystemSource& src)
{
    const NeighborhoodSystem sys = load_system(ctx, path, src);
    const auto r = is_symmetric(sys);
    Output out;
    out.ok = r.symmetric;
    if (r.symmetric) {
        out.line("symmetric");
        out.json = {{"symmetric", true}, {"witness", nullptr}};
    } else {
        const auto& g = sys.ground();
        const auto [p, q] = *r.witness;
        out.line("not symmetric: " + g.label(p) + " is in cl{" + g.label(q) + "} but " + g.label(q) + " is not in cl{" +
                 g.label(p) + "}");
        out.json = {{"symmetric", false}, {"witness", {g.label(p), g.label(q)}}};
    }
    return out;
}

Output product(const Context& ctx, const std::string& a, const std::string& b, const std::string& emit,
               std::uint64_t cap)
{
    auto da = load_any(ctx, a);
    auto db = load_any(ctx, b);
    if (da.index() != db.index())
        throw SchemaError("both operands must be of the same kind (spaces, g-ecarts or systems)");
    if (auto* s1 = std::get_if<SMSpace>(&da)) {
        require_emit(emit, {"space", "spheres", "classification", "axioms", "menger", "r"}, "SM spaces");
        return product_sm(ctx, *s1, std::get<SMSpace>(db), emit);
    }
    if (auto* g1 = std::get_if<GEcart>(&da)) {
        require_emit(emit, {"spheres", "classification"}, "g-ecarts");
        return system_output(ecart_system(product_ecart(*g1, std::get<GEcart>(db)), cap), emit);
    }
    if (auto* sys1 = std::get_if<NeighborhoodSystem>(&da)) {
        require_emit(emit, {"spheres", "classification"}, "systems");
        return system_output(box_system(*sys1, std::get<NeighborhoodSystem>(db)), emit);
    }
    throw SchemaError("t-norm tables have no product");
}

Output verify_theorems(const Context& ctx, std::size_t trials, std::uint64_t seed)
{
    (void)ctx;
    Output out;
    out.json = {{"seed", seed}, {"trials", trials}, {"types", Json::array()}};
    for (const auto& t : verify_box_theorems(trials, seed)) {
        std::string verdicts;
        Json counts = Json::object();
        for (std::size_t k = 0; k < t.factor_verdicts.size(); ++k) {
            if (t.factor_verdicts[k] == 0)
                continue;
            const auto name = to_string(static_cast<GType>(k));
            verdicts += (verdicts.empty() ? "" : ", ") + name + " " + std::to_string(t.factor_verdicts[k]);
            counts[name] = t.factor_verdicts[k];
        }
        out.line(to_string(t.type) + ": " + pass_fail(t.ok()) + " " + std::to_string(t.preserved) + "/" +
                 std::to_string(t.pairs) + " box products preserved (factors: " + verdicts + ")");
        Json entry = {{"type", to_string(t.type)}, {"pairs", t.pairs}, {"preserved", t.preserved},
                      {"factor_verdicts", counts}, {"counterexample", nullptr}};
        if (t.counterexample) {
            out.line("  counterexample:");
            Output sub;
            render_system(sub, t.counterexample->first);
            render_system(sub, t.counterexample->second);
            for (auto& l : sub.lines)
                out.line("    " + l);
            entry["counterexample"] = {io::to_json(t.counterexample->first), io::to_json(t.counterexample->second)};
        }
        out.json["types"].push_back(std::move(entry));
        out.ok = out.ok && t.ok();
    }
    out.json["ok"] = out.ok;
    return out;
}

Output verify_space(const Context& ctx, const std::string& path) { return check_space(ctx, load_sm(ctx, path)); }

Output verify_product(const Context& ctx, const std::string& a, const std::string& b, std::uint64_t cap)
{
    auto da = load_any(ctx, a);
    auto db = load_any(ctx, b);
    if (da.index() != db.index())
        throw SchemaError("both operands must be of the same kind (spaces, g-ecarts or systems)");
    Output out;
    if (auto* s1 = std::get_if<SMSpace>(&da)) {
        const SMSpace& s2 = std::get<SMSpace>(db);
        Output axioms = product_sm(ctx, *s1, s2, "axioms");
        Output menger = product_sm(ctx, *s1, s2, "menger");
        for (auto* part : {&axioms, &menger})
            out.lines.insert(out.lines.end(), part->lines.begin(), part->lines.end());
        const auto r = verify_r_product(*s1, s2);
        Json rjson = nullptr;
        if (r.classification) {
            out.line("r-product N0: " + pass_fail(r.classification->n0.passed) + ", verdict " +
                     to_string(r.classification->verdict));
            out.line("r-product versus box: " + to_string(r.versus_box->relation));
            rjson = {{"verdict", to_string(r.classification->verdict)},
                     {"N0", r.classification->n0.passed},
                     {"versus_box", to_string(r.versus_box->relation)}};
        }
        out.ok = axioms.ok && menger.ok && r.ok();
        out.json = {{"axioms", axioms.json}, {"menger", menger.json}, {"r_product", rjson}, {"ok", out.ok}};
        return out;
    }
    if (auto* g1 = std::get_if<GEcart>(&da)) {
        const auto r = verify_ecart_product(*g1, std::get<GEcart>(db), cap);
        out.line("sphere/box identity: " + pass_fail(!r.mismatch) + " (" + std::to_string(r.spheres_checked) +
                 " spheres)");
        Json mismatch = nullptr;
        if (r.mismatch) {
            const Ground& g = r.product.domain();
            const auto& m = *r.mismatch;
            out.line("  at " + g.label(m.point) + ", f = " + r.product.range().format(m.f) + ": expected " +
                     g.format(m.expected) + ", got " + g.format(m.actual));
            mismatch = {{"point", g.label(m.point)},
                        {"f", r.product.range().format(m.f)},
                        {"expected", io::to_json(g, m.expected)},
                        {"actual", io::to_json(g, m.actual)}};
        }
        out.line("product g-ecart system: " + to_string(r.classification.verdict) + " (type V: " +
                 pass_fail(meets(r.classification.verdict, GType::V)) + ")");
        out.ok = r.ok();
        out.json = {{"spheres_checked", r.spheres_checked},
                    {"mismatch", mismatch},
                    {"verdict", to_string(r.classification.verdict)},
                    {"ok", out.ok}};
        return out;
    }
    if (auto* sys1 = std::get_if<NeighborhoodSystem>(&da)) {
        const auto& sys2 = std::get<NeighborhoodSystem>(db);
        out.json = {{"types", Json::array()}};
        for (GType t : {GType::V, GType::VAlpha, GType::VD, GType::Top}) {
            const auto r = verify_type_preservation(*sys1, sys2, t);
            std::string text = to_string(t) + ": ";
            if (!r.precondition_met()) {
                text += "precondition unmet (factors " + to_string(r.left.verdict) + ", " +
                        to_string(r.right.verdict) + ")";
            } else {
                text += pass_fail(r.preserved()) + " (box " + to_string(r.product->verdict) + ")";
                out.ok = out.ok && r.preserved();
            }
            out.line(text);
            out.json["types"].push_back({{"type", to_string(t)},
                                         {"precondition_met", r.precondition_met()},
                                         {"preserved", r.preserved()}});
        }
        out.json["ok"] = out.ok;
        return out;
    }
    throw SchemaError("t-norm tables have no product");
}

Output verify_tnorm(const Context& ctx)
{
    const TNorm t = pick_tnorm(ctx);
    const auto r = check_axioms(t, tnorm_grid(t));
    Output out;
    out.line("t-norm: " + t.name());
    render_tnorm(out, r);
    out.ok = r.ok();
    out.json = {{"tnorm", t.name()}, {"report", io::to_json(r)}, {"ok", out.ok}};
    return out;
}

Output paper_examples(const Context& ctx, const std::string& fixtures, const std::vector<std::string>& groups)
{
    Output out;
    out.json = {{"groups", Json::array()}};
    for (const auto& g : run_golden(fixtures, groups, ctx.window)) {
        out.line("== " + g.name + ": " + g.title);
        Json checks = Json::array();
        if (!g.error.empty())
            out.line("ERROR " + g.error);
        for (const auto& c : g.checks) {
            if (c.passed())
                out.line("PASS " + c.name + " = " + c.actual);
            else
                out.line("FAIL " + c.name + ": expected " + c.expected + ", got " + c.actual);
            checks.push_back({{"name", c.name}, {"passed", c.passed()}, {"expected", c.expected}, {"actual", c.actual}});
        }
        const std::size_t passed = g.checks.size() - g.failures();
        out.line(g.name + ": " + std::to_string(passed) + "/" + std::to_string(g.checks.size()) + " checks passed" +
                 (g.ok() ? "" : " -- group FAILED"));
        out.json["groups"].push_back({{"group", g.name},
                                      {"ok", g.ok()},
                                      {"error", g.error.empty() ? Json(nullptr) : Json(g.error)},
                                      {"checks", std::move(checks)}});
        out.ok = out.ok && g.ok();
    }
    out.json["ok"] = out.ok;
    return out;
}

} // namespace smtop::cli

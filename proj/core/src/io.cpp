#include "smtop/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "smtop/error.hpp"

namespace smtop::io {

namespace {

// A JSON value together with its location in the document, for diagnostics.
class Node {
public:
    Node(const Json& j, std::string path) : j_(&j), path_(std::move(path)) {}

    const Json& json() const { return *j_; }
    const std::string& path() const { return path_; }

    [[noreturn]] void schema(const std::string& msg) const { throw SchemaError(where() + msg); }
    [[noreturn]] void invalid(const std::string& msg) const { throw ValidationError(where() + msg); }

    bool has(const char* key) const { return j_->is_object() && j_->contains(key); }

    Node at(const char* key) const
    {
        if (!j_->is_object())
            schema("expected an object");
        auto it = j_->find(key);
        if (it == j_->end())
            schema(std::string("missing field '") + key + "'");
        return {*it, child(key)};
    }

    std::optional<Node> find(const char* key) const
    {
        if (!has(key))
            return std::nullopt;
        return at(key);
    }

    std::size_t size() const
    {
        if (!j_->is_array())
            schema("expected an array");
        return j_->size();
    }

    Node operator[](std::size_t i) const { return {(*j_)[i], path_ + "[" + std::to_string(i) + "]"}; }

    std::string str() const
    {
        if (!j_->is_string())
            schema("expected a string");
        return j_->get<std::string>();
    }

    // Labels and poset elements may be written as strings or integers.
    std::string token() const
    {
        if (j_->is_number_integer())
            return j_->dump();
        return str();
    }

    Rational rational() const
    {
        if (!j_->is_string() && !j_->is_number_integer())
            schema("expected a rational string or an integer");
        try {
            return parse_rational(token());
        } catch (const ParseError& e) {
            throw ParseError(where() + e.what());
        }
    }

    std::vector<std::string> tokens() const
    {
        std::vector<std::string> out;
        for (std::size_t i = 0; i < size(); ++i)
            out.push_back((*this)[i].token());
        return out;
    }

private:
    std::string child(const char* key) const { return path_.empty() ? key : path_ + "." + key; }
    std::string where() const { return path_.empty() ? std::string() : path_ + ": "; }

    const Json* j_;
    std::string path_;
};

// Runs `f`, prefixing ValidationError and DomainError messages with the node path.
template <class F>
auto located(const Node& n, F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const ValidationError& e) {
        n.invalid(e.what());
    } catch (const DomainError& e) {
        n.invalid(e.what());
    }
}

void check_version(const Node& root)
{
    if (!root.json().is_object())
        root.schema("expected a JSON object at the top level");
    if (auto v = root.find("version")) {
        if (!v->json().is_number_integer() || v->json().get<int>() != kFormatVersion)
            v->schema("unsupported version, expected " + std::to_string(kFormatVersion));
    }
}

DistFn fn_from_node(const Node& n)
{
    const std::string kind = n.at("kind").str();
    if (kind == "one")
        return DistFn::one();
    if (kind == "step") {
        const Node at = n.at("at");
        const Rational a = at.rational();
        return located(at, [&] { return DistFn::step(a); });
    }
    if (kind == "ramp") {
        const Node d = n.at("d");
        const Rational len = d.rational();
        return located(d, [&] { return DistFn::ramp(len); });
    }
    if (kind == "pieces") {
        const Node list = n.at("pieces");
        std::vector<Piece> pieces;
        for (std::size_t i = 0; i < list.size(); ++i) {
            const Node item = list[i];
            Piece piece;
            piece.from = item.at("from").rational();
            const Node to = item.at("to");
            if (!to.json().is_null())
                piece.to = to.rational();
            const Node poly = item.at("poly");
            if (poly.size() == 0 || poly.size() > 3)
                poly.schema("expected 1 to 3 coefficients");
            Rational* coeffs[] = {&piece.poly.c0, &piece.poly.c1, &piece.poly.c2};
            for (std::size_t k = 0; k < poly.size(); ++k)
                *coeffs[k] = poly[k].rational();
            pieces.push_back(std::move(piece));
        }
        return located(list, [&] { return DistFn::from_pieces(std::move(pieces)); });
    }
    n.at("kind").schema("unknown function kind '" + kind + "', expected step, ramp, one or pieces");
}

std::vector<std::string> point_labels(const Node& n)
{
    const Node pts = n.at("points");
    std::vector<std::string> labels = pts.tokens();
    if (labels.empty())
        pts.invalid("a space needs at least one point");
    return labels;
}

SMSpace space_from_entries(const Node& root)
{
    auto labels = point_labels(root);
    const Node list = root.at("entries");
    std::vector<SpaceEntry> entries;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const Node e = list[i];
        entries.push_back({e.at("p").token(), e.at("q").token(), fn_from_node(e.at("fn"))});
    }
    return located(list, [&] { return SMSpace::build(std::move(labels), entries); });
}

SMSpace space_from_metric(const Node& root)
{
    const Node m = root.at("metric");
    auto labels = point_labels(m.has("points") ? m : root);
    const std::string kind_name = m.at("kind").str();
    MetricKind kind{};
    if (kind_name == "step")
        kind = MetricKind::Step;
    else if (kind_name == "ramp")
        kind = MetricKind::Ramp;
    else
        m.at("kind").schema("unknown metric kind '" + kind_name + "', expected step or ramp");

    const Node d = m.at("d");
    std::vector<std::vector<Rational>> matrix;
    if (d.json().is_string()) {
        if (d.str() != "abs")
            d.schema("expected \"abs\" or a distance matrix");
        matrix = located(d, [&] { return absolute_difference_metric(labels); });
    } else {
        for (std::size_t i = 0; i < d.size(); ++i) {
            const Node row = d[i];
            std::vector<Rational> values;
            for (std::size_t k = 0; k < row.size(); ++k)
                values.push_back(row[k].rational());
            matrix.push_back(std::move(values));
        }
    }
    return located(m, [&] { return SMSpace::from_metric(std::move(labels), matrix, kind); });
}

Poset poset_from_node(const Node& n)
{
    if (n.json().is_string()) {
        if (n.str() != "naturals")
            n.schema("expected \"naturals\" or an explicit poset");
        return Poset::naturals();
    }
    const std::string kind = n.has("kind") ? n.at("kind").str() : "explicit";
    if (kind == "naturals")
        return Poset::naturals();
    if (kind != "explicit")
        n.at("kind").schema("unknown poset kind '" + kind + "'");
    auto names = n.at("elements").tokens();
    std::vector<std::pair<std::string, std::string>> less;
    if (auto rel = n.find("less")) {
        for (std::size_t i = 0; i < rel->size(); ++i) {
            const Node pair = (*rel)[i];
            if (pair.size() != 2)
                pair.schema("expected a pair [a, b]");
            less.emplace_back(pair[0].token(), pair[1].token());
        }
    }
    const std::string least = n.at("least").token();
    return located(n, [&] { return Poset::finite(std::move(names), less, least); });
}

PosetElement element_from_node(const Poset& poset, const Node& n)
{
    const std::string text = n.token();
    try {
        return poset.parse(text);
    } catch (const ParseError& e) {
        throw ParseError(n.path() + ": " + e.what());
    } catch (const DomainError& e) {
        n.invalid(e.what());
    }
}

PointId ground_point(const Ground& g, const Node& n)
{
    const std::string label = n.token();
    auto id = g.find(label);
    if (!id)
        n.invalid("unknown point '" + label + "'");
    return *id;
}

GEcart ecart_from_node(const Node& root, std::size_t window)
{
    const Node e = root.at("ecart");
    const Node dom = e.at("domain");
    Ground ground;
    if (dom.json().is_string()) {
        if (dom.str() != "naturals")
            dom.schema("expected \"naturals\" or a list of point labels");
        ground = Ground::naturals(window);
    } else {
        auto labels = dom.tokens();
        if (labels.empty())
            dom.invalid("the domain needs at least one point");
        if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
            dom.invalid("duplicate point label");
        ground = Ground::finite(std::move(labels));
    }

    Poset poset = poset_from_node(e.at("poset"));
    GEcart::Rule rule;
    if (auto a = e.find("A")) {
        for (std::size_t i = 0; i < a->size(); ++i)
            rule.distinguished.push_back(ground_point(ground, (*a)[i]));
        std::sort(rule.distinguished.begin(), rule.distinguished.end());
        rule.distinguished.erase(std::unique(rule.distinguished.begin(), rule.distinguished.end()),
                                 rule.distinguished.end());
    }
    const Node defaults = e.at("defaults");
    rule.outside = element_from_node(poset, defaults.at("outside"));
    rule.mixed = element_from_node(poset, defaults.at("mixed"));
    rule.inside = defaults.has("inside") ? element_from_node(poset, defaults.at("inside")) : poset.least();
    if (auto table = e.find("table")) {
        for (std::size_t i = 0; i < table->size(); ++i) {
            const Node row = (*table)[i];
            const PointId p = ground_point(ground, row.at("p"));
            const PointId q = ground_point(ground, row.at("q"));
            if (!rule.table.emplace(std::make_pair(p, q), element_from_node(poset, row.at("value"))).second)
                row.invalid("pair given twice");
        }
    }

    if (!ground.is_finite())
        return located(e, [&] { return GEcart::rule(window, std::move(poset), std::move(rule)); });

    // Finite domain: expand the same rule into a dense table.
    const auto& a = rule.distinguished;
    auto in_a = [&](PointId p) { return std::binary_search(a.begin(), a.end(), p); };
    std::vector<PosetElement> values;
    for (auto p : ground.points()) {
        for (auto q : ground.points()) {
            if (p == q) {
                auto it = rule.table.find({p, q});
                values.push_back(it != rule.table.end() ? it->second : poset.least());
            } else if (auto it = rule.table.find({p, q}); it != rule.table.end()) {
                values.push_back(it->second);
            } else {
                const int inside = int(in_a(p)) + int(in_a(q));
                values.push_back(inside == 2 ? rule.inside : inside == 1 ? rule.mixed : rule.outside);
            }
        }
    }
    return located(e, [&] { return GEcart::dense(std::move(ground), std::move(poset), std::move(values)); });
}

Json rationals(const std::vector<Rational>& xs)
{
    Json out = Json::array();
    for (const auto& x : xs)
        out.push_back(to_string(x));
    return out;
}

Json labels_of(const SMSpace& s, const std::vector<PointId>& ids)
{
    Json out = Json::array();
    for (auto p : ids)
        out.push_back(s.label(p));
    return out;
}

Json optional_point(const Ground& g, const std::optional<PointId>& p)
{
    return p ? Json(g.label(*p)) : Json(nullptr);
}

Json optional_set(const Ground& g, const std::optional<PointSet>& s)
{
    return s ? to_json(g, *s) : Json(nullptr);
}

} // namespace

Json parse_json(std::string_view text, const std::string& origin)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

Json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError(path.string() + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), path.string());
}

DistFn fn_from_json(const Json& j) { return fn_from_node(Node(j, "")); }

SpaceDoc space_from_json(const Json& j, std::size_t window)
{
    const Node root(j, "");
    check_version(root);
    const int blocks = int(root.has("entries")) + int(root.has("metric")) + int(root.has("ecart"));
    if (blocks != 1)
        root.schema("exactly one of 'entries', 'metric' or 'ecart' must be present");
    if (root.has("entries"))
        return space_from_entries(root);
    if (root.has("metric"))
        return space_from_metric(root);
    return ecart_from_node(root, window);
}

NeighborhoodSystem system_from_json(const Json& j)
{
    const Node root(j, "");
    check_version(root);
    auto labels = point_labels(root);
    const Ground ground = Ground::finite(labels);
    if (std::set<std::string>(labels.begin(), labels.end()).size() != labels.size())
        root.at("points").invalid("duplicate point label");
    const Node fams = root.at("families");
    if (!fams.json().is_object())
        fams.schema("expected an object mapping point labels to families");
    for (const auto& [key, value] : fams.json().items())
        if (!ground.find(key))
            fams.invalid("family given for unknown point '" + key + "'");
    std::vector<std::vector<PointSet>> families(labels.size());
    for (PointId p = 0; p < labels.size(); ++p) {
        auto f = fams.find(labels[p].c_str());
        if (!f)
            continue;
        for (std::size_t i = 0; i < f->size(); ++i) {
            const Node set = (*f)[i];
            PointSet s;
            for (std::size_t k = 0; k < set.size(); ++k)
                s.insert(ground_point(ground, set[k]));
            families[p].push_back(std::move(s));
        }
    }
    return located(root, [&] { return NeighborhoodSystem(ground, std::move(families)); });
}

TNorm tnorm_from_json(const Json& j)
{
    const Node root(j, "");
    check_version(root);
    const Node g = root.at("grid");
    std::vector<Rational> grid;
    for (std::size_t i = 0; i < g.size(); ++i)
        grid.push_back(g[i].rational());
    const Node v = root.at("values");
    std::vector<std::vector<Rational>> values;
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::vector<Rational> row;
        for (std::size_t k = 0; k < v[i].size(); ++k)
            row.push_back(v[i][k].rational());
        values.push_back(std::move(row));
    }
    return located(root, [&] { return TNorm::table(std::move(grid), std::move(values)); });
}

SpaceDoc load_space(const std::filesystem::path& path, std::size_t window)
{
    const Json j = read_json(path);
    try {
        return space_from_json(j, window);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const SchemaError& e) {
        throw SchemaError(path.string() + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

SMSpace load_sm_space(const std::filesystem::path& path)
{
    auto doc = load_space(path, 1);
    if (auto* s = std::get_if<SMSpace>(&doc))
        return std::move(*s);
    throw SchemaError(path.string() + ": expected a space with an 'entries' or 'metric' block");
}

GEcart load_ecart(const std::filesystem::path& path, std::size_t window)
{
    auto doc = load_space(path, window);
    if (auto* g = std::get_if<GEcart>(&doc))
        return std::move(*g);
    throw SchemaError(path.string() + ": expected a space with an 'ecart' block");
}

NeighborhoodSystem load_system(const std::filesystem::path& path)
{
    const Json j = read_json(path);
    try {
        return system_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const SchemaError& e) {
        throw SchemaError(path.string() + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

TNorm load_tnorm(const std::filesystem::path& path)
{
    const Json j = read_json(path);
    try {
        return tnorm_from_json(j);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const SchemaError& e) {
        throw SchemaError(path.string() + ": " + e.what());
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

Json to_json(const DistFn& f)
{
    Json out = Json::array();
    for (const auto& piece : f.pieces()) {
        out.push_back({{"from", to_string(piece.from)},
                       {"to", piece.to ? Json(to_string(*piece.to)) : Json(nullptr)},
                       {"poly", rationals({piece.poly.c0, piece.poly.c1, piece.poly.c2})}});
    }
    return out;
}

Json to_json(const SMSpace& s)
{
    Json entries = Json::array();
    for (PointId p = 0; p < s.size(); ++p)
        for (PointId q = p + 1; q < s.size(); ++q)
            entries.push_back(
                {{"p", s.label(p)}, {"q", s.label(q)}, {"fn", {{"kind", "pieces"}, {"pieces", to_json(s.dist(p, q))}}}});
    return {{"version", kFormatVersion}, {"points", s.ground().labels()}, {"entries", std::move(entries)}};
}

Json to_json(const Ground& g, const PointSet& s)
{
    Json members = Json::array();
    for (auto p : s.ids())
        members.push_back(g.label(p));
    if (!s.is_cofinite())
        return members;
    Json view = Json::array();
    for (auto p : g.view(s))
        view.push_back(g.label(p));
    return {{"all_but", std::move(members)}, {"window", std::move(view)}};
}

Json to_json(const NeighborhoodSystem& sys)
{
    const Ground& g = sys.ground();
    Json points = Json::array();
    Json families = Json::object();
    for (auto p : sys.points()) {
        points.push_back(g.label(p));
        Json fam = Json::array();
        for (const auto& s : sys.family(p))
            fam.push_back(to_json(g, s));
        families[g.label(p)] = std::move(fam);
    }
    return {{"version", kFormatVersion}, {"points", std::move(points)}, {"families", std::move(families)}};
}

Json to_json(const NeighborhoodSystem& sys, const Classification& c)
{
    const Ground& g = sys.ground();
    return {{"verdict", to_string(c.verdict)},
            {"N0", {{"passed", c.n0.passed}, {"point", optional_point(g, c.n0.point)}, {"set", optional_set(g, c.n0.set)}}},
            {"N1",
             {{"passed", c.n1.passed},
              {"window_relative", c.n1.window_relative},
              {"point", optional_point(g, c.n1.point)},
              {"set", optional_set(g, c.n1.set)}}},
            {"N2",
             {{"passed", c.n2.passed},
              {"window_relative", c.n2.window_relative},
              {"point", optional_point(g, c.n2.point)},
              {"first", optional_set(g, c.n2.first)},
              {"second", optional_set(g, c.n2.second)}}}};
}

Json to_json(const SMSpace& s, const SmReport& r)
{
    Json axioms = Json::array();
    for (const auto& a : r.axioms)
        axioms.push_back({{"axiom", a.axiom},
                          {"passed", a.passed},
                          {"points", labels_of(s, a.points)},
                          {"abscissae", rationals(a.abscissae)},
                          {"detail", a.detail}});
    return {{"ok", r.ok()}, {"axioms", std::move(axioms)}};
}

Json to_json(const SMSpace& s, const MengerReport& r)
{
    Json witness = nullptr;
    if (r.witness) {
        const auto& w = *r.witness;
        witness = {{"p", s.label(w.p)},     {"q", s.label(w.q)},       {"r", s.label(w.r)},
                   {"x", to_string(w.x)},   {"y", to_string(w.y)},     {"lhs", to_string(w.lhs)},
                   {"rhs", to_string(w.rhs)}};
    }
    return {{"ok", r.ok()},
            {"triples_checked", r.triples_checked},
            {"violating_triples", r.violating_triples},
            {"witness", std::move(witness)}};
}

Json to_json(const TNormReport& r)
{
    Json axioms = Json::array();
    for (const auto& a : r.axioms)
        axioms.push_back(
            {{"axiom", a.axiom}, {"passed", a.passed}, {"witness", rationals(a.witness)}, {"detail", a.detail}});
    return {{"ok", r.ok()}, {"axioms", std::move(axioms)}};
}

Json to_json(const FnReport& r)
{
    Json violations = Json::array();
    for (const auto& v : r.violations)
        violations.push_back(
            {{"kind", to_string(v.kind)}, {"witness", rationals(v.witness)}, {"message", v.message}});
    return {{"ok", r.ok()}, {"violations", std::move(violations)}};
}

Json to_json(const SMSpace& s, const PairSet& pairs)
{
    Json out = Json::array();
    for (const auto& [p, q] : pairs.pairs())
        out.push_back({s.label(p), s.label(q)});
    return out;
}

} // namespace smtop::io

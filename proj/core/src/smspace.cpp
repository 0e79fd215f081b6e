#include "smtop/smspace.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "smtop/error.hpp"

namespace smtop {

PointId SMSpace::id(std::string_view label) const
{
    if (auto p = ground_.find(label))
        return *p;
    throw DomainError("unknown point '" + std::string(label) + "'");
}

SMSpace SMSpace::assemble(Ground ground, const std::vector<std::optional<DistFn>>& upper)
{
    SMSpace s;
    s.ground_ = std::move(ground);
    const std::size_t n = s.ground_.size();
    s.fns_.push_back(DistFn::one());
    s.table_.assign(n * n, 0);
    auto intern = [&](const DistFn& f) {
        for (std::size_t k = 0; k < s.fns_.size(); ++k)
            if (s.fns_[k] == f)
                return k;
        s.fns_.push_back(f);
        return s.fns_.size() - 1;
    };
    for (PointId p = 0; p < n; ++p) {
        for (PointId q = p + 1; q < n; ++q) {
            const auto k = intern(*upper[p * n + q]);
            s.table_[p * n + q] = k;
            s.table_[q * n + p] = k;
        }
    }
    return s;
}

SMSpace SMSpace::build(std::vector<std::string> labels, const std::vector<SpaceEntry>& entries)
{
    if (labels.empty())
        throw ValidationError("a space needs at least one point");
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j])
                throw ValidationError("duplicate label '" + labels[i] + "'");

    Ground ground = Ground::finite(std::move(labels));
    const std::size_t n = ground.size();
    auto lookup = [&](const std::string& label) {
        if (auto p = ground.find(label))
            return *p;
        throw ValidationError("entry names unknown point '" + label + "'");
    };

    std::vector<std::optional<DistFn>> upper(n * n);
    for (const auto& e : entries) {
        PointId p = lookup(e.p);
        PointId q = lookup(e.q);
        const std::string pair = "(" + e.p + "," + e.q + ")";
        if (p == q) {
            if (e.fn != DistFn::one())
                throw ValidationError("diagonal entry " + pair + " must be one()");
            continue;
        }
        if (p > q)
            std::swap(p, q);
        if (upper[p * n + q])
            throw ValidationError("pair " + pair + " given twice");
        const auto report = validate(e.fn);
        if (!report.ok()) {
            const auto& v = report.violations.front();
            throw ValidationError("invalid distribution function for pair " + pair + ": " + to_string(v.kind) +
                                  " (" + v.message + ")");
        }
        upper[p * n + q] = e.fn;
    }
    for (PointId p = 0; p < n; ++p)
        for (PointId q = p + 1; q < n; ++q)
            if (!upper[p * n + q])
                throw ValidationError("missing pair (" + ground.label(p) + "," + ground.label(q) + ")");
    return assemble(std::move(ground), upper);
}

SMSpace SMSpace::from_metric(std::vector<std::string> labels, const std::vector<std::vector<Rational>>& d,
                             MetricKind kind)
{
    const std::size_t n = labels.size();
    if (d.size() != n || std::any_of(d.begin(), d.end(), [&](const auto& row) { return row.size() != n; }))
        throw ValidationError("metric axiom: distance matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    auto pair = [&](std::size_t i, std::size_t j) { return "(" + labels[i] + "," + labels[j] + ")"; };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j && d[i][j] != 0)
                throw ValidationError("metric axiom: d" + pair(i, j) + " must be 0");
            if (i != j && d[i][j] <= 0)
                throw ValidationError("metric axiom: d" + pair(i, j) + " must be positive");
            if (d[i][j] != d[j][i])
                throw ValidationError("metric axiom: d" + pair(i, j) + " != d" + pair(j, i));
            for (std::size_t k = 0; k < n; ++k)
                if (d[i][k] > d[i][j] + d[j][k])
                    throw ValidationError("metric axiom: triangle inequality fails for " + labels[i] + ", " +
                                          labels[j] + ", " + labels[k]);
        }
    }
    std::vector<SpaceEntry> entries;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            entries.push_back({labels[i], labels[j],
                               kind == MetricKind::Step ? DistFn::step(d[i][j]) : DistFn::ramp(d[i][j])});
    return build(std::move(labels), entries);
}

std::vector<std::vector<Rational>> absolute_difference_metric(const std::vector<std::string>& labels)
{
    std::vector<Rational> at;
    for (const auto& l : labels)
        at.push_back(parse_rational(l));
    std::vector<std::vector<Rational>> d(labels.size(), std::vector<Rational>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = 0; j < labels.size(); ++j)
            d[i][j] = abs(at[i] - at[j]);
    return d;
}

Threshold threshold(const DistFn& f)
{
    for (const auto& piece : f.pieces()) {
        if (piece.poly == Poly::constant(1))
            return {{piece.from}, false};
        if (piece.to && piece.poly(*piece.to) == 1)
            return {{*piece.to}, true};
    }
    return {ExtRational::infinity(), false};
}

Threshold threshold(const SMSpace& s, PointId p, PointId q) { return threshold(s.dist(p, q)); }

bool SmReport::ok() const
{
    return std::all_of(axioms.begin(), axioms.end(), [](const SmAxiomResult& r) { return r.passed; });
}

const SmAxiomResult& SmReport::at(const std::string& axiom) const
{
    for (const auto& r : axioms)
        if (r.axiom == axiom)
            return r;
    throw DomainError("no axiom named " + axiom);
}

namespace {

// Abscissae (x, y) with F_pq(x) = F_qr(y) = 1 but F_pr(x + y) < 1, if any exist.
std::optional<std::pair<Rational, Rational>> sm4_counterexample(const Threshold& pq, const Threshold& qr,
                                                               const Threshold& pr)
{
    if (pq.value.is_infinite() || qr.value.is_infinite())
        return std::nullopt;
    const Rational sum = *pq.value.finite + *qr.value.finite;
    const bool sum_attained = pq.attained && qr.attained;
    if (!pr.value.is_infinite()) {
        const Rational& t = *pr.value.finite;
        if (t < sum || (t == sum && (pr.attained || !sum_attained)))
            return std::nullopt;
    }
    Rational gap = pr.value.is_infinite() ? Rational(1) : (*pr.value.finite - sum) / 4;
    if (gap == 0)
        gap = 1;  // only reached when both rays are closed at the sum; the offsets below are unused
    const Rational x = *pq.value.finite + (pq.attained ? Rational(0) : gap);
    const Rational y = *qr.value.finite + (qr.attained ? Rational(0) : gap);
    return std::make_pair(x, y);
}

} // namespace

SmReport check_sm_axioms(const SMSpace& s)
{
    const std::size_t n = s.size();
    const DistFn one = DistFn::one();

    SmAxiomResult sm1{"SM-I"};
    for (PointId p = 0; p < n && sm1.passed; ++p) {
        for (PointId q = 0; q < n; ++q) {
            const bool is_one = s.dist(p, q) == one;
            if (is_one != (p == q)) {
                sm1.passed = false;
                sm1.points = {p, q};
                sm1.detail = p == q ? "F_pp is not identically 1 on (0,inf)"
                                    : "F_pq is identically 1 on (0,inf) for distinct points";
                break;
            }
        }
    }

    SmAxiomResult sm2{"SM-II"};
    for (PointId p = 0; p < n && sm2.passed; ++p)
        for (PointId q = 0; q < n; ++q)
            if (s.dist(p, q)(0) != 0) {
                sm2.passed = false;
                sm2.points = {p, q};
                sm2.abscissae = {0};
                sm2.detail = "F_pq(0) != 0";
                break;
            }

    SmAxiomResult sm3{"SM-III"};
    for (PointId p = 0; p < n && sm3.passed; ++p)
        for (PointId q = 0; q < n; ++q)
            if (!(s.dist(p, q) == s.dist(q, p))) {
                sm3.passed = false;
                sm3.points = {p, q};
                sm3.detail = "F_pq != F_qp";
                break;
            }

    SmAxiomResult sm4{"SM-IV"};
    std::vector<Threshold> th;
    for (const auto& f : s.functions())
        th.push_back(threshold(f));
    for (PointId p = 0; p < n && sm4.passed; ++p) {
        for (PointId q = 0; q < n && sm4.passed; ++q) {
            for (PointId r = 0; r < n; ++r) {
                auto bad = sm4_counterexample(th[s.fn_id(p, q)], th[s.fn_id(q, r)], th[s.fn_id(p, r)]);
                if (bad) {
                    sm4.passed = false;
                    sm4.points = {p, q, r};
                    sm4.abscissae = {bad->first, bad->second};
                    sm4.detail = "F_pq(x) = F_qr(y) = 1 but F_pr(x+y) = " + to_string(s.dist(p, r)(bad->first + bad->second));
                    break;
                }
            }
        }
    }
    return {{sm1, sm2, sm3, sm4}};
}

std::vector<Rational> menger_abscissae(const DistFn& pq, const DistFn& qr, const DistFn& pr)
{
    std::vector<Rational> cuts;
    for (const DistFn* f : {&pq, &qr, &pr}) {
        auto b = f->breakpoints();
        cuts.insert(cuts.end(), b.begin(), b.end());
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Rational> core = cuts;
    for (std::size_t i = 0; i < cuts.size(); ++i)
        for (std::size_t j = i; j < cuts.size(); ++j)
            core.push_back(cuts[i] + cuts[j]);
    std::sort(core.begin(), core.end());
    core.erase(std::unique(core.begin(), core.end()), core.end());

    std::vector<Rational> out = core;
    for (std::size_t i = 0; i + 1 < core.size(); ++i)
        out.push_back(midpoint(core[i], core[i + 1]));
    out.push_back(core.back() + 1);
    return out;
}

MengerReport check_menger(const SMSpace& s, const TNorm& t)
{
    struct Outcome {
        bool violated = false;
        Rational x, y, lhs, rhs;
    };
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Outcome> memo;

    auto scan = [&](const DistFn& pq, const DistFn& qr, const DistFn& pr) {
        const auto w = menger_abscissae(pq, qr, pr);
        std::vector<Rational> fx, fy;
        for (const auto& x : w) {
            fx.push_back(pq(x));
            fy.push_back(qr(x));
        }
        for (std::size_t i = 0; i < w.size(); ++i) {
            for (std::size_t j = 0; j < w.size(); ++j) {
                const Rational rhs = t(fx[i], fy[j]);
                const Rational lhs = pr(w[i] + w[j]);
                if (lhs < rhs)
                    return Outcome{true, w[i], w[j], lhs, rhs};
            }
        }
        return Outcome{};
    };

    MengerReport report;
    const std::size_t n = s.size();
    for (PointId p = 0; p < n; ++p) {
        for (PointId q = 0; q < n; ++q) {
            for (PointId r = 0; r < n; ++r) {
                ++report.triples_checked;
                const auto key = std::make_tuple(s.fn_id(p, q), s.fn_id(q, r), s.fn_id(p, r));
                auto it = memo.find(key);
                if (it == memo.end())
                    it = memo.emplace(key, scan(s.dist(p, q), s.dist(q, r), s.dist(p, r))).first;
                const Outcome& o = it->second;
                if (!o.violated)
                    continue;
                ++report.violating_triples;
                if (!report.witness)
                    report.witness = MengerWitness{p, q, r, o.x, o.y, o.lhs, o.rhs};
            }
        }
    }
    return report;
}

} // namespace smtop

#include "smtop/neighborhood.hpp"

#include <algorithm>
#include <functional>

#include "smtop/error.hpp"
#include "smtop/regimes.hpp"

namespace smtop {

namespace {

void require_point(const SMSpace& s, PointId p)
{
    if (p >= s.size())
        throw DomainError("point id " + std::to_string(p) + " outside the space");
}

void require_positive(const Rational& x, const char* name)
{
    if (x <= 0)
        throw DomainError(std::string(name) + " must be positive, got " + to_string(x));
}

std::vector<const DistFn*> row(const SMSpace& s, PointId p)
{
    std::vector<const DistFn*> out;
    for (PointId q = 0; q < s.size(); ++q)
        out.push_back(&s.dist(p, q));
    return out;
}

std::vector<Rational> profile(const SMSpace& s, PointId p, const Rational& u)
{
    std::vector<Rational> values;
    values.reserve(s.size());
    for (PointId q = 0; q < s.size(); ++q)
        values.push_back(s.dist(p, q)(u));
    return values;
}

} // namespace

PointSet sphere(const SMSpace& s, PointId p, const Rational& u, const Rational& v)
{
    require_point(s, p);
    require_positive(u, "u");
    require_positive(v, "v");
    const Rational level = 1 - v;
    PointSet out;
    for (PointId q = 0; q < s.size(); ++q)
        if (s.dist(p, q)(u) > level)
            out.insert(q);
    return out;
}

PairSet entourage(const SMSpace& s, const Rational& u, const Rational& v)
{
    require_positive(u, "u");
    require_positive(v, "v");
    PairSet out(s.size());
    for (PointId p = 0; p < s.size(); ++p)
        for (PointId q = 0; q < s.size(); ++q)
            if (TailFn(s.dist(p, q))(u) < v)
                out.insert(p, q);
    return out;
}

std::vector<PointSet> sphere_family(const SMSpace& s, PointId p)
{
    require_point(s, p);
    std::vector<PointSet> family;
    for (const auto& u : regime_samples(row(s, p))) {
        const auto values = profile(s, p, u);
        std::vector<Rational> levels = values;
        std::sort(levels.begin(), levels.end(), std::greater<>());
        levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
        if (levels.front() < 1)
            family.emplace_back();
        for (const auto& c : levels) {
            PointSet upper;
            for (PointId q = 0; q < s.size(); ++q)
                if (values[q] >= c)
                    upper.insert(q);
            family.push_back(std::move(upper));
        }
    }
    normalize(family);
    return family;
}

NeighborhoodSystem sphere_system(const SMSpace& s)
{
    std::vector<std::vector<PointSet>> families;
    for (PointId p = 0; p < s.size(); ++p)
        families.push_back(sphere_family(s, p));
    return NeighborhoodSystem(s.ground(), std::move(families));
}

std::vector<PointSet> sphere_collection(const SMSpace& s, const std::vector<Radii>& z)
{
    std::vector<PointSet> out;
    for (const auto& [u, v] : z)
        for (PointId p = 0; p < s.size(); ++p)
            out.push_back(sphere(s, p, u, v));
    normalize(out);
    return out;
}

std::vector<PairSet> entourage_collection(const SMSpace& s, const std::vector<Radii>& z)
{
    std::vector<PairSet> out;
    for (const auto& [u, v] : z)
        out.push_back(entourage(s, u, v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PointSet ecart_sphere(const GEcart& g, PointId p, const PosetElement& f)
{
    const Poset& order = g.range();
    if (!order.contains(f))
        throw DomainError("f is not an element of the poset");
    if (!g.domain().has(p))
        throw DomainError("point id " + std::to_string(p) + " outside the g-ecart domain");

    if (g.domain().is_finite()) {
        PointSet out;
        for (PointId q = 0; q < g.domain().size(); ++q)
            if (order.less(g(p, q), f))
                out.insert(q);
        return out;
    }

    // Over the naturals only A and p itself can differ from the generic value.
    const auto& rule = g.rule_data();
    const auto& a = rule.distinguished;
    const bool p_in_a = std::binary_search(a.begin(), a.end(), p);
    const PosetElement& generic = p_in_a ? rule.mixed : rule.outside;
    PointSet out = order.less(generic, f) ? PointSet::all_but({}) : PointSet{};
    std::vector<PointId> special = a;
    special.push_back(p);
    for (auto q : special) {
        if (order.less(g(p, q), f))
            out.insert(q);
        else
            out.erase(q);
    }
    return out;
}

namespace {

NeighborhoodSystem ecart_system_over(const GEcart& g, const std::vector<PosetElement>& grades)
{
    std::vector<std::vector<PointSet>> families;
    for (auto p : g.domain().points()) {
        std::vector<PointSet> fam;
        for (const auto& f : grades) {
            PointSet s = ecart_sphere(g, p, f);
            if (!s.empty())
                fam.push_back(std::move(s));
        }
        families.push_back(std::move(fam));
    }
    return NeighborhoodSystem(g.domain(), std::move(families));
}

} // namespace

NeighborhoodSystem ecart_system(const GEcart& g, const PosetElement& bound)
{
    return ecart_system_over(g, g.range().positive_up_to(bound));
}

NeighborhoodSystem ecart_system(const GEcart& g, std::uint64_t cap)
{
    return ecart_system_over(g, g.range().positive_capped(cap));
}

PointSet r_sphere(const SMSpace& s, PointId p, PointId r, const Rational& u)
{
    require_point(s, p);
    require_point(s, r);
    require_positive(u, "u");
    const Rational level = s.dist(p, r)(u);
    PointSet out;
    for (PointId q = 0; q < s.size(); ++q)
        if (s.dist(p, q)(u) > level)
            out.insert(q);
    return out;
}

std::vector<PointSet> r_family(const SMSpace& s, PointId p)
{
    require_point(s, p);
    std::vector<PointSet> family;
    for (const auto& u : regime_samples(row(s, p))) {
        const auto values = profile(s, p, u);
        for (PointId r = 0; r < s.size(); ++r) {
            PointSet out;
            for (PointId q = 0; q < s.size(); ++q)
                if (values[q] > values[r])
                    out.insert(q);
            if (!out.empty())
                family.push_back(std::move(out));
        }
    }
    normalize(family);
    return family;
}

NeighborhoodSystem r_system(const SMSpace& s)
{
    std::vector<std::vector<PointSet>> families;
    for (PointId p = 0; p < s.size(); ++p)
        families.push_back(r_family(s, p));
    return NeighborhoodSystem(s.ground(), std::move(families));
}

} // namespace smtop

#include "smtop/gtop.hpp"

#include <algorithm>

#include "smtop/error.hpp"

namespace smtop {

NeighborhoodSystem::NeighborhoodSystem(Ground ground, std::vector<std::vector<PointSet>> families)
    : ground_(std::move(ground)), points_(ground_.points()), families_(std::move(families))
{
    if (families_.size() != points_.size())
        throw ValidationError("expected " + std::to_string(points_.size()) + " families, got " +
                              std::to_string(families_.size()));
    for (std::size_t i = 0; i < families_.size(); ++i) {
        auto& fam = families_[i];
        if (ground_.is_finite()) {
            for (const auto& s : fam) {
                const auto ids = s.ids();
                if (s.is_cofinite() || (!ids.empty() && ids.back() >= ground_.size()))
                    throw ValidationError("neighborhood of " + ground_.label(points_[i]) + " leaves the ground set");
            }
        }
        normalize(fam);
    }
}

bool NeighborhoodSystem::carries(PointId p) const
{
    return ground_.is_finite() ? p < points_.size() : (p >= 1 && p <= points_.size());
}

const std::vector<PointSet>& NeighborhoodSystem::family(PointId p) const
{
    static const std::vector<PointSet> none;
    if (!carries(p))
        return none;
    return families_[ground_.is_finite() ? p : p - 1];
}

std::string to_string(GType t)
{
    switch (t) {
    case GType::NotV: return "not-V";
    case GType::V: return "V";
    case GType::VAlpha: return "V_alpha";
    case GType::VD: return "V_D";
    case GType::Top: return "Top";
    }
    return "?";
}

N0Result check_N0(const NeighborhoodSystem& sys)
{
    for (auto p : sys.points()) {
        const auto& fam = sys.family(p);
        if (fam.empty())
            return {false, p, std::nullopt};
        for (const auto& s : fam)
            if (!s.contains(p))
                return {false, p, s};
    }
    return {};
}

namespace {

// Carried points of W, or the window part of a cofinite W.
std::vector<PointId> carried_members(const NeighborhoodSystem& sys, const PointSet& w)
{
    if (!w.is_cofinite()) {
        auto ids = w.ids();
        std::erase_if(ids, [&](PointId q) { return !sys.carries(q); });
        return ids;
    }
    return sys.ground().view(w);
}

} // namespace

N1Result check_N1(const NeighborhoodSystem& sys)
{
    N1Result result;
    result.window_relative = !sys.ground().is_finite();
    for (auto p : sys.points()) {
        const auto& fam = sys.family(p);
        for (const auto& u : fam) {
            // good: carried points with a neighborhood inside u
            PointSet good;
            for (auto q : sys.points()) {
                const auto& fq = sys.family(q);
                if (std::any_of(fq.begin(), fq.end(), [&](const PointSet& v) { return v.subset_of(u); }))
                    good.insert(q);
            }
            const bool found = std::any_of(fam.begin(), fam.end(), [&](const PointSet& w) {
                if (sys.ground().is_finite())
                    return w.subset_of(good);
                return std::ranges::all_of(carried_members(sys, w), [&](PointId q) { return good.contains(q); });
            });
            if (!found) {
                result.passed = false;
                result.point = p;
                result.set = u;
                return result;
            }
        }
    }
    return result;
}

N2Result check_N2(const NeighborhoodSystem& sys)
{
    N2Result result;
    result.window_relative = !sys.ground().is_finite();
    for (auto p : sys.points()) {
        const auto& fam = sys.family(p);
        for (std::size_t i = 0; i < fam.size(); ++i) {
            for (std::size_t j = i + 1; j < fam.size(); ++j) {
                const PointSet both = fam[i].intersect(fam[j]);
                if (std::none_of(fam.begin(), fam.end(), [&](const PointSet& v) { return v.subset_of(both); })) {
                    result.passed = false;
                    result.point = p;
                    result.first = fam[i];
                    result.second = fam[j];
                    return result;
                }
            }
        }
    }
    return result;
}

Classification classify(const NeighborhoodSystem& sys)
{
    Classification c;
    c.n0 = check_N0(sys);
    c.n1 = check_N1(sys);
    c.n2 = check_N2(sys);
    if (!c.n0.passed)
        c.verdict = GType::NotV;
    else if (c.n1.passed && c.n2.passed)
        c.verdict = GType::Top;
    else if (c.n1.passed)
        c.verdict = GType::VAlpha;
    else if (c.n2.passed)
        c.verdict = GType::VD;
    else
        c.verdict = GType::V;
    return c;
}

bool meets(GType verdict, GType wanted)
{
    if (verdict == wanted || verdict == GType::Top)
        return true;
    switch (wanted) {
    case GType::NotV: return true;
    case GType::V: return verdict != GType::NotV;
    default: return false;
    }
}

PointSet closure(const NeighborhoodSystem& sys, const PointSet& e)
{
    PointSet out;
    for (auto p : sys.points()) {
        const auto& fam = sys.family(p);
        if (std::all_of(fam.begin(), fam.end(), [&](const PointSet& v) { return v.intersects(e); }))
            out.insert(p);
    }
    return out;
}

PointSet interior(const NeighborhoodSystem& sys, const PointSet& e)
{
    PointSet out;
    for (auto p : sys.points()) {
        const auto& fam = sys.family(p);
        if (std::any_of(fam.begin(), fam.end(), [&](const PointSet& v) { return v.subset_of(e); }))
            out.insert(p);
    }
    return out;
}

SymmetryResult is_symmetric(const NeighborhoodSystem& sys)
{
    std::vector<PointSet> cl;
    for (auto q : sys.points())
        cl.push_back(closure(sys, PointSet{q}));
    const auto& pts = sys.points();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (cl[j].contains(pts[i]) && !cl[i].contains(pts[j]))
                return {false, std::make_pair(pts[i], pts[j])};
    return {};
}

} // namespace smtop

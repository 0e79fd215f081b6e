#include "smtop/product.hpp"

#include <algorithm>
#include <map>

#include "smtop/error.hpp"
#include "smtop/neighborhood.hpp"

namespace smtop {

std::string to_string(ProductMode m)
{
    switch (m) {
    case ProductMode::SmProduct: return "sm-product";
    case ProductMode::BoxSystem: return "box-system";
    case ProductMode::EcartProduct: return "ecart-product";
    case ProductMode::RProduct: return "r-product";
    }
    return "?";
}

std::string pair_label(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

namespace {

std::vector<std::string> product_labels(const Ground& g1, const Ground& g2)
{
    std::vector<std::string> labels;
    for (auto p : g1.points())
        for (auto q : g2.points())
            labels.push_back(pair_label(g1.label(p), g2.label(q)));
    return labels;
}

} // namespace

SMSpace product_space(const SMSpace& s1, const SMSpace& s2)
{
    auto labels = product_labels(s1.ground(), s2.ground());
    const std::size_t n2 = s2.size();
    const std::size_t n = labels.size();
    std::map<std::pair<std::size_t, std::size_t>, DistFn> products;
    std::vector<SpaceEntry> entries;
    for (PointId a = 0; a < n; ++a) {
        for (PointId b = a + 1; b < n; ++b) {
            const auto key = std::make_pair(s1.fn_id(a / n2, b / n2), s2.fn_id(a % n2, b % n2));
            auto it = products.find(key);
            if (it == products.end())
                it = products.emplace(key, multiply(s1.dist(a / n2, b / n2), s2.dist(a % n2, b % n2))).first;
            entries.push_back({labels[a], labels[b], it->second});
        }
    }
    return SMSpace::build(std::move(labels), entries);
}

ProductAxiomReport verify_product_axioms(const SMSpace& s1, const SMSpace& s2)
{
    ProductAxiomReport report{check_sm_axioms(s1), check_sm_axioms(s2), std::nullopt};
    if (report.factors_ok())
        report.product = check_sm_axioms(product_space(s1, s2));
    return report;
}

ProductMengerReport verify_product_menger(const SMSpace& s1, const SMSpace& s2)
{
    const TNorm t = TNorm::product();
    ProductMengerReport report{check_menger(s1, t), check_menger(s2, t), std::nullopt};
    if (report.factors_ok())
        report.product = check_menger(product_space(s1, s2), t);
    return report;
}

NeighborhoodSystem box_system(const NeighborhoodSystem& sys1, const NeighborhoodSystem& sys2)
{
    const Ground& g1 = sys1.ground();
    const Ground& g2 = sys2.ground();
    if (!g1.is_finite() || !g2.is_finite())
        throw DomainError("box systems need finite grounds; restrict to a window first");
    const std::size_t n2 = g2.size();
    std::vector<std::vector<PointSet>> families;
    for (auto p : g1.points()) {
        for (auto q : g2.points()) {
            std::vector<PointSet> fam;
            for (const auto& a : sys1.family(p)) {
                for (const auto& b : sys2.family(q)) {
                    PointSet box;
                    for (auto x : a.ids())
                        for (auto y : b.ids())
                            box.insert(x * n2 + y);
                    fam.push_back(std::move(box));
                }
            }
            families.push_back(std::move(fam));
        }
    }
    return NeighborhoodSystem(Ground::finite(product_labels(g1, g2)), std::move(families));
}

TypePreservationReport verify_type_preservation(const NeighborhoodSystem& sys1, const NeighborhoodSystem& sys2,
                                                GType wanted)
{
    TypePreservationReport report{wanted, classify(sys1), classify(sys2), std::nullopt};
    if (report.precondition_met())
        report.product = classify(box_system(sys1, sys2));
    return report;
}

GEcart product_ecart(const GEcart& g1, const GEcart& g2)
{
    const GEcart a = g1.windowed();
    const GEcart b = g2.windowed();
    const std::size_t n1 = a.domain().size();
    const std::size_t n2 = b.domain().size();
    const std::size_t n = n1 * n2;
    std::vector<PosetElement> values;
    values.reserve(n * n);
    for (PointId x = 0; x < n; ++x) {
        for (PointId y = 0; y < n; ++y) {
            PosetElement v = a(x / n2, y / n2);
            const PosetElement w = b(x % n2, y % n2);
            v.coords.insert(v.coords.end(), w.coords.begin(), w.coords.end());
            values.push_back(std::move(v));
        }
    }
    return GEcart::dense(Ground::finite(product_labels(a.domain(), b.domain())), Poset::product(a.range(), b.range()),
                         std::move(values));
}

EcartProductReport verify_ecart_product(const GEcart& g1, const GEcart& g2, std::uint64_t cap)
{
    const GEcart a = g1.windowed();
    const GEcart b = g2.windowed();
    EcartProductReport report{0, std::nullopt, product_ecart(a, b), {}};
    const std::size_t n1 = a.domain().size();
    const std::size_t n2 = b.domain().size();
    auto grades = [cap](const Poset& p) {
        auto all = p.positive_capped(cap);
        all.insert(all.begin(), p.least());
        return all;
    };
    const auto fa = grades(a.range());
    const auto fb = grades(b.range());
    for (PointId x = 0; x < n1 && !report.mismatch; ++x) {
        for (PointId y = 0; y < n2 && !report.mismatch; ++y) {
            for (const auto& f1 : fa) {
                const PointSet left = ecart_sphere(a, x, f1);
                for (const auto& f2 : fb) {
                    const PointSet right = ecart_sphere(b, y, f2);
                    PointSet box;
                    for (auto i : left.ids())
                        for (auto j : right.ids())
                            box.insert(i * n2 + j);
                    PosetElement f = f1;
                    f.coords.insert(f.coords.end(), f2.coords.begin(), f2.coords.end());
                    PointSet got = ecart_sphere(report.product, x * n2 + y, f);
                    ++report.spheres_checked;
                    if (!(got == box)) {
                        report.mismatch = EcartProductReport::Mismatch{x * n2 + y, f, box, got};
                        break;
                    }
                }
                if (report.mismatch)
                    break;
            }
        }
    }
    report.classification = classify(ecart_system(report.product, cap));
    return report;
}

std::string to_string(Refinement r)
{
    switch (r) {
    case Refinement::Equal: return "equal";
    case Refinement::LeftRefines: return "left-refines-right";
    case Refinement::RightRefines: return "right-refines-left";
    case Refinement::Incomparable: return "incomparable";
    }
    return "?";
}

namespace {

// A member of `coarse` at p containing no member of `fine`, if any.
std::optional<PointSet> refinement_gap(const std::vector<PointSet>& fine, const std::vector<PointSet>& coarse)
{
    for (const auto& c : coarse)
        if (std::none_of(fine.begin(), fine.end(), [&](const PointSet& f) { return f.subset_of(c); }))
            return c;
    return std::nullopt;
}

} // namespace

ComparisonReport compare_systems(const NeighborhoodSystem& a, const NeighborhoodSystem& b)
{
    if (!(a.ground() == b.ground()))
        throw DomainError("systems live on different point sets");
    ComparisonReport report;
    for (auto p : a.points()) {
        const auto& fa = a.family(p);
        const auto& fb = b.family(p);
        if (fa != fb)
            report.identical = false;
        if (!report.left_gap)
            if (auto gap = refinement_gap(fa, fb))
                report.left_gap = std::make_pair(p, *gap);
        if (!report.right_gap)
            if (auto gap = refinement_gap(fb, fa))
                report.right_gap = std::make_pair(p, *gap);
    }
    const bool left = !report.left_gap;
    const bool right = !report.right_gap;
    report.relation = left && right ? Refinement::Equal
                      : left        ? Refinement::LeftRefines
                      : right       ? Refinement::RightRefines
                                    : Refinement::Incomparable;
    return report;
}

RProductReport verify_r_product(const SMSpace& s1, const SMSpace& s2)
{
    RProductReport report{check_sm_axioms(s1), check_sm_axioms(s2), {}, {}, {}};
    if (!report.factors_ok())
        return report;
    report.system = r_system(product_space(s1, s2));
    report.classification = classify(*report.system);
    report.versus_box = compare_systems(*report.system, box_system(r_system(s1), r_system(s2)));
    return report;
}

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

PointSet random_subset(Rng& rng, std::size_t n)
{
    PointSet s;
    for (PointId q = 0; q < n; ++q)
        if (uniform(rng, 0, 1))
            s.insert(q);
    return s;
}

} // namespace

NeighborhoodSystem random_system(Rng& rng, std::size_t max_points, std::size_t max_neighborhoods)
{
    const std::size_t n = uniform(rng, 1, max_points);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(std::to_string(i));

    // Preorder for the third style: reachability of a random relation.
    std::vector<PointSet> minimal(n);
    for (PointId p = 0; p < n; ++p) {
        minimal[p].insert(p);
        for (PointId q = 0; q < n; ++q)
            if (uniform(rng, 0, 2) == 0)
                minimal[p].insert(q);
    }
    for (std::size_t round = 0; round < n; ++round)
        for (PointId p = 0; p < n; ++p)
            for (auto q : minimal[p].ids())
                minimal[p] = minimal[p].unite(minimal[q]);

    const std::size_t style = uniform(rng, 0, 2);
    std::vector<std::vector<PointSet>> families(n);
    for (PointId p = 0; p < n; ++p) {
        const std::size_t k = uniform(rng, 1, max_neighborhoods);
        auto& fam = families[p];
        PointSet current = style == 2 ? minimal[p] : PointSet{p};
        for (std::size_t i = 0; i < k; ++i) {
            PointSet extra = random_subset(rng, n);
            switch (style) {
            case 0: {
                PointSet s = extra;
                s.insert(p);
                fam.push_back(std::move(s));
                break;
            }
            case 1:
                current = current.unite(i == 0 ? PointSet{} : PointSet{static_cast<PointId>(uniform(rng, 0, n - 1))});
                fam.push_back(current);
                break;
            default:
                fam.push_back(i == 0 ? minimal[p] : minimal[p].unite(extra));
                break;
            }
        }
    }
    return NeighborhoodSystem(Ground::finite(std::move(labels)), std::move(families));
}

std::vector<TheoremTrials> verify_box_theorems(std::size_t pairs, std::uint64_t seed, std::size_t max_points,
                                               std::size_t max_neighborhoods)
{
    Rng rng(seed);
    std::vector<TheoremTrials> out;
    for (GType type : {GType::V, GType::VAlpha, GType::VD, GType::Top}) {
        TheoremTrials trials{type};
        auto draw = [&] {
            for (;;) {
                auto sys = random_system(rng, max_points, max_neighborhoods);
                const auto c = classify(sys);
                if (meets(c.verdict, type)) {
                    ++trials.factor_verdicts[static_cast<std::size_t>(c.verdict)];
                    return sys;
                }
            }
        };
        for (std::size_t i = 0; i < pairs; ++i) {
            auto a = draw();
            auto b = draw();
            const auto c = classify(box_system(a, b));
            ++trials.pairs;
            if (meets(c.verdict, type))
                ++trials.preserved;
            else if (!trials.counterexample)
                trials.counterexample = std::make_pair(std::move(a), std::move(b));
        }
        out.push_back(std::move(trials));
    }
    return out;
}

} // namespace smtop

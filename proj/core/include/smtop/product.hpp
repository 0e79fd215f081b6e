#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "smtop/ecart.hpp"
#include "smtop/gtop.hpp"
#include "smtop/smspace.hpp"

namespace smtop {

/// Which product construction a report refers to.
enum class ProductMode { SmProduct, BoxSystem, EcartProduct, RProduct };

std::string to_string(ProductMode m);

/// "(a,b)"
std::string pair_label(const std::string& a, const std::string& b);

/// Product space on S1 x S2 with F((p1,p2),(q1,q2)) = F1_{p1q1} * F2_{p2q2}.
/// Point (i, j) gets id i * |S2| + j.
SMSpace product_space(const SMSpace& s1, const SMSpace& s2);

struct ProductAxiomReport {
    SmReport left;
    SmReport right;
    /// Empty when a factor fails its own axioms.
    std::optional<SmReport> product;
    bool factors_ok() const { return left.ok() && right.ok(); }
    bool ok() const { return factors_ok() && product && product->ok(); }
};

/// SM-I..SM-IV on both factors, then on their product.
ProductAxiomReport verify_product_axioms(const SMSpace& s1, const SMSpace& s2);

struct ProductMengerReport {
    MengerReport left;
    MengerReport right;
    std::optional<MengerReport> product;
    bool factors_ok() const { return left.ok() && right.ok(); }
    bool ok() const { return factors_ok() && product && product->ok(); }
};

/// Menger inequality with T(a,b) = ab on both factors, then on their product.
ProductMengerReport verify_product_menger(const SMSpace& s1, const SMSpace& s2);

/// Box system on the product ground: the family at (p, q) is
/// {A x B : A in family1(p), B in family2(q)}. Both grounds must be finite.
NeighborhoodSystem box_system(const NeighborhoodSystem& sys1, const NeighborhoodSystem& sys2);

struct TypePreservationReport {
    GType wanted;
    Classification left;
    Classification right;
    std::optional<Classification> product;
    bool precondition_met() const { return meets(left.verdict, wanted) && meets(right.verdict, wanted); }
    bool preserved() const { return precondition_met() && product && meets(product->verdict, wanted); }
};

/// Classifies both factors and, if both meet `wanted`, their box system.
TypePreservationReport verify_type_preservation(const NeighborhoodSystem& sys1, const NeighborhoodSystem& sys2,
                                                GType wanted);

/// Product g-ecart with range P1 x P2 and G = (G1, G2). Rule-form factors are
/// restricted to their windows first.
GEcart product_ecart(const GEcart& g1, const GEcart& g2);

struct EcartProductReport {
    std::size_t spheres_checked = 0;
    struct Mismatch {
        PointId point;  // id in the product ground
        PosetElement f;
        PointSet expected;  // box of the factor spheres
        PointSet actual;
    };
    std::optional<Mismatch> mismatch;
    GEcart product;
    Classification classification;
    bool ok() const { return !mismatch && meets(classification.verdict, GType::V); }
};

/// Checks N_(p,q)(f1,f2) = N_p(f1) x N_q(f2) at every product point for all
/// f1, f2 <= cap (natural coordinates; explicit factors range fully), then
/// classifies the product system of non-empty spheres.
EcartProductReport verify_ecart_product(const GEcart& g1, const GEcart& g2, std::uint64_t cap);

enum class Refinement { Equal, LeftRefines, RightRefines, Incomparable };

std::string to_string(Refinement r);

struct ComparisonReport {
    Refinement relation = Refinement::Equal;
    /// Same family at every point.
    bool identical = true;
    /// A right-neighborhood containing no left-neighborhood, at some point.
    std::optional<std::pair<PointId, PointSet>> left_gap;
    /// A left-neighborhood containing no right-neighborhood.
    std::optional<std::pair<PointId, PointSet>> right_gap;
};

/// `a` refines `b` at p when every b-neighborhood of p contains an a-neighborhood
/// of p. Equal means each refines the other everywhere. Throws DomainError when
/// the grounds differ.
ComparisonReport compare_systems(const NeighborhoodSystem& a, const NeighborhoodSystem& b);

struct RProductReport {
    SmReport left;
    SmReport right;
    std::optional<NeighborhoodSystem> system;
    std::optional<Classification> classification;
    std::optional<ComparisonReport> versus_box;
    bool factors_ok() const { return left.ok() && right.ok(); }
    bool ok() const { return factors_ok() && classification && classification->n0.passed; }
};

/// R-system of the product space, its classification, and how it relates to the
/// box of the factor R-systems.
RProductReport verify_r_product(const SMSpace& s1, const SMSpace& s2);

/// Random system with N0 built in: 1..max_points points labelled "0", "1", ...,
/// and 1..max_neighborhoods neighborhoods per point. Mixes unstructured families,
/// chains, and supersets of minimal neighborhoods of a random preorder.
NeighborhoodSystem random_system(std::mt19937_64& rng, std::size_t max_points, std::size_t max_neighborhoods);

struct TheoremTrials {
    GType type;
    std::size_t pairs = 0;
    std::size_t preserved = 0;
    /// Exact verdicts of the generated factors, indexed by GType.
    std::vector<std::size_t> factor_verdicts = std::vector<std::size_t>(5, 0);
    std::optional<std::pair<NeighborhoodSystem, NeighborhoodSystem>> counterexample;
    bool ok() const { return pairs > 0 && preserved == pairs; }
};

/// For each type V, V_alpha, V_D, Top: draws `pairs` pairs of random systems that
/// meet the type and checks that their box system meets it too.
std::vector<TheoremTrials> verify_box_theorems(std::size_t pairs, std::uint64_t seed, std::size_t max_points = 5,
                                               std::size_t max_neighborhoods = 4);

} // namespace smtop

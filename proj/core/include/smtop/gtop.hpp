#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smtop/pointset.hpp"

namespace smtop {

/// A neighborhood family for every point of a ground set.
///
/// Over a finite ground every point carries a family. Over the naturals the
/// families are given for the window points only, and their members may be
/// cofinite. Families are kept sorted and deduplicated.
class NeighborhoodSystem {
public:
    NeighborhoodSystem() = default;
    /// `families[i]` belongs to `ground.points()[i]`. Throws ValidationError if the
    /// count does not match or (finite ground) a member leaves the ground.
    NeighborhoodSystem(Ground ground, std::vector<std::vector<PointSet>> families);

    const Ground& ground() const { return ground_; }
    const std::vector<PointId>& points() const { return points_; }
    /// Family at p; empty for points outside the carried window.
    const std::vector<PointSet>& family(PointId p) const;
    bool carries(PointId p) const;

    friend bool operator==(const NeighborhoodSystem&, const NeighborhoodSystem&) = default;

private:
    Ground ground_;
    std::vector<PointId> points_;
    std::vector<std::vector<PointSet>> families_;
};

struct N0Result {
    bool passed = true;
    std::optional<PointId> point;
    /// Offending member; empty when the family itself is empty.
    std::optional<PointSet> set;
};

struct N1Result {
    bool passed = true;
    /// Quantifiers over cofinite sets were only evaluated inside the window.
    bool window_relative = false;
    std::optional<PointId> point;
    std::optional<PointSet> set;
};

struct N2Result {
    bool passed = true;
    bool window_relative = false;
    std::optional<PointId> point;
    std::optional<PointSet> first;
    std::optional<PointSet> second;
};

enum class GType { NotV, V, VAlpha, VD, Top };

std::string to_string(GType t);

struct Classification {
    N0Result n0;
    N1Result n1;
    N2Result n2;
    GType verdict = GType::NotV;
};

/// Every point has a non-empty family and every neighborhood contains its point.
N0Result check_N0(const NeighborhoodSystem& sys);
/// For each p and U_p there is W_p such that every q in W_p has some U_q inside U_p.
N1Result check_N1(const NeighborhoodSystem& sys);
/// For each p and U_p, W_p some neighborhood of p lies inside U_p and W_p.
N2Result check_N2(const NeighborhoodSystem& sys);
Classification classify(const NeighborhoodSystem& sys);

/// Whether a verdict satisfies the axioms required by `wanted`.
bool meets(GType verdict, GType wanted);

/// Carried points whose every neighborhood meets E.
PointSet closure(const NeighborhoodSystem& sys, const PointSet& e);
/// Carried points with some neighborhood inside E. Equal to the carried points
/// minus the closure of the complement of E.
PointSet interior(const NeighborhoodSystem& sys, const PointSet& e);

struct SymmetryResult {
    bool symmetric = true;
    /// (p, q) with p in cl{q} but q not in cl{p}.
    std::optional<std::pair<PointId, PointId>> witness;
};

SymmetryResult is_symmetric(const NeighborhoodSystem& sys);

} // namespace smtop

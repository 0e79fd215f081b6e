#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace smtop {

using PointId = std::size_t;

/// Subset of a ground set: either finite, or cofinite (everything except a finite
/// exclusion list). Cofinite sets only arise over the naturals.
///
/// Bits are stored trimmed, so structurally equal sets compare equal.
class PointSet {
public:
    PointSet() = default;
    PointSet(std::initializer_list<PointId> ids);

    static PointSet of(const std::vector<PointId>& ids);
    /// {0, ..., n-1}.
    static PointSet first(std::size_t n);
    /// Every natural except `excluded`.
    static PointSet all_but(const std::vector<PointId>& excluded);

    bool is_cofinite() const { return cofinite_; }
    bool contains(PointId p) const;
    /// A cofinite set is never empty.
    bool empty() const { return !cofinite_ && words_.empty(); }
    /// Number of members of a finite set.
    std::size_t count() const;

    /// Members of a finite set, or the exclusions of a cofinite one, ascending.
    std::vector<PointId> ids() const;

    void insert(PointId p);
    void erase(PointId p);

    PointSet intersect(const PointSet& other) const;
    PointSet unite(const PointSet& other) const;
    bool subset_of(const PointSet& other) const;
    bool intersects(const PointSet& other) const;

    friend bool operator==(const PointSet& a, const PointSet& b);
    /// Finite before cofinite, then by size, then lexicographically by member ids.
    friend bool operator<(const PointSet& a, const PointSet& b);

private:
    void trim();

    bool cofinite_ = false;
    std::vector<std::uint64_t> words_;  // bit i of the set; no trailing zero words
};

/// Ground set of a space or system: a finite list of labels, or the naturals
/// {1, 2, ...} viewed through a finite window {1, ..., window}.
///
/// Finite grounds use ids 0..n-1; the naturals use the number itself as its id.
class Ground {
public:
    Ground() = default;
    static Ground finite(std::vector<std::string> labels);
    static Ground naturals(std::size_t window);

    bool is_finite() const { return !naturals_; }
    /// Number of points (finite) or the window size (naturals).
    std::size_t size() const { return naturals_ ? window_ : labels_.size(); }
    std::size_t window() const { return window_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Points carried by systems over this ground: every point, or the window.
    std::vector<PointId> points() const;
    std::string label(PointId p) const;
    std::optional<PointId> find(std::string_view label) const;
    bool has(PointId p) const;

    /// The whole ground set.
    PointSet all() const;
    PointSet complement(const PointSet& s) const;
    /// Members of `s` within the finite points of the ground.
    std::vector<PointId> view(const PointSet& s) const;

    /// "{a, b}" for finite sets, "S \ {2, 3}" for cofinite ones, "S" for the whole
    /// naturals.
    std::string format(const PointSet& s) const;

    friend bool operator==(const Ground&, const Ground&) = default;

private:
    bool naturals_ = false;
    std::size_t window_ = 0;
    std::vector<std::string> labels_;
};

/// Finite set of ordered pairs of points of an n-point space.
class PairSet {
public:
    explicit PairSet(std::size_t n = 0) : n_(n) {}

    std::size_t points() const { return n_; }
    bool contains(PointId p, PointId q) const { return bits_.contains(p * n_ + q); }
    void insert(PointId p, PointId q) { bits_.insert(p * n_ + q); }
    std::size_t size() const { return bits_.count(); }
    std::vector<std::pair<PointId, PointId>> pairs() const;
    /// {q : (p, q) in the set}.
    PointSet slice(PointId p) const;

    friend bool operator==(const PairSet&, const PairSet&) = default;
    friend bool operator<(const PairSet& a, const PairSet& b);

private:
    std::size_t n_;
    PointSet bits_;
};

/// Sorts and removes duplicates.
void normalize(std::vector<PointSet>& family);

} // namespace smtop

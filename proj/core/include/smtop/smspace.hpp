#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "smtop/distfn.hpp"
#include "smtop/pointset.hpp"
#include "smtop/rational.hpp"
#include "smtop/tnorm.hpp"

namespace smtop {

/// One off-diagonal entry of a space description: the distribution function of the
/// unordered pair {p, q}.
struct SpaceEntry {
    std::string p;
    std::string q;
    DistFn fn;
};

enum class MetricKind { Step, Ramp };

/// Finite statistical metric space (S, F).
///
/// Points are opaque labels kept in input order; ids are positions in that order.
/// Distribution functions live on unordered pairs, so F_pq = F_qp by construction,
/// and the diagonal is always one(). Identical functions are stored once.
class SMSpace {
public:
    /// Throws ValidationError on duplicate labels, unknown labels, a repeated or
    /// missing pair, a diagonal entry, or an invalid distribution function.
    static SMSpace build(std::vector<std::string> labels, const std::vector<SpaceEntry>& entries);

    /// F_pq = step(d(p,q)) or ramp(d(p,q)). `d` is a full matrix indexed like `labels`;
    /// it must be a metric (checked), otherwise ValidationError.
    static SMSpace from_metric(std::vector<std::string> labels, const std::vector<std::vector<Rational>>& d,
                               MetricKind kind);

    std::size_t size() const { return ground_.size(); }
    const Ground& ground() const { return ground_; }
    const std::string& label(PointId p) const { return ground_.labels()[p]; }
    /// Throws DomainError for an unknown label.
    PointId id(std::string_view label) const;

    const DistFn& dist(PointId p, PointId q) const { return fns_[fn_id(p, q)]; }
    std::size_t fn_id(PointId p, PointId q) const { return table_[p * size() + q]; }
    /// Distinct distribution functions used by the space.
    const std::vector<DistFn>& functions() const { return fns_; }

private:
    SMSpace() = default;
    static SMSpace assemble(Ground ground, const std::vector<std::optional<DistFn>>& upper);

    Ground ground_;
    std::vector<DistFn> fns_;
    std::vector<std::size_t> table_;
};

/// Absolute-difference metric on labels that parse as rationals.
std::vector<std::vector<Rational>> absolute_difference_metric(const std::vector<std::string>& labels);

/// inf{x : F(x) = 1}, and whether F attains 1 at that infimum.
struct Threshold {
    ExtRational value;
    bool attained = false;
};

/// Threshold of a valid distribution function.
Threshold threshold(const DistFn& f);
Threshold threshold(const SMSpace& s, PointId p, PointId q);

struct SmAxiomResult {
    std::string axiom;
    bool passed = true;
    std::vector<PointId> points;
    std::vector<Rational> abscissae;
    std::string detail;
};

struct SmReport {
    std::vector<SmAxiomResult> axioms;
    bool ok() const;
    const SmAxiomResult& at(const std::string& axiom) const;
};

/// Checks SM-I through SM-IV. SM-IV is decided exactly from thresholds: the sets
/// {x : F(x) = 1} are rays [t, inf) or (t, inf), so the implication holds iff the
/// Minkowski sum of the first two rays lies inside the third.
SmReport check_sm_axioms(const SMSpace& s);

struct MengerWitness {
    PointId p, q, r;
    Rational x, y;
    Rational lhs;  // F_pr(x + y)
    Rational rhs;  // T(F_pq(x), F_qr(y))
};

struct MengerReport {
    std::size_t triples_checked = 0;
    /// Ordered point triples with at least one violated abscissa pair.
    std::size_t violating_triples = 0;
    std::optional<MengerWitness> witness;
    bool ok() const { return violating_triples == 0; }
};

/// Abscissae probed for one triple of functions: all breakpoints, pairwise sums of
/// breakpoints, then midpoints between consecutive values and one point beyond the
/// largest. The first group is listed before the midpoints.
std::vector<Rational> menger_abscissae(const DistFn& pq, const DistFn& qr, const DistFn& pr);

/// Scans F_pr(x+y) >= T(F_pq(x), F_qr(y)) over every ordered triple and the witness
/// abscissae. Exact for piecewise-constant spaces; otherwise a sound refuter.
MengerReport check_menger(const SMSpace& s, const TNorm& t);

} // namespace smtop

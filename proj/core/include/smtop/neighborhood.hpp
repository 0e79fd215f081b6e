#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "smtop/ecart.hpp"
#include "smtop/gtop.hpp"
#include "smtop/pointset.hpp"
#include "smtop/rational.hpp"
#include "smtop/smspace.hpp"

namespace smtop {

/// (u, v)-sphere N_p(u, v) = {q : F_pq(u) > 1 - v}. Throws DomainError unless u, v > 0.
PointSet sphere(const SMSpace& s, PointId p, const Rational& u, const Rational& v);

/// U(u, v) = {(p, q) : G_pq(u) < v}.
PairSet entourage(const SMSpace& s, const Rational& u, const Rational& v);

/// Every distinct N_p(u, v) over all u, v > 0.
///
/// At each regime sample u the spheres are the strict upper-level sets of the
/// profile q -> F_pq(u); the empty set appears only if no value reaches 1.
std::vector<PointSet> sphere_family(const SMSpace& s, PointId p);

/// The system p -> sphere_family(s, p).
NeighborhoodSystem sphere_system(const SMSpace& s);

using Radii = std::pair<Rational, Rational>;

/// N(Z): all spheres N_p(u, v) with (u, v) in Z and p in S, deduplicated.
std::vector<PointSet> sphere_collection(const SMSpace& s, const std::vector<Radii>& z);
/// U(Z): all entourages U(u, v) with (u, v) in Z, deduplicated.
std::vector<PairSet> entourage_collection(const SMSpace& s, const std::vector<Radii>& z);

/// f-sphere N_p(f) = {q : G(p, q) < f}. Cofinite over the naturals when the rule
/// puts the bulk of the points below f. Throws DomainError for f outside the poset.
PointSet ecart_sphere(const GEcart& g, PointId p, const PosetElement& f);

/// For each carried point, the non-empty spheres N_p(f) with 0 < f <= bound.
NeighborhoodSystem ecart_system(const GEcart& g, const PosetElement& bound);
/// Same, over Poset::positive_capped(cap).
NeighborhoodSystem ecart_system(const GEcart& g, std::uint64_t cap);

/// r-sphere N_p(r; u) = {q : G_pq(u) < G_pr(u)}. Empty when r = p.
PointSet r_sphere(const SMSpace& s, PointId p, PointId r, const Rational& u);

/// Non-empty r-spheres at p over all r in S and u > 0.
std::vector<PointSet> r_family(const SMSpace& s, PointId p);

/// The system p -> r_family(s, p). A point whose r-spheres are all empty gets an
/// empty family, which check_N0 reports.
NeighborhoodSystem r_system(const SMSpace& s);

} // namespace smtop

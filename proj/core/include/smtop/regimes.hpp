#pragma once

#include <vector>

#include "smtop/distfn.hpp"
#include "smtop/rational.hpp"

namespace smtop {

/// Real number a + b * sqrt(d) with rational a, b and d >= 0. Roots of rational
/// quadratics have this form, which lets crossing points be ordered exactly.
struct Surd {
    Rational a = 0;
    Rational b = 0;
    Rational d = 0;

    static Surd rational(const Rational& r) { return {r, 0, 0}; }
    bool is_rational() const { return b == 0 || d == 0; }
};

/// -1, 0 or +1.
int sign(const Surd& s);
/// Exact three-way comparison.
int compare(const Surd& x, const Surd& y);

/// Real roots of c0 + c1 x + c2 x^2 strictly inside (lo, hi). The zero polynomial has none.
std::vector<Surd> roots_between(const Poly& p, const Rational& lo, const Rational& hi);

/// Positive abscissae hitting every regime of the value profile of `fns`.
///
/// Between consecutive critical points (breakpoints and crossings of any two
/// functions) the weak order of the values is constant; the result holds every
/// rational critical point, one rational strictly between each consecutive pair of
/// critical points, and one point past the last breakpoint.
std::vector<Rational> regime_samples(const std::vector<const DistFn*>& fns);

} // namespace smtop

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smtop/rational.hpp"

namespace smtop {

/// Polynomial c0 + c1 x + c2 x^2 with rational coefficients.
struct Poly {
    Rational c0 = 0;
    Rational c1 = 0;
    Rational c2 = 0;

    static Poly constant(const Rational& c) { return {c, 0, 0}; }

    Rational operator()(const Rational& x) const { return c0 + x * (c1 + x * c2); }
    /// First derivative, itself of degree <= 1.
    Poly derivative() const { return {c1, 2 * c2, 0}; }
    int degree() const { return c2 != 0 ? 2 : (c1 != 0 ? 1 : 0); }
    bool is_constant() const { return c1 == 0 && c2 == 0; }

    friend bool operator==(const Poly&, const Poly&) = default;
};

Poly operator-(const Poly& a, const Poly& b);

/// Product of two polynomials. Throws DomainError if the result exceeds degree 2.
Poly operator*(const Poly& a, const Poly& b);

/// One piece of a distribution function: the half-open interval (from, to], or
/// (from, inf) when `to` is empty, carrying a polynomial map.
struct Piece {
    Rational from;
    std::optional<Rational> to;
    Poly poly;

    bool bounded() const { return to.has_value(); }
    friend bool operator==(const Piece&, const Piece&) = default;
};

/// Exact piecewise-polynomial distribution function on [0, inf).
///
/// The value at 0 is always 0. Pieces are half-open on the left, so evaluation at
/// a breakpoint returns the limit from the left. The piece list is kept canonical
/// (adjacent pieces with identical maps merged), which makes `==` decide pointwise
/// equality.
///
/// Construction only enforces the structural layout; the analytic properties
/// (range, monotonicity, supremum) are checked by `validate`.
class DistFn {
public:
    /// 0 on [0, a], 1 on (a, inf).
    static DistFn step(const Rational& a);
    /// x/d on [0, d], 1 beyond.
    static DistFn ramp(const Rational& d);
    /// 0 at 0, 1 on (0, inf).
    static DistFn one();
    /// Builds from explicit pieces. The first piece must start at 0, pieces must be
    /// contiguous with increasing endpoints, and only the last may be unbounded and
    /// constant. Throws ValidationError otherwise.
    static DistFn from_pieces(std::vector<Piece> pieces);

    /// Left-continuous value at x. Throws DomainError for x < 0.
    Rational operator()(const Rational& x) const;

    const std::vector<Piece>& pieces() const { return pieces_; }

    /// Every interval endpoint, starting with 0.
    std::vector<Rational> breakpoints() const;

    /// Index of the piece whose interval contains x > 0.
    std::size_t piece_index(const Rational& x) const;

    friend bool operator==(const DistFn&, const DistFn&) = default;

private:
    explicit DistFn(std::vector<Piece> pieces);
    std::vector<Piece> pieces_;
};

/// Pointwise product. Throws DomainError when a product piece would exceed degree 2.
DistFn multiply(const DistFn& f, const DistFn& g);

/// Tail G = 1 - F of a distribution function.
class TailFn {
public:
    explicit TailFn(DistFn base) : base_(std::move(base)) {}

    Rational operator()(const Rational& x) const { return 1 - base_(x); }
    const DistFn& base() const { return base_; }

private:
    DistFn base_;
};

/// One failed distribution-function property with the abscissae that show it.
struct FnViolation {
    enum class Kind { Range, Monotone, Supremum };
    Kind kind;
    /// One abscissa for Range/Supremum; (x1, x2) with f(x1) > f(x2) for Monotone.
    std::vector<Rational> witness;
    std::string message;
};

struct FnReport {
    std::vector<FnViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks range [0,1], monotonicity (within and across pieces) and supremum 1.
FnReport validate(const DistFn& f);

std::string to_string(FnViolation::Kind kind);

/// Compact human-readable form, e.g. "(0,1]:0 (1,inf):1".
std::string describe(const DistFn& f);

} // namespace smtop

#include "smtop/distfn.hpp"

#include <algorithm>
#include <sstream>

#include "smtop/error.hpp"

namespace smtop {

Poly operator-(const Poly& a, const Poly& b) { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.degree() + b.degree() > 2)
        throw DomainError("product of pieces exceeds degree 2");
    return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
}

namespace {

std::vector<Piece> canonical(std::vector<Piece> pieces)
{
    std::vector<Piece> out;
    out.reserve(pieces.size());
    for (auto& p : pieces) {
        if (!out.empty() && out.back().poly == p.poly)
            out.back().to = p.to;
        else
            out.push_back(std::move(p));
    }
    return out;
}

} // namespace

DistFn::DistFn(std::vector<Piece> pieces) : pieces_(canonical(std::move(pieces))) {}

DistFn DistFn::step(const Rational& a)
{
    if (a <= 0)
        throw DomainError("step threshold must be positive, got " + to_string(a));
    return DistFn({{0, a, Poly::constant(0)}, {a, std::nullopt, Poly::constant(1)}});
}

DistFn DistFn::ramp(const Rational& d)
{
    if (d <= 0)
        throw DomainError("ramp length must be positive, got " + to_string(d));
    return DistFn({{0, d, Poly{0, 1 / d, 0}}, {d, std::nullopt, Poly::constant(1)}});
}

DistFn DistFn::one() { return DistFn({{0, std::nullopt, Poly::constant(1)}}); }

DistFn DistFn::from_pieces(std::vector<Piece> pieces)
{
    if (pieces.empty())
        throw ValidationError("distribution function needs at least one piece");
    if (pieces.front().from != 0)
        throw ValidationError("first piece must start at 0");
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        const auto& p = pieces[k];
        const bool last = k + 1 == pieces.size();
        if (!last) {
            if (!p.to)
                throw ValidationError("only the last piece may be unbounded (piece " + std::to_string(k) + ")");
            if (*p.to <= p.from)
                throw ValidationError("breakpoints must increase (piece " + std::to_string(k) + ")");
            if (pieces[k + 1].from != *p.to)
                throw ValidationError("pieces must be contiguous (piece " + std::to_string(k + 1) + ")");
        } else {
            if (p.to)
                throw ValidationError("last piece must be unbounded");
            if (!p.poly.is_constant())
                throw ValidationError("unbounded piece must be constant");
        }
    }
    return DistFn(std::move(pieces));
}

std::size_t DistFn::piece_index(const Rational& x) const
{
    auto it = std::partition_point(pieces_.begin(), pieces_.end(),
                                   [&](const Piece& p) { return p.to && *p.to < x; });
    return static_cast<std::size_t>(it - pieces_.begin());
}

Rational DistFn::operator()(const Rational& x) const
{
    if (x < 0)
        throw DomainError("distribution functions are evaluated at x >= 0, got " + to_string(x));
    if (x == 0)
        return 0;
    return pieces_[piece_index(x)].poly(x);
}

std::vector<Rational> DistFn::breakpoints() const
{
    std::vector<Rational> out;
    out.reserve(pieces_.size());
    for (const auto& p : pieces_)
        out.push_back(p.from);
    return out;
}

DistFn multiply(const DistFn& f, const DistFn& g)
{
    auto cuts = f.breakpoints();
    auto more = g.breakpoints();
    cuts.insert(cuts.end(), more.begin(), more.end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Piece> pieces;
    pieces.reserve(cuts.size());
    for (std::size_t k = 0; k < cuts.size(); ++k) {
        // Any abscissa inside (cuts[k], cuts[k+1]] selects the covering piece of each factor.
        const bool last = k + 1 == cuts.size();
        const Rational probe = last ? cuts[k] + 1 : cuts[k + 1];
        const auto& pf = f.pieces()[f.piece_index(probe)].poly;
        const auto& pg = g.pieces()[g.piece_index(probe)].poly;
        pieces.push_back({cuts[k], last ? std::nullopt : std::optional<Rational>(cuts[k + 1]), pf * pg});
    }
    return DistFn::from_pieces(std::move(pieces));
}

namespace {

bool in_unit(const Rational& v) { return v >= 0 && v <= 1; }

// Walks x = a + (b - a) / 2^k towards a until pred(x) holds. The caller guarantees
// pred holds on some right neighbourhood of a.
template <class Pred>
Rational approach_left_end(const Rational& a, const Rational& b, Pred pred)
{
    Rational x = b;
    for (int k = 0; k < 4096; ++k) {
        if (pred(x))
            return x;
        x = midpoint(a, x);
    }
    return x;
}

void check_piece_range(const Piece& p, FnReport& report)
{
    const Rational& a = p.from;
    if (!p.bounded()) {
        if (!in_unit(p.poly.c0))
            report.violations.push_back({FnViolation::Kind::Range, {a + 1},
                                         "value " + to_string(p.poly.c0) + " outside [0,1]"});
        return;
    }
    const Rational& b = *p.to;
    auto out = [&](const Rational& x) { return !in_unit(p.poly(x)); };
    std::optional<Rational> witness;
    if (out(b)) {
        witness = b;
    } else if (p.poly.c2 != 0) {
        const Rational vertex = -p.poly.c1 / (2 * p.poly.c2);
        if (vertex > a && vertex < b && out(vertex))
            witness = vertex;
    }
    if (!witness && out(a))
        witness = approach_left_end(a, b, out);
    if (witness)
        report.violations.push_back({FnViolation::Kind::Range, {*witness},
                                     "value " + to_string(p.poly(*witness)) + " outside [0,1] at x=" +
                                         to_string(*witness)});
}

void check_piece_monotone(const Piece& p, FnReport& report)
{
    if (!p.bounded() || p.poly.is_constant())
        return;
    const Rational& a = p.from;
    const Rational& b = *p.to;
    const Poly d = p.poly.derivative();
    // d is affine, so {d < 0} meets (a, b) in one open interval (l, r).
    Rational l = a;
    Rational r = b;
    if (d.c1 == 0) {
        if (d.c0 >= 0)
            return;
    } else {
        const Rational zero = -d.c0 / d.c1;
        if (d.c1 > 0)
            r = std::min(r, zero);
        else
            l = std::max(l, zero);
        if (l >= r)
            return;
    }
    const Rational x1 = l + (r - l) / 3;
    const Rational x2 = l + 2 * (r - l) / 3;
    report.violations.push_back({FnViolation::Kind::Monotone, {x1, x2},
                                 "decreasing on (" + to_string(l) + ", " + to_string(r) + ")"});
}

void check_jump(const Piece& left, const Piece& right, FnReport& report)
{
    const Rational& b = right.from;
    const Rational before = left.poly(b);
    if (right.poly(b) >= before)
        return;
    const Rational end = right.bounded() ? *right.to : b + 1;
    const Rational x2 = approach_left_end(b, end, [&](const Rational& x) { return right.poly(x) < before; });
    report.violations.push_back({FnViolation::Kind::Monotone, {b, x2},
                                 "drops after breakpoint " + to_string(b)});
}

} // namespace

FnReport validate(const DistFn& f)
{
    FnReport report;
    const auto& pieces = f.pieces();
    for (std::size_t k = 0; k < pieces.size(); ++k) {
        check_piece_range(pieces[k], report);
        check_piece_monotone(pieces[k], report);
        if (k > 0)
            check_jump(pieces[k - 1], pieces[k], report);
    }
    const auto& last = pieces.back();
    if (last.poly.c0 != 1)
        report.violations.push_back({FnViolation::Kind::Supremum, {last.from + 1},
                                     "limit at infinity is " + to_string(last.poly.c0) + ", not 1"});
    return report;
}

std::string to_string(FnViolation::Kind kind)
{
    switch (kind) {
    case FnViolation::Kind::Range: return "range";
    case FnViolation::Kind::Monotone: return "monotone";
    case FnViolation::Kind::Supremum: return "supremum";
    }
    return "?";
}

namespace {

std::string poly_text(const Poly& p)
{
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Rational& c, const char* var) {
        if (c == 0)
            return;
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        const Rational mag = abs(c);
        if (*var == '\0' || mag != 1)
            os << to_string(mag);
        os << var;
        first = false;
    };
    term(p.c0, "");
    term(p.c1, "x");
    term(p.c2, "x^2");
    return first ? "0" : os.str();
}

} // namespace

std::string describe(const DistFn& f)
{
    std::ostringstream os;
    bool first = true;
    for (const auto& p : f.pieces()) {
        if (!first)
            os << ' ';
        first = false;
        os << '(' << to_string(p.from) << ',' << (p.to ? to_string(*p.to) : "inf") << (p.to ? "]" : ")") << ':'
           << poly_text(p.poly);
    }
    return os.str();
}

} // namespace smtop

#include "smtop/regimes.hpp"

#include <algorithm>
#include <optional>

namespace smtop {

namespace {

int sgn(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

// sign(a + b sqrt(d))
int sign2(const Rational& a, const Rational& b, const Rational& d)
{
    const int sa = sgn(a);
    const int sb = d == 0 ? 0 : sgn(b);
    if (sb == 0)
        return sa;
    if (sa == 0 || sa == sb)
        return sa == 0 ? sb : sa;
    const Rational lhs = a * a;
    const Rational rhs = b * b * d;
    return lhs > rhs ? sa : (lhs < rhs ? sb : 0);
}

// sign(a + b sqrt(d1) + c sqrt(d2))
int sign3(const Rational& a, const Rational& b, const Rational& d1, const Rational& c, const Rational& d2)
{
    const int s = sign2(a, b, d1);
    const int t = d2 == 0 ? 0 : sgn(c);
    if (t == 0 || s == t)
        return s;
    if (s == 0)
        return t;
    // Opposite signs: the larger magnitude wins. Compare squares.
    const int delta = sign2(a * a + b * b * d1 - c * c * d2, 2 * a * b, d1);
    return delta > 0 ? s : (delta < 0 ? t : 0);
}

std::optional<Rational> rational_sqrt(const Rational& r)
{
    if (r < 0)
        return std::nullopt;
    const Integer num = numerator(r);
    const Integer den = denominator(r);
    const Integer sn = sqrt(num);
    const Integer sd = sqrt(den);
    if (sn * sn != num || sd * sd != den)
        return std::nullopt;
    return Rational(sn, sd);
}

} // namespace

int sign(const Surd& s) { return sign2(s.a, s.b, s.d); }

int compare(const Surd& x, const Surd& y) { return sign3(x.a - y.a, x.b, x.d, -y.b, y.d); }

std::vector<Surd> roots_between(const Poly& p, const Rational& lo, const Rational& hi)
{
    std::vector<Surd> roots;
    if (p.c2 == 0) {
        if (p.c1 != 0)
            roots.push_back(Surd::rational(-p.c0 / p.c1));
    } else {
        const Rational disc = p.c1 * p.c1 - 4 * p.c2 * p.c0;
        const Rational centre = -p.c1 / (2 * p.c2);
        if (disc == 0) {
            roots.push_back(Surd::rational(centre));
        } else if (disc > 0) {
            const Rational scale = 1 / (2 * p.c2);
            if (auto root = rational_sqrt(disc)) {
                roots.push_back(Surd::rational(centre - scale * *root));
                roots.push_back(Surd::rational(centre + scale * *root));
            } else {
                roots.push_back({centre, -scale, disc});
                roots.push_back({centre, scale, disc});
            }
        }
    }
    const Surd l = Surd::rational(lo);
    const Surd h = Surd::rational(hi);
    std::erase_if(roots, [&](const Surd& s) { return compare(s, l) <= 0 || compare(s, h) >= 0; });
    return roots;
}

namespace {

// A rational strictly between alpha < beta, both inside [lo, hi].
Rational rational_between(const Surd& alpha, const Surd& beta, Rational lo, Rational hi)
{
    for (;;) {
        const Rational m = midpoint(lo, hi);
        const Surd sm = Surd::rational(m);
        if (compare(sm, alpha) <= 0)
            lo = m;
        else if (compare(sm, beta) >= 0)
            hi = m;
        else
            return m;
    }
}

} // namespace

std::vector<Rational> regime_samples(const std::vector<const DistFn*>& fns)
{
    std::vector<Rational> cuts{0};
    for (const DistFn* f : fns) {
        auto b = f->breakpoints();
        cuts.insert(cuts.end(), b.begin(), b.end());
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<Rational> samples;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const Rational& lo = cuts[k];
        const Rational& hi = cuts[k + 1];
        std::vector<Poly> polys;
        for (const DistFn* f : fns)
            polys.push_back(f->pieces()[f->piece_index(hi)].poly);
        std::vector<Surd> critical{Surd::rational(lo), Surd::rational(hi)};
        for (std::size_t i = 0; i < polys.size(); ++i)
            for (std::size_t j = i + 1; j < polys.size(); ++j) {
                auto r = roots_between(polys[i] - polys[j], lo, hi);
                critical.insert(critical.end(), r.begin(), r.end());
            }
        std::sort(critical.begin(), critical.end(), [](const Surd& x, const Surd& y) { return compare(x, y) < 0; });
        critical.erase(std::unique(critical.begin(), critical.end(),
                                   [](const Surd& x, const Surd& y) { return compare(x, y) == 0; }),
                       critical.end());
        for (std::size_t i = 0; i + 1 < critical.size(); ++i) {
            samples.push_back(rational_between(critical[i], critical[i + 1], lo, hi));
            const Surd& right = critical[i + 1];
            if (right.is_rational())
                samples.push_back(right.a);
        }
    }
    samples.push_back(cuts.back() + 1);
    std::sort(samples.begin(), samples.end());
    samples.erase(std::unique(samples.begin(), samples.end()), samples.end());
    return samples;
}

} // namespace smtop

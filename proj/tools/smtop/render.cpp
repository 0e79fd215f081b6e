#include "render.hpp"

#include <sstream>

namespace smtop::cli {

std::string set_text(const Ground& g, const PointSet& s)
{
    if (!s.is_cofinite())
        return g.format(s);
    PointSet view;
    for (auto p : g.view(s))
        view.insert(p);
    return g.format(s) + "  window: " + g.format(view);
}

std::string family_text(const Ground& g, const std::vector<PointSet>& family)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < family.size(); ++i)
        os << (i ? ", " : "") << g.format(family[i]);
    os << ']';
    return os.str();
}

std::string pass_fail(bool ok) { return ok ? "pass" : "FAIL"; }

void render_classification(Output& out, const NeighborhoodSystem& sys, const Classification& c)
{
    const Ground& g = sys.ground();
    auto window = [](bool relative) { return relative ? " (window-relative)" : ""; };
    out.line("verdict: " + to_string(c.verdict));
    if (c.n0.passed)
        out.line("N0: pass");
    else if (c.n0.set)
        out.line("N0: FAIL at " + g.label(*c.n0.point) + ": " + g.format(*c.n0.set) + " misses the point");
    else
        out.line("N0: FAIL at " + g.label(*c.n0.point) + ": empty family");
    if (c.n1.passed)
        out.line(std::string("N1: pass") + window(c.n1.window_relative));
    else
        out.line("N1: FAIL at " + g.label(*c.n1.point) + ": no W works for U = " + g.format(*c.n1.set) +
                 window(c.n1.window_relative));
    if (c.n2.passed)
        out.line(std::string("N2: pass") + window(c.n2.window_relative));
    else
        out.line("N2: FAIL at " + g.label(*c.n2.point) + ": nothing inside " + g.format(*c.n2.first) + " and " +
                 g.format(*c.n2.second) + window(c.n2.window_relative));
}

void render_sm_report(Output& out, const SMSpace& s, const SmReport& r, const std::string& prefix)
{
    for (const auto& a : r.axioms) {
        std::string text = prefix + a.axiom + ": " + pass_fail(a.passed);
        if (!a.passed) {
            text += " at (";
            for (std::size_t i = 0; i < a.points.size(); ++i)
                text += (i ? "," : "") + s.label(a.points[i]);
            text += ")";
            if (!a.abscissae.empty()) {
                text += " abscissae";
                for (const auto& x : a.abscissae)
                    text += " " + to_string(x);
            }
            if (!a.detail.empty())
                text += ": " + a.detail;
        }
        out.line(text);
    }
}

void render_menger(Output& out, const SMSpace& s, const MengerReport& r, const std::string& prefix)
{
    std::string text = prefix + "Menger: " + pass_fail(r.ok()) + " (" + std::to_string(r.triples_checked) +
                       " triples, " + std::to_string(r.violating_triples) + " violating)";
    out.line(text);
    if (r.witness) {
        const auto& w = *r.witness;
        out.line(prefix + "  witness p=" + s.label(w.p) + " q=" + s.label(w.q) + " r=" + s.label(w.r) +
                 " x=" + to_string(w.x) + " y=" + to_string(w.y) + ": F_pr(x+y) = " + to_string(w.lhs) +
                 " < T(F_pq(x), F_qr(y)) = " + to_string(w.rhs));
    }
}

void render_tnorm(Output& out, const TNormReport& r)
{
    for (const auto& a : r.axioms) {
        std::string text = a.axiom + ": " + pass_fail(a.passed);
        if (!a.passed) {
            text += " at (";
            for (std::size_t i = 0; i < a.witness.size(); ++i)
                text += (i ? "," : "") + to_string(a.witness[i]);
            text += ")";
            if (!a.detail.empty())
                text += ": " + a.detail;
        }
        out.line(text);
    }
}

void render_system(Output& out, const NeighborhoodSystem& sys)
{
    for (auto p : sys.points())
        out.line(sys.ground().label(p) + ": " + family_text(sys.ground(), sys.family(p)));
}

} // namespace smtop::cli

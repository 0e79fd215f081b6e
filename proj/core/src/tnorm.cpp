#include "smtop/tnorm.hpp"

#include <algorithm>

#include "smtop/error.hpp"

namespace smtop {

TNorm TNorm::product() { return TNorm(Kind::Product); }
TNorm TNorm::minimum() { return TNorm(Kind::Minimum); }

TNorm TNorm::table(std::vector<Rational> grid, std::vector<std::vector<Rational>> values)
{
    if (grid.size() < 2 || grid.front() != 0 || grid.back() != 1)
        throw ValidationError("t-norm table grid must run from 0 to 1");
    if (!std::is_sorted(grid.begin(), grid.end(), std::less_equal<>()) ||
        std::adjacent_find(grid.begin(), grid.end()) != grid.end())
        throw ValidationError("t-norm table grid must be strictly increasing");
    if (values.size() != grid.size())
        throw ValidationError("t-norm table needs one row per grid value");
    for (const auto& row : values) {
        if (row.size() != grid.size())
            throw ValidationError("t-norm table rows must match the grid size");
    }
    TNorm t(Kind::Table);
    t.grid_ = std::move(grid);
    t.values_ = std::move(values);
    return t;
}

std::string TNorm::name() const
{
    switch (kind_) {
    case Kind::Product: return "product";
    case Kind::Minimum: return "min";
    case Kind::Table: return "table";
    }
    return "?";
}

Rational TNorm::operator()(const Rational& a, const Rational& b) const
{
    if (a < 0 || a > 1 || b < 0 || b > 1)
        throw DomainError("t-norm arguments must lie in [0,1], got (" + to_string(a) + ", " + to_string(b) + ")");
    switch (kind_) {
    case Kind::Product: return a * b;
    case Kind::Minimum: return std::min(a, b);
    case Kind::Table: break;
    }
    // Cell [g_i, g_{i+1}] x [g_j, g_{j+1}] containing (a, b).
    auto cell = [&](const Rational& x) {
        auto it = std::upper_bound(grid_.begin(), grid_.end(), x);
        std::size_t i = static_cast<std::size_t>(it - grid_.begin());
        return std::min(i, grid_.size() - 1) - 1;
    };
    const std::size_t i = cell(a);
    const std::size_t j = cell(b);
    const Rational s = (a - grid_[i]) / (grid_[i + 1] - grid_[i]);
    const Rational t = (b - grid_[j]) / (grid_[j + 1] - grid_[j]);
    return (1 - s) * (1 - t) * values_[i][j] + s * (1 - t) * values_[i + 1][j] + (1 - s) * t * values_[i][j + 1] +
           s * t * values_[i + 1][j + 1];
}

std::vector<Rational> default_grid()
{
    std::vector<Rational> grid;
    for (int k = 0; k <= 8; ++k)
        grid.emplace_back(k, 8);
    return grid;
}

bool TNormReport::ok() const
{
    return std::all_of(axioms.begin(), axioms.end(), [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult& TNormReport::at(const std::string& axiom) const
{
    for (const auto& r : axioms) {
        if (r.axiom == axiom)
            return r;
    }
    throw DomainError("no axiom named " + axiom);
}

TNormReport check_axioms(const TNorm& t, const std::vector<Rational>& input)
{
    if (input.empty())
        throw DomainError("axiom grid is empty");
    std::vector<Rational> grid = input;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (grid.front() < 0 || grid.back() > 1)
        throw DomainError("axiom grid must lie in [0,1]");
    if (grid.front() != 0 || grid.back() != 1)
        throw DomainError("axiom grid must contain 0 and 1");

    const std::size_t n = grid.size();
    std::vector<std::vector<Rational>> value(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            value[i][j] = t(grid[i], grid[j]);

    TNormReport report;
    auto fail = [](AxiomResult& r, std::vector<Rational> w, std::string detail) {
        if (!r.passed)
            return;
        r.passed = false;
        r.witness = std::move(w);
        r.detail = std::move(detail);
    };

    AxiomResult bounded{"T-I"};
    AxiomResult monotone{"T-II"};
    AxiomResult commutative{"T-III"};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& v = value[i][j];
            if (v < 0 || v > 1)
                fail(bounded, {grid[i], grid[j]}, "T(a,b) = " + to_string(v));
            if (v != value[j][i])
                fail(commutative, {grid[i], grid[j]}, "T(a,b) != T(b,a)");
            // Grid is sorted, so c >= a and d >= b range over k >= i, l >= j.
            for (std::size_t k = i; k < n && monotone.passed; ++k)
                for (std::size_t l = j; l < n; ++l)
                    if (value[k][l] < v) {
                        fail(monotone, {grid[i], grid[j], grid[k], grid[l]}, "T(c,d) < T(a,b)");
                        break;
                    }
        }
    }

    AxiomResult unit{"T-IV"};
    if (value[n - 1][n - 1] != 1)
        fail(unit, {1, 1}, "T(1,1) = " + to_string(value[n - 1][n - 1]));

    AxiomResult positive{"T-V"};
    for (std::size_t i = 1; i < n; ++i)
        if (value[i][n - 1] <= 0)
            fail(positive, {grid[i], 1}, "T(a,1) = " + to_string(value[i][n - 1]));

    report.axioms = {bounded, monotone, commutative, unit, positive};
    return report;
}

} // namespace smtop

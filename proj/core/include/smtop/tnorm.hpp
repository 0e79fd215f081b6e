#pragma once

#include <string>
#include <vector>

#include "smtop/rational.hpp"

namespace smtop {

/// A 2-place function on the unit square used in the Menger inequality.
///
/// Built-in kinds are the product ab and the minimum. The table kind holds values on
/// a grid 0 = g_0 < ... < g_m = 1 and interpolates bilinearly inside each cell.
class TNorm {
public:
    enum class Kind { Product, Minimum, Table };

    static TNorm product();
    static TNorm minimum();
    /// values[i][j] = T(grid[i], grid[j]). Throws ValidationError if the grid is not
    /// strictly increasing from 0 to 1 or the table is not square over it.
    static TNorm table(std::vector<Rational> grid, std::vector<std::vector<Rational>> values);

    /// Throws DomainError when a or b lies outside [0,1].
    Rational operator()(const Rational& a, const Rational& b) const;

    Kind kind() const { return kind_; }
    std::string name() const;
    const std::vector<Rational>& grid() const { return grid_; }
    const std::vector<std::vector<Rational>>& values() const { return values_; }

private:
    explicit TNorm(Kind kind) : kind_(kind) {}

    Kind kind_;
    std::vector<Rational> grid_;
    std::vector<std::vector<Rational>> values_;
};

/// All multiples of 1/8 in [0,1].
std::vector<Rational> default_grid();

struct AxiomResult {
    std::string axiom;
    bool passed = true;
    /// Arguments at which the axiom fails, e.g. (a, b) or (a, b, c, d).
    std::vector<Rational> witness;
    std::string detail;
};

/// Outcome of checking T-I through T-V over a finite grid. A reported failure is a
/// genuine counterexample; a pass only covers the grid.
struct TNormReport {
    std::vector<AxiomResult> axioms;
    bool ok() const;
    const AxiomResult& at(const std::string& axiom) const;
};

/// Grid-based check of boundedness, monotonicity, commutativity, T(1,1) = 1 and
/// T(a,1) > 0 for a > 0. The grid must be non-empty, lie in [0,1] and contain 0 and 1.
TNormReport check_axioms(const TNorm& t, const std::vector<Rational>& grid);

} // namespace smtop

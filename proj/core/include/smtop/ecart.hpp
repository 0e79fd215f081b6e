#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "smtop/pointset.hpp"

namespace smtop {

/// Element of a (possibly product) poset: one coordinate per factor. For a natural
/// number factor the coordinate is the number; for an explicit factor it is the
/// element's index.
struct PosetElement {
    std::vector<std::uint64_t> coords;
    friend auto operator<=>(const PosetElement&, const PosetElement&) = default;
};

/// Partially ordered set with a least element 0.
///
/// A base poset is either the naturals {0, 1, 2, ...} or an explicit finite set
/// with a strict order. A product poset P1 x P2 compares componentwise-strictly:
/// (a1, a2) < (b1, b2) iff a1 < b1 and a2 < b2. That relation is what makes
/// product spheres factor into boxes.
class Poset {
public:
    static Poset naturals();
    /// `less` lists pairs (a, b) meaning a < b; the transitive closure is taken.
    /// Throws ValidationError on cycles or when `least` is not below every element.
    static Poset finite(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& less,
                        const std::string& least);
    static Poset product(const Poset& a, const Poset& b);

    std::size_t arity() const { return factors_.size(); }
    bool contains(const PosetElement& e) const;
    /// The order used for f-spheres.
    bool less(const PosetElement& a, const PosetElement& b) const;
    /// Componentwise reflexive order, used to bound enumerations.
    bool less_equal(const PosetElement& a, const PosetElement& b) const;
    PosetElement least() const;
    /// Every e with least < e (in the sphere order) and e <= bound componentwise.
    std::vector<PosetElement> positive_up_to(const PosetElement& bound) const;
    /// Every e <= bound componentwise.
    std::vector<PosetElement> up_to(const PosetElement& bound) const;
    /// Every e with least < e whose natural coordinates are at most `cap`; explicit
    /// coordinates range over their whole factor.
    std::vector<PosetElement> positive_capped(std::uint64_t cap) const;

    std::string format(const PosetElement& e) const;
    /// Accepts "3", "b", or "(2,5)" for products. Throws ParseError/DomainError.
    PosetElement parse(std::string_view text) const;

    /// Naturals element, for single-factor naturals posets.
    static PosetElement nat(std::uint64_t n) { return {{n}}; }

private:
    struct Factor {
        bool naturals = true;
        std::vector<std::string> names;
        std::vector<std::vector<bool>> less;  // transitive strict order
        std::uint64_t least = 0;
    };
    bool factor_less(const Factor& f, std::uint64_t a, std::uint64_t b) const;
    std::vector<std::uint64_t> factor_up_to(const Factor& f, std::uint64_t bound) const;

    std::vector<Factor> factors_;
};

/// Generalized écart G: S x S -> P with G(p, p) = 0.
///
/// Over a finite ground the values are a dense table. Over the naturals G follows a
/// rule with a finite distinguished set A: pairs inside A come from an exception
/// table, pairs with exactly one point in A take `mixed`, pairs outside A take
/// `outside`. The diagonal is always the least element.
class GEcart {
public:
    struct Rule {
        std::vector<PointId> distinguished;
        PosetElement outside;
        PosetElement mixed;
        PosetElement inside;  // pairs inside A missing from the table
        std::map<std::pair<PointId, PointId>, PosetElement> table;
    };

    /// `values` is row-major over `domain.points()`; throws ValidationError if a
    /// diagonal value is not least or a value is outside the poset.
    static GEcart dense(Ground domain, Poset range, std::vector<PosetElement> values);
    static GEcart rule(std::size_t window, Poset range, Rule rule);

    const Ground& domain() const { return domain_; }
    const Poset& range() const { return range_; }
    bool is_rule() const { return rule_.has_value(); }
    const Rule& rule_data() const { return *rule_; }

    PosetElement operator()(PointId p, PointId q) const;

    /// Same écart with the window replaced (rule form only).
    GEcart with_window(std::size_t window) const;
    /// Restriction of a rule-form écart over the naturals to the finite ground
    /// {1, ..., window}, labelled "1".."window".
    GEcart windowed() const;

private:
    GEcart() = default;

    Ground domain_;
    Poset range_;
    std::vector<PosetElement> dense_;
    std::optional<Rule> rule_;
};

} // namespace smtop

#include "smtop/ecart.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "smtop/error.hpp"

namespace smtop {

Poset Poset::naturals()
{
    Poset p;
    p.factors_.push_back(Factor{});
    return p;
}

Poset Poset::finite(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& less,
                    const std::string& least)
{
    const std::size_t n = names.size();
    if (n == 0)
        throw ValidationError("poset needs at least one element");
    auto index = [&](const std::string& name) -> std::size_t {
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw ValidationError("poset relation names unknown element '" + name + "'");
        return static_cast<std::size_t>(it - names.begin());
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (names[i] == names[j])
                throw ValidationError("duplicate poset element '" + names[i] + "'");

    Factor f;
    f.naturals = false;
    f.less.assign(n, std::vector<bool>(n, false));
    for (const auto& [a, b] : less)
        f.less[index(a)][index(b)] = true;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (f.less[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (f.less[k][j])
                        f.less[i][j] = true;
    for (std::size_t i = 0; i < n; ++i)
        if (f.less[i][i])
            throw ValidationError("poset relation is not irreflexive at '" + names[i] + "' (cycle)");
    f.least = index(least);
    for (std::size_t i = 0; i < n; ++i)
        if (i != f.least && !f.less[f.least][i])
            throw ValidationError("'" + least + "' is not below '" + names[i] + "'");
    f.names = std::move(names);

    Poset p;
    p.factors_.push_back(std::move(f));
    return p;
}

Poset Poset::product(const Poset& a, const Poset& b)
{
    Poset p;
    p.factors_ = a.factors_;
    p.factors_.insert(p.factors_.end(), b.factors_.begin(), b.factors_.end());
    return p;
}

bool Poset::contains(const PosetElement& e) const
{
    if (e.coords.size() != factors_.size())
        return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i].naturals && e.coords[i] >= factors_[i].names.size())
            return false;
    return true;
}

bool Poset::factor_less(const Factor& f, std::uint64_t a, std::uint64_t b) const
{
    return f.naturals ? a < b : static_cast<bool>(f.less[a][b]);
}

bool Poset::less(const PosetElement& a, const PosetElement& b) const
{
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (!factor_less(factors_[i], a.coords[i], b.coords[i]))
            return false;
    return true;
}

bool Poset::less_equal(const PosetElement& a, const PosetElement& b) const
{
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (a.coords[i] != b.coords[i] && !factor_less(factors_[i], a.coords[i], b.coords[i]))
            return false;
    return true;
}

PosetElement Poset::least() const
{
    PosetElement e;
    for (const auto& f : factors_)
        e.coords.push_back(f.least);
    return e;
}

std::vector<std::uint64_t> Poset::factor_up_to(const Factor& f, std::uint64_t bound) const
{
    std::vector<std::uint64_t> out;
    if (f.naturals) {
        for (std::uint64_t k = 0; k <= bound; ++k)
            out.push_back(k);
        return out;
    }
    for (std::uint64_t k = 0; k < f.names.size(); ++k)
        if (k == bound || f.less[k][bound])
            out.push_back(k);
    return out;
}

std::vector<PosetElement> Poset::up_to(const PosetElement& bound) const
{
    if (!contains(bound))
        throw DomainError("bound is not an element of the poset");
    std::vector<PosetElement> out{PosetElement{}};
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::vector<PosetElement> next;
        for (const auto& prefix : out)
            for (auto c : factor_up_to(factors_[i], bound.coords[i])) {
                auto e = prefix;
                e.coords.push_back(c);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<PosetElement> Poset::positive_up_to(const PosetElement& bound) const
{
    auto all = up_to(bound);
    const auto zero = least();
    std::erase_if(all, [&](const PosetElement& e) { return !less(zero, e); });
    return all;
}

std::vector<PosetElement> Poset::positive_capped(std::uint64_t cap) const
{
    std::vector<PosetElement> out{PosetElement{}};
    for (const auto& f : factors_) {
        std::vector<PosetElement> next;
        const std::uint64_t n = f.naturals ? cap + 1 : f.names.size();
        for (const auto& prefix : out)
            for (std::uint64_t c = 0; c < n; ++c) {
                auto e = prefix;
                e.coords.push_back(c);
                next.push_back(std::move(e));
            }
        out = std::move(next);
    }
    const auto zero = least();
    std::erase_if(out, [&](const PosetElement& e) { return !less(zero, e); });
    return out;
}

std::string Poset::format(const PosetElement& e) const
{
    auto coord = [&](std::size_t i) {
        const auto& f = factors_[i];
        return f.naturals ? std::to_string(e.coords[i]) : f.names.at(e.coords[i]);
    };
    if (factors_.size() == 1)
        return coord(0);
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < factors_.size(); ++i)
        os << (i ? "," : "") << coord(i);
    os << ')';
    return os.str();
}

PosetElement Poset::parse(std::string_view text) const
{
    std::vector<std::string_view> parts;
    if (factors_.size() == 1) {
        parts.push_back(text);
    } else {
        if (text.size() < 2 || text.front() != '(' || text.back() != ')')
            throw ParseError("product poset element must look like (a,b): '" + std::string(text) + "'");
        auto body = text.substr(1, text.size() - 2);
        std::size_t start = 0;
        for (std::size_t i = 0; i <= body.size(); ++i)
            if (i == body.size() || body[i] == ',') {
                parts.push_back(body.substr(start, i - start));
                start = i + 1;
            }
    }
    if (parts.size() != factors_.size())
        throw DomainError("poset element '" + std::string(text) + "' has the wrong number of coordinates");
    PosetElement e;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const auto& f = factors_[i];
        const auto part = parts[i];
        if (f.naturals) {
            std::uint64_t n = 0;
            auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), n);
            if (ec != std::errc() || ptr != part.data() + part.size())
                throw ParseError("not a natural number: '" + std::string(part) + "'");
            e.coords.push_back(n);
        } else {
            auto it = std::find(f.names.begin(), f.names.end(), part);
            if (it == f.names.end())
                throw DomainError("'" + std::string(part) + "' is not an element of the poset");
            e.coords.push_back(static_cast<std::uint64_t>(it - f.names.begin()));
        }
    }
    return e;
}

GEcart GEcart::dense(Ground domain, Poset range, std::vector<PosetElement> values)
{
    if (!domain.is_finite())
        throw ValidationError("dense g-ecart needs a finite ground");
    const std::size_t n = domain.size();
    if (values.size() != n * n)
        throw ValidationError("g-ecart table must have one value per ordered pair");
    const auto zero = range.least();
    for (PointId p = 0; p < n; ++p)
        for (PointId q = 0; q < n; ++q) {
            const auto& v = values[p * n + q];
            if (!range.contains(v))
                throw ValidationError("g-ecart value at (" + domain.label(p) + "," + domain.label(q) +
                                      ") is not in the poset");
            if (p == q && v != zero)
                throw ValidationError("G(" + domain.label(p) + "," + domain.label(p) + ") must be the least element");
        }
    GEcart g;
    g.domain_ = std::move(domain);
    g.range_ = std::move(range);
    g.dense_ = std::move(values);
    return g;
}

GEcart GEcart::rule(std::size_t window, Poset range, Rule rule)
{
    auto check = [&](const PosetElement& v, const std::string& where) {
        if (!range.contains(v))
            throw ValidationError("g-ecart value for " + where + " is not in the poset");
    };
    check(rule.outside, "pairs outside A");
    check(rule.mixed, "mixed pairs");
    check(rule.inside, "pairs inside A");
    std::sort(rule.distinguished.begin(), rule.distinguished.end());
    rule.distinguished.erase(std::unique(rule.distinguished.begin(), rule.distinguished.end()),
                             rule.distinguished.end());
    for (auto a : rule.distinguished)
        if (a == 0)
            throw ValidationError("distinguished set must contain positive naturals");
    auto in_a = [&](PointId p) { return std::binary_search(rule.distinguished.begin(), rule.distinguished.end(), p); };
    for (const auto& [pq, v] : rule.table) {
        const std::string where = "(" + std::to_string(pq.first) + "," + std::to_string(pq.second) + ")";
        if (!in_a(pq.first) || !in_a(pq.second))
            throw ValidationError("g-ecart table entry " + where + " lies outside A x A");
        check(v, where);
        if (pq.first == pq.second && v != range.least())
            throw ValidationError("G" + where + " must be the least element");
    }
    GEcart g;
    g.domain_ = Ground::naturals(window);
    g.range_ = std::move(range);
    g.rule_ = std::move(rule);
    return g;
}

PosetElement GEcart::operator()(PointId p, PointId q) const
{
    if (!domain_.has(p) || !domain_.has(q))
        throw DomainError("point outside the g-ecart domain");
    if (p == q)
        return range_.least();
    if (!rule_)
        return dense_[p * domain_.size() + q];
    const auto& a = rule_->distinguished;
    const bool pa = std::binary_search(a.begin(), a.end(), p);
    const bool qa = std::binary_search(a.begin(), a.end(), q);
    if (pa && qa) {
        auto it = rule_->table.find({p, q});
        return it != rule_->table.end() ? it->second : rule_->inside;
    }
    return pa || qa ? rule_->mixed : rule_->outside;
}

GEcart GEcart::with_window(std::size_t window) const
{
    if (!rule_)
        throw DomainError("only rule-form g-ecarts carry a window");
    GEcart g = *this;
    g.domain_ = Ground::naturals(window);
    return g;
}

GEcart GEcart::windowed() const
{
    if (!rule_)
        return *this;
    const std::size_t w = domain_.window();
    std::vector<std::string> labels;
    for (std::size_t n = 1; n <= w; ++n)
        labels.push_back(std::to_string(n));
    std::vector<PosetElement> values;
    values.reserve(w * w);
    for (PointId p = 1; p <= w; ++p)
        for (PointId q = 1; q <= w; ++q)
            values.push_back((*this)(p, q));
    return dense(Ground::finite(std::move(labels)), range_, std::move(values));
}

} // namespace smtop

#include "smtop/pointset.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>

#include "smtop/error.hpp"

namespace smtop {

namespace {

using Words = std::vector<std::uint64_t>;

constexpr std::size_t kBits = 64;

std::uint64_t word(const Words& w, std::size_t i) { return i < w.size() ? w[i] : 0; }

template <class Op>
Words combine(const Words& a, const Words& b, Op op)
{
    Words out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = op(word(a, i), word(b, i));
    return out;
}

// a \ b is empty
bool within(const Words& a, const Words& b)
{
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~word(b, i))
            return false;
    return true;
}

bool overlap(const Words& a, const Words& b)
{
    const auto n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & b[i])
            return true;
    return false;
}

std::vector<PointId> set_bits(const Words& w)
{
    std::vector<PointId> out;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::uint64_t x = w[i]; x != 0; x &= x - 1)
            out.push_back(i * kBits + static_cast<std::size_t>(std::countr_zero(x)));
    return out;
}

std::size_t popcount(const Words& w)
{
    std::size_t n = 0;
    for (auto x : w)
        n += static_cast<std::size_t>(std::popcount(x));
    return n;
}

} // namespace

PointSet::PointSet(std::initializer_list<PointId> ids)
{
    for (auto p : ids)
        insert(p);
}

PointSet PointSet::of(const std::vector<PointId>& ids)
{
    PointSet s;
    for (auto p : ids)
        s.insert(p);
    return s;
}

PointSet PointSet::first(std::size_t n)
{
    PointSet s;
    s.words_.assign((n + kBits - 1) / kBits, ~std::uint64_t{0});
    if (n % kBits)
        s.words_.back() = (std::uint64_t{1} << (n % kBits)) - 1;
    return s;
}

PointSet PointSet::all_but(const std::vector<PointId>& excluded)
{
    PointSet s = of(excluded);
    s.cofinite_ = true;
    return s;
}

bool PointSet::contains(PointId p) const
{
    const bool bit = (word(words_, p / kBits) >> (p % kBits)) & 1U;
    return cofinite_ ? !bit : bit;
}

std::size_t PointSet::count() const
{
    if (cofinite_)
        throw DomainError("cofinite set has no finite count");
    return popcount(words_);
}

std::vector<PointId> PointSet::ids() const { return set_bits(words_); }

void PointSet::insert(PointId p)
{
    const auto i = p / kBits;
    const auto mask = std::uint64_t{1} << (p % kBits);
    if (cofinite_) {
        if (i < words_.size())
            words_[i] &= ~mask;
        trim();
        return;
    }
    if (i >= words_.size())
        words_.resize(i + 1);
    words_[i] |= mask;
}

void PointSet::erase(PointId p)
{
    const auto i = p / kBits;
    const auto mask = std::uint64_t{1} << (p % kBits);
    if (cofinite_) {
        if (i >= words_.size())
            words_.resize(i + 1);
        words_[i] |= mask;
        return;
    }
    if (i < words_.size())
        words_[i] &= ~mask;
    trim();
}

void PointSet::trim()
{
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

PointSet PointSet::intersect(const PointSet& other) const
{
    PointSet out;
    if (!cofinite_ && !other.cofinite_) {
        out.words_ = combine(words_, other.words_, [](auto a, auto b) { return a & b; });
    } else if (cofinite_ && other.cofinite_) {
        out.cofinite_ = true;
        out.words_ = combine(words_, other.words_, [](auto a, auto b) { return a | b; });
    } else {
        const auto& fin = cofinite_ ? other.words_ : words_;
        const auto& excl = cofinite_ ? words_ : other.words_;
        out.words_ = combine(fin, excl, [](auto a, auto b) { return a & ~b; });
    }
    out.trim();
    return out;
}

PointSet PointSet::unite(const PointSet& other) const
{
    PointSet out;
    if (!cofinite_ && !other.cofinite_) {
        out.words_ = combine(words_, other.words_, [](auto a, auto b) { return a | b; });
    } else if (cofinite_ && other.cofinite_) {
        out.cofinite_ = true;
        out.words_ = combine(words_, other.words_, [](auto a, auto b) { return a & b; });
    } else {
        out.cofinite_ = true;
        const auto& fin = cofinite_ ? other.words_ : words_;
        const auto& excl = cofinite_ ? words_ : other.words_;
        out.words_ = combine(excl, fin, [](auto a, auto b) { return a & ~b; });
    }
    out.trim();
    return out;
}

bool PointSet::subset_of(const PointSet& other) const
{
    if (!cofinite_ && !other.cofinite_)
        return within(words_, other.words_);
    if (!cofinite_)
        return !overlap(words_, other.words_);
    if (!other.cofinite_)
        return false;
    return within(other.words_, words_);
}

bool PointSet::intersects(const PointSet& other) const
{
    if (!cofinite_ && !other.cofinite_)
        return overlap(words_, other.words_);
    if (cofinite_ && other.cofinite_)
        return true;
    const auto& fin = cofinite_ ? other.words_ : words_;
    const auto& excl = cofinite_ ? words_ : other.words_;
    return !within(fin, excl);
}

bool operator==(const PointSet& a, const PointSet& b)
{
    return a.cofinite_ == b.cofinite_ && a.words_ == b.words_;
}

bool operator<(const PointSet& a, const PointSet& b)
{
    if (a.cofinite_ != b.cofinite_)
        return !a.cofinite_;
    const auto ca = popcount(a.words_);
    const auto cb = popcount(b.words_);
    if (ca != cb)
        return a.cofinite_ ? ca > cb : ca < cb;
    return set_bits(a.words_) < set_bits(b.words_);
}

void normalize(std::vector<PointSet>& family)
{
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
}

Ground Ground::finite(std::vector<std::string> labels)
{
    Ground g;
    g.labels_ = std::move(labels);
    return g;
}

Ground Ground::naturals(std::size_t window)
{
    Ground g;
    g.naturals_ = true;
    g.window_ = window;
    return g;
}

std::vector<PointId> Ground::points() const
{
    std::vector<PointId> out;
    if (naturals_) {
        for (PointId n = 1; n <= window_; ++n)
            out.push_back(n);
    } else {
        for (PointId p = 0; p < labels_.size(); ++p)
            out.push_back(p);
    }
    return out;
}

std::string Ground::label(PointId p) const
{
    if (naturals_)
        return std::to_string(p);
    return labels_.at(p);
}

std::optional<PointId> Ground::find(std::string_view label) const
{
    if (naturals_) {
        PointId n = 0;
        auto [ptr, ec] = std::from_chars(label.data(), label.data() + label.size(), n);
        if (ec != std::errc() || ptr != label.data() + label.size() || n == 0)
            return std::nullopt;
        return n;
    }
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end())
        return std::nullopt;
    return static_cast<PointId>(it - labels_.begin());
}

bool Ground::has(PointId p) const { return naturals_ ? p >= 1 : p < labels_.size(); }

PointSet Ground::all() const { return naturals_ ? PointSet::all_but({}) : PointSet::first(labels_.size()); }

PointSet Ground::complement(const PointSet& s) const
{
    if (naturals_)
        return s.is_cofinite() ? PointSet::of(s.ids()) : PointSet::all_but(s.ids());
    PointSet out = all();
    for (auto p : s.ids())
        out.erase(p);
    return out;
}

std::vector<PointId> Ground::view(const PointSet& s) const
{
    std::vector<PointId> out;
    for (auto p : points())
        if (s.contains(p))
            out.push_back(p);
    return out;
}

std::string Ground::format(const PointSet& s) const
{
    auto list = [&](const std::vector<PointId>& ids) {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < ids.size(); ++i)
            os << (i ? ", " : "") << label(ids[i]);
        os << '}';
        return os.str();
    };
    if (!s.is_cofinite())
        return list(s.ids());
    const auto excluded = s.ids();
    return excluded.empty() ? std::string("S") : "S \\ " + list(excluded);
}

std::vector<std::pair<PointId, PointId>> PairSet::pairs() const
{
    std::vector<std::pair<PointId, PointId>> out;
    for (auto i : bits_.ids())
        out.emplace_back(i / n_, i % n_);
    return out;
}

PointSet PairSet::slice(PointId p) const
{
    PointSet s;
    for (PointId q = 0; q < n_; ++q)
        if (contains(p, q))
            s.insert(q);
    return s;
}

bool operator<(const PairSet& a, const PairSet& b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a.pairs() < b.pairs();
}

} // namespace smtop

#pragma once

#include <algorithm>
#include <compare>
#include <utility>
#include <vector>

namespace chowkit {

/// Sparse exponent vector over interned generator ids. No zero exponents
/// are stored and entries are kept sorted by id, so equality is structural.
class Monomial {
public:
    using Entry = std::pair<int, int>; // (generator id, exponent > 0)

    Monomial() = default;

    static Monomial one() { return Monomial{}; }

    static Monomial generator(int id, int exp = 1) {
        Monomial m;
        if (exp > 0) m.entries_.emplace_back(id, exp);
        return m;
    }

    /// Entries need not be sorted or coalesced; zeros are dropped.
    static Monomial from_entries(std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end());
        Monomial m;
        for (const auto& [id, e] : entries) {
            if (e == 0) continue;
            if (!m.entries_.empty() && m.entries_.back().first == id)
                m.entries_.back().second += e;
            else
                m.entries_.emplace_back(id, e);
        }
        return m;
    }

    bool is_one() const { return entries_.empty(); }

    int exponent(int id) const {
        for (const auto& [g, e] : entries_)
            if (g == id) return e;
        return 0;
    }

    const std::vector<Entry>& entries() const { return entries_; }

    Monomial operator*(const Monomial& other) const {
        Monomial out;
        auto a = entries_.begin(), b = other.entries_.begin();
        while (a != entries_.end() || b != other.entries_.end()) {
            if (b == other.entries_.end() ||
                (a != entries_.end() && a->first < b->first)) {
                out.entries_.push_back(*a++);
            } else if (a == entries_.end() || b->first < a->first) {
                out.entries_.push_back(*b++);
            } else {
                out.entries_.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        return out;
    }

    bool divides(const Monomial& m) const {
        for (const auto& [g, e] : entries_)
            if (m.exponent(g) < e) return false;
        return true;
    }

    /// Quotient m -> m / this. Requires divides(m).
    Monomial quotient_of(const Monomial& m) const {
        std::vector<Entry> out;
        for (const auto& [g, e] : m.entries_) {
            int rest = e - exponent(g);
            if (rest > 0) out.emplace_back(g, rest);
        }
        return from_entries(std::move(out));
    }

    /// Strip one generator entirely (used by fiber projections).
    Monomial without(int id) const {
        std::vector<Entry> out;
        for (const auto& [g, e] : entries_)
            if (g != id) out.emplace_back(g, e);
        return from_entries(std::move(out));
    }

    bool operator==(const Monomial&) const = default;

    /// Deterministic total order for use as a map key.
    std::strong_ordering operator<=>(const Monomial& other) const {
        return std::lexicographical_compare_three_way(
            entries_.begin(), entries_.end(), other.entries_.begin(),
            other.entries_.end());
    }

private:
    std::vector<Entry> entries_;
};

} // namespace chowkit

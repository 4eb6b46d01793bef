#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <vector>

namespace bei {

// Set of vertices out of a universe 1..n, n <= 64. Bit v-1 represents vertex v.
// Small and copyable; all the component/cut-point queries reduce to mask ops.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t mask) : bits_(mask) {}

    static constexpr int max_universe = 64;

    static constexpr VertexSet single(int v) { return VertexSet(bit(v)); }
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ull : (1ull << n) - 1);
    }

    constexpr bool contains(int v) const { return (bits_ & bit(v)) != 0; }
    constexpr void insert(int v) { bits_ |= bit(v); }
    constexpr void erase(int v) { bits_ &= ~bit(v); }

    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int min() const { return std::countr_zero(bits_) + 1; } // undefined if empty
    constexpr std::uint64_t mask() const { return bits_; }

    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    constexpr VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet with(int v) const { return VertexSet(bits_ | bit(v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~bit(v)); }

    constexpr bool operator==(const VertexSet&) const = default;

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    // Ascending member order: {1,4} before {2,3}. Mask order would give the
    // opposite, so sorting of reports goes through this.
    static bool lex_less(VertexSet a, VertexSet b) {
        while (!a.empty() && !b.empty()) {
            if (a.min() != b.min()) return a.min() < b.min();
            a.erase(a.min());
            b.erase(b.min());
        }
        return !b.empty();
    }

    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_) + 1; }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    static constexpr std::uint64_t bit(int v) { return 1ull << (v - 1); }
    std::uint64_t bits_ = 0;
};

} // namespace bei

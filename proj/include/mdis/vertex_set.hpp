#pragma once

#include <bit>
#include <compare>
#include <cstdint>

namespace mdis {

// A set of vertices out of {0, ..., 63}, stored as a bitmask.
class VertexSet {
public:
    static constexpr int max_vertices = 64;

    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    // The full set {0, ..., n-1}.
    static constexpr VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t mask() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }

    constexpr VertexSet& add(int v) { bits_ |= std::uint64_t{1} << v; return *this; }
    constexpr VertexSet& remove(int v) { bits_ &= ~(std::uint64_t{1} << v); return *this; }

    constexpr VertexSet with(int v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    // Lowest vertex in the set; undefined on an empty set.
    constexpr int front() const { return std::countr_zero(bits_); }

    constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator^(VertexSet a, VertexSet b) { return VertexSet(a.bits_ ^ b.bits_); }
    // Set difference.
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }

    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    // Total order by mask value; used wherever deterministic output matters.
    friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
        return a.bits_ <=> b.bits_;
    }
    friend constexpr bool operator==(VertexSet a, VertexSet b) = default;

    class iterator {
    public:
        explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        friend constexpr bool operator==(iterator a, iterator b) = default;
    private:
        std::uint64_t rest_;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

} // namespace mdis

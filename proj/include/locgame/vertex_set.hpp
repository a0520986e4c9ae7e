#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace locgame {

using Vertex = int;

/// Subset of {0, ..., 63} packed into a single word. Iteration is ascending.
class VertexSet {
public:
    static constexpr int kCapacity = 64;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> vertices)
    {
        for (Vertex v : vertices) insert(v);
    }

    static constexpr VertexSet singleton(Vertex v) { return VertexSet(std::uint64_t{1} << v); }
    static constexpr VertexSet full(int n)
    {
        return VertexSet(n >= kCapacity ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool is_singleton() const { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    /// Smallest element; undefined on the empty set.
    constexpr Vertex min() const { return std::countr_zero(bits_); }
    constexpr Vertex max() const { return 63 - std::countl_zero(bits_); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o)
    {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o)
    {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o)
    {
        bits_ &= ~o.bits_;
        return *this;
    }

    constexpr bool operator==(const VertexSet&) const = default;

private:
    std::uint64_t bits_ = 0;
};

/// Order used for every listing of sets: by cardinality, then lexicographically
/// on the ascending element sequence ("13" < "23" < "123").
bool set_order_less(VertexSet a, VertexSet b);

/// Raw-bits order; cheap, stable, only meaningful as a map key.
struct VertexSetBitsLess {
    bool operator()(VertexSet a, VertexSet b) const { return a.bits() < b.bits(); }
};

/// Human-facing label with 1-based vertex names. Labels are concatenated
/// ("145") when every vertex name is a single digit, dot-separated otherwise.
std::string set_label(VertexSet s, int n);

/// Comma-separated list of 1-based vertex names, e.g. "1,4,5".
std::string set_list(VertexSet s);

}  // namespace locgame

template <>
struct std::hash<locgame::VertexSet> {
    std::size_t operator()(locgame::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

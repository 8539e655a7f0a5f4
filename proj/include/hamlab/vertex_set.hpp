#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hamlab {

/// Vertex ids are dense and 0-based.
using Vertex = int;

/// Maximum supported order; one neighbour set fits one machine word.
inline constexpr int max_order = 64;

/// A set of vertex ids in [0, 64), stored as a single bit word.
class VertexSet {
   public:
    class iterator {
       public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}

        Vertex operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

       private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<Vertex> members) {
        for (Vertex v : members) insert(v);
    }

    /// {lo, lo+1, ..., hi-1}
    static constexpr VertexSet range(Vertex lo, Vertex hi) {
        if (hi <= lo) return VertexSet{};
        return VertexSet(low_bits(hi) & ~low_bits(lo));
    }
    /// {0, ..., n-1}
    static constexpr VertexSet first(int n) { return range(0, n); }
    static VertexSet of(const std::vector<Vertex>& members) {
        VertexSet s;
        for (Vertex v : members) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return v >= 0 && v < max_order && ((bits_ >> v) & 1U); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Smallest member; undefined on the empty set.
    constexpr Vertex min() const { return std::countr_zero(bits_); }
    /// Largest member; undefined on the empty set.
    constexpr Vertex max() const { return 63 - std::countl_zero(bits_); }
    /// True iff every member is < n.
    constexpr bool within(int n) const { return (bits_ & ~low_bits(n)) == 0; }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    iterator begin() const { return iterator{bits_}; }
    iterator end() const { return iterator{0}; }
    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator&=(VertexSet o) {
        bits_ &= o.bits_;
        return *this;
    }
    constexpr VertexSet& operator-=(VertexSet o) {
        bits_ &= ~o.bits_;
        return *this;
    }
    constexpr bool operator==(const VertexSet&) const = default;
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

   private:
    static constexpr std::uint64_t low_bits(int n) {
        return n >= 64 ? ~std::uint64_t{0} : (n <= 0 ? 0 : (std::uint64_t{1} << n) - 1);
    }

    std::uint64_t bits_ = 0;
};

}  // namespace hamlab

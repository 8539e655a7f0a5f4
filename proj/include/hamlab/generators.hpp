#pragma once

// Named digraph families, seeded random strong digraphs, and exhaustive
// labeled enumeration.

#include <array>
#include <cstdint>
#include <span>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamlab/digraph.hpp"
#include "hamlab/random.hpp"

namespace hamlab {

namespace detail {

inline void require_order(long n, long lo, const char* what) {
    if (n < lo || n > max_order) {
        throw InvalidArgument(std::string(what) + ": order " + std::to_string(n) + " outside [" + std::to_string(lo) +
                              ", 64]");
    }
}

}  // namespace detail

/// K*_{p,q}: parts [0,p) and [p,p+q), every cross pair joined both ways.
inline Digraph gen_kstar(int p, int q) {
    if (p < 1 || q < 1) throw InvalidArgument("kstar: part sizes must be >= 1");
    detail::require_order(static_cast<long>(p) + q, 2, "kstar");
    const VertexSet x = VertexSet::range(0, p);
    const VertexSet y = VertexSet::range(p, p + q);
    std::array<std::uint64_t, max_order> rows{};
    for (Vertex v = 0; v < p + q; ++v) rows[v] = (v < p ? y : x).bits();
    return Digraph::from_out_rows(p + q, std::span(rows).first(p + q));
}

/// K*_{p,q} without the arc 0 -> p.
inline Digraph gen_kstar_minus_arc(int p, int q) { return gen_kstar(p, q).without_arc(0, p); }

/// Two complete digraphs on m vertices sharing vertex 0; order 2m-1.
inline Digraph gen_two_cliques(int m) {
    if (m < 2) throw InvalidArgument("two-cliques: m must be >= 2");
    detail::require_order(2L * m - 1, 3, "two-cliques");
    const int n = 2 * m - 1;
    const VertexSet left = VertexSet::range(0, m);
    VertexSet right = VertexSet::range(m, n);
    right.insert(0);
    std::vector<std::uint64_t> rows(n);
    for (Vertex v = 0; v < n; ++v) {
        VertexSet row;
        if (left.contains(v)) row |= left;
        if (right.contains(v)) row |= right;
        row.erase(v);
        rows[v] = row.bits();
    }
    return Digraph::from_out_rows(n, rows);
}

/// i -> i+1 (mod n).
inline Digraph gen_directed_cycle(int n) {
    detail::require_order(n, 2, "cycle");
    std::array<std::uint64_t, max_order> rows{};
    for (Vertex v = 0; v < n; ++v) rows[v] = std::uint64_t{1} << ((v + 1) % n);
    return Digraph::from_out_rows(n, std::span(rows).first(n));
}

/// Every ordered pair joined.
inline Digraph gen_complete(int n) {
    detail::require_order(n, 1, "complete");
    std::array<std::uint64_t, max_order> rows{};
    for (Vertex v = 0; v < n; ++v) rows[v] = (VertexSet::first(n) - VertexSet(std::uint64_t{1} << v)).bits();
    return Digraph::from_out_rows(n, std::span(rows).first(n));
}

// ---------------------------------------------------------------------------
// Random strong digraphs

inline constexpr std::uint64_t max_strong_rejections = 1'000'000;

/// One labeled digraph: a draw per ordered pair (u,v), u != v, row-major;
/// the arc is present iff draw < threshold.
inline Digraph sample_digraph(int n, std::uint64_t threshold, SplitMix64& rng) {
    std::array<std::uint64_t, max_order> rows{};
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u != v && rng.next() < threshold) rows[u] |= std::uint64_t{1} << v;
        }
    }
    return Digraph::from_out_rows(n, std::span(rows).first(n));
}

/// Resamples from `rng` until the digraph is strong.
inline Digraph sample_strong(int n, double arc_prob, SplitMix64& rng) {
    detail::require_order(n, 2, "random-strong");
    const std::uint64_t threshold = probability_threshold(arc_prob);
    for (std::uint64_t attempt = 0; attempt < max_strong_rejections; ++attempt) {
        Digraph d = sample_digraph(n, threshold, rng);
        if (is_strong(d)) return d;
    }
    throw SamplingExhausted("no strong digraph after " + std::to_string(max_strong_rejections) +
                            " samples; arc probability too small");
}

inline Digraph gen_random_strong(int n, double arc_prob, std::uint64_t seed) {
    SplitMix64 rng(seed);
    return sample_strong(n, arc_prob, rng);
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration

/// Exhaustive labeled enumeration is capped at n(n-1) <= 40 bits.
inline constexpr int max_enumeration_bits = 40;

inline int labeled_bits(int n) { return n * (n - 1); }

/// Digraph whose arc set is the bit pattern `index`: bit i stands for the
/// i-th ordered pair (u,v), u != v, in row-major order.
inline Digraph digraph_from_index(int n, std::uint64_t index) {
    std::array<std::uint64_t, max_order> rows{};
    int bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            if ((index >> bit) & 1U) rows[u] |= std::uint64_t{1} << v;
            ++bit;
        }
    }
    return Digraph::from_out_rows(n, std::span(rows).first(n));
}

/// Position of a digraph in the labeled enumeration (inverse of digraph_from_index).
inline std::uint64_t index_of(const Digraph& d) {
    std::uint64_t index = 0;
    int bit = 0;
    for (Vertex u = 0; u < d.order(); ++u) {
        for (Vertex v = 0; v < d.order(); ++v) {
            if (u == v) continue;
            if (d.has_arc(u, v)) index |= std::uint64_t{1} << bit;
            ++bit;
        }
    }
    return index;
}

struct EnumerationCursor {
    int n = 0;
    std::uint64_t index = 0;  ///< next index to yield
    std::uint64_t shard = 0;
    std::uint64_t shards = 1;

    bool operator==(const EnumerationCursor&) const = default;
};

/// Streams (index, digraph) for every index = shard (mod shards), ascending.
class LabeledEnumerator {
   public:
    LabeledEnumerator(int n, std::uint64_t shard, std::uint64_t shards) : LabeledEnumerator(EnumerationCursor{n, shard, shard, shards}) {}

    /// Resumes from a cursor; `cursor.index` must be in the cursor's residue class.
    explicit LabeledEnumerator(EnumerationCursor cursor) : cursor_(cursor) {
        detail::require_order(cursor.n, 1, "enumeration");
        if (labeled_bits(cursor.n) > max_enumeration_bits) {
            throw CapExceeded("order " + std::to_string(cursor.n) + " has 2^" + std::to_string(labeled_bits(cursor.n)) +
                              " labeled digraphs, above the 2^40 cap");
        }
        if (cursor.shards == 0 || cursor.shard >= cursor.shards) throw InvalidArgument("shard must lie in [0, shards)");
        if (cursor.index % cursor.shards != cursor.shard) throw InvalidArgument("cursor index outside its shard");
        total_ = std::uint64_t{1} << labeled_bits(cursor.n);
    }

    std::optional<std::pair<std::uint64_t, Digraph>> next() {
        if (cursor_.index >= total_) return std::nullopt;
        std::uint64_t index = cursor_.index;
        cursor_.index += cursor_.shards;
        return std::pair{index, digraph_from_index(cursor_.n, index)};
    }

    const EnumerationCursor& cursor() const { return cursor_; }
    std::uint64_t total() const { return total_; }
    bool done() const { return cursor_.index >= total_; }

   private:
    EnumerationCursor cursor_;
    std::uint64_t total_ = 0;
};

inline constexpr int max_tournament_order = 8;

/// Tournament whose orientation is the bit pattern `index`: bit i stands for
/// the i-th unordered pair u < v in row-major order, set means u -> v.
inline Digraph tournament_from_index(int n, std::uint64_t index) {
    std::array<std::uint64_t, max_order> rows{};
    int bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if ((index >> bit) & 1U) rows[u] |= std::uint64_t{1} << v;
            else rows[v] |= std::uint64_t{1} << u;
            ++bit;
        }
    }
    return Digraph::from_out_rows(n, std::span(rows).first(n));
}

inline int tournament_bits(int n) { return n * (n - 1) / 2; }

/// Streams (index, tournament) for every index = shard (mod shards),
/// ascending, over all 2^(n(n-1)/2) labeled tournaments of order n <= 8.
class TournamentEnumerator {
   public:
    explicit TournamentEnumerator(int n, std::uint64_t shard = 0, std::uint64_t shards = 1)
        : TournamentEnumerator(EnumerationCursor{n, shard, shard, shards}) {}

    explicit TournamentEnumerator(EnumerationCursor cursor) : cursor_(cursor) {
        detail::require_order(cursor.n, 1, "tournaments");
        if (cursor.n > max_tournament_order) throw CapExceeded("tournament enumeration supports orders up to 8");
        if (cursor.shards == 0 || cursor.shard >= cursor.shards) throw InvalidArgument("shard must lie in [0, shards)");
        if (cursor.index % cursor.shards != cursor.shard) throw InvalidArgument("cursor index outside its shard");
        total_ = std::uint64_t{1} << tournament_bits(cursor.n);
    }

    std::optional<std::pair<std::uint64_t, Digraph>> next() {
        if (cursor_.index >= total_) return std::nullopt;
        std::uint64_t index = cursor_.index;
        cursor_.index += cursor_.shards;
        return std::pair{index, tournament_from_index(cursor_.n, index)};
    }

    const EnumerationCursor& cursor() const { return cursor_; }
    std::uint64_t total() const { return total_; }
    bool done() const { return cursor_.index >= total_; }

   private:
    EnumerationCursor cursor_;
    std::uint64_t total_ = 0;
};

inline bool is_tournament(const Digraph& d) {
    for (Vertex u = 0; u < d.order(); ++u) {
        for (Vertex v = u + 1; v < d.order(); ++v) {
            if (d.has_arc(u, v) == d.has_arc(v, u)) return false;
        }
    }
    return true;
}

}  // namespace hamlab

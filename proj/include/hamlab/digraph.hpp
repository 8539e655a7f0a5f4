#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamlab/error.hpp"
#include "hamlab/vertex_set.hpp"

namespace hamlab {

struct Arc {
    Vertex from = 0;
    Vertex to = 0;

    auto operator<=>(const Arc&) const = default;
};

inline std::string to_string(Arc a) {
    return "(" + std::to_string(a.from) + "," + std::to_string(a.to) + ")";
}

/// Simple loop-free digraph on 1..64 vertices with mirrored out/in bit rows.
///
/// Values are immutable once built; the `with_arc` / `without_arc` helpers
/// return modified copies.
class Digraph {
   public:
    /// Edgeless digraph of order n.
    explicit Digraph(int n) : n_(n) {
        if (n < 1 || n > max_order) {
            throw InvalidArgument("order " + std::to_string(n) + " outside [1, 64]");
        }
    }

    /// Builds from an arc list, rejecting loops, out-of-range ids and repeats.
    static Digraph build(int n, std::span<const Arc> arcs) {
        Digraph d(n);
        for (const Arc& a : arcs) {
            d.check_arc(a);
            if (d.has_arc(a.from, a.to)) throw InvalidArgument("duplicate arc " + to_string(a));
            d.set_arc(a.from, a.to);
        }
        return d;
    }
    static Digraph build(int n, std::initializer_list<Arc> arcs) {
        return build(n, std::span<const Arc>(arcs.begin(), arcs.size()));
    }

    /// Builds from out-neighbour rows (row v = bit mask of N+(v)).
    static Digraph from_out_rows(int n, std::span<const std::uint64_t> rows) {
        Digraph d(n);
        if (rows.size() != static_cast<std::size_t>(n)) {
            throw InvalidArgument("expected " + std::to_string(n) + " adjacency rows");
        }
        const VertexSet all = VertexSet::first(n);
        for (Vertex u = 0; u < n; ++u) {
            VertexSet row(rows[u]);
            if (!row.subset_of(all)) throw InvalidArgument("row " + std::to_string(u) + " names a vertex >= n");
            if (row.contains(u)) throw InvalidArgument("loop arc " + to_string({u, u}));
            d.out_[u] = rows[u];
            for (Vertex v : row) d.in_[v] |= std::uint64_t{1} << u;
        }
        return d;
    }

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::first(n_); }

    bool has_arc(Vertex u, Vertex v) const { return (out_[u] >> v) & 1U; }
    VertexSet out_neighbours(Vertex v) const { return VertexSet(out_[v]); }
    VertexSet in_neighbours(Vertex v) const { return VertexSet(in_[v]); }
    /// Vertices joined to v by an arc in either direction.
    VertexSet neighbours(Vertex v) const { return VertexSet(out_[v] | in_[v]); }

    int out_degree(Vertex v) const { return std::popcount(out_[v]); }
    int in_degree(Vertex v) const { return std::popcount(in_[v]); }
    int degree(Vertex v) const { return out_degree(v) + in_degree(v); }

    std::size_t arc_count() const {
        std::size_t m = 0;
        for (int v = 0; v < n_; ++v) m += std::popcount(out_[v]);
        return m;
    }

    /// Arcs sorted by (from, to).
    std::vector<Arc> arcs() const {
        std::vector<Arc> result;
        result.reserve(arc_count());
        for (Vertex u = 0; u < n_; ++u) {
            for (Vertex v : out_neighbours(u)) result.push_back({u, v});
        }
        return result;
    }

    Digraph with_arc(Vertex u, Vertex v) const {
        check_arc({u, v});
        Digraph d = *this;
        d.set_arc(u, v);
        return d;
    }
    Digraph without_arc(Vertex u, Vertex v) const {
        check_arc({u, v});
        Digraph d = *this;
        d.out_[u] &= ~(std::uint64_t{1} << v);
        d.in_[v] &= ~(std::uint64_t{1} << u);
        return d;
    }

    void require_vertex(Vertex v) const {
        if (v < 0 || v >= n_) {
            throw InvalidArgument("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
        }
    }
    void require_subset(VertexSet s) const {
        if (!s.within(n_)) throw InvalidArgument("vertex set names a vertex >= " + std::to_string(n_));
    }

    bool operator==(const Digraph& o) const {
        return n_ == o.n_ && std::equal(out_.begin(), out_.begin() + n_, o.out_.begin());
    }

   private:
    void check_arc(Arc a) const {
        require_vertex(a.from);
        require_vertex(a.to);
        if (a.from == a.to) throw InvalidArgument("loop arc " + to_string(a));
    }
    void set_arc(Vertex u, Vertex v) {
        out_[u] |= std::uint64_t{1} << v;
        in_[v] |= std::uint64_t{1} << u;
    }

    int n_;
    std::array<std::uint64_t, max_order> out_{};
    std::array<std::uint64_t, max_order> in_{};
};

// ---------------------------------------------------------------------------
// Witnesses

/// Sequence of distinct vertices; validated against a digraph on demand.
class PathWitness {
   public:
    PathWitness() = default;
    explicit PathWitness(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}
    PathWitness(std::initializer_list<Vertex> vertices) : vertices_(vertices) {}

    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    Vertex front() const { return vertices_.front(); }
    Vertex back() const { return vertices_.back(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }
    VertexSet vertex_set() const { return VertexSet::of(vertices_); }

    /// Nonempty, distinct in-range ids, every consecutive pair an arc of d.
    bool valid_in(const Digraph& d) const {
        if (vertices_.empty()) return false;
        VertexSet seen;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            Vertex v = vertices_[i];
            if (v < 0 || v >= d.order() || seen.contains(v)) return false;
            seen.insert(v);
            if (i > 0 && !d.has_arc(vertices_[i - 1], v)) return false;
        }
        return true;
    }

    bool operator==(const PathWitness&) const = default;

   private:
    std::vector<Vertex> vertices_;
};

/// Cycle stored in canonical rotation (minimum id first).
class CycleWitness {
   public:
    CycleWitness() = default;
    explicit CycleWitness(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
        if (!vertices_.empty()) {
            auto smallest = std::min_element(vertices_.begin(), vertices_.end());
            std::rotate(vertices_.begin(), smallest, vertices_.end());
        }
    }
    CycleWitness(std::initializer_list<Vertex> vertices) : CycleWitness(std::vector<Vertex>(vertices)) {}

    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t length() const { return vertices_.size(); }
    Vertex operator[](std::size_t i) const { return vertices_[i % vertices_.size()]; }
    VertexSet vertex_set() const { return VertexSet::of(vertices_); }
    /// Position of v on the cycle, or nullopt.
    std::optional<std::size_t> position(Vertex v) const {
        auto it = std::find(vertices_.begin(), vertices_.end(), v);
        if (it == vertices_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - vertices_.begin());
    }

    /// Length >= 2, distinct ids, consecutive arcs and the closing arc present.
    bool valid_in(const Digraph& d) const {
        if (vertices_.size() < 2) return false;
        VertexSet seen;
        for (std::size_t i = 0; i < vertices_.size(); ++i) {
            Vertex v = vertices_[i];
            if (v < 0 || v >= d.order() || seen.contains(v)) return false;
            seen.insert(v);
            if (!d.has_arc(v, vertices_[(i + 1) % vertices_.size()])) return false;
        }
        return true;
    }

    bool operator==(const CycleWitness&) const = default;

   private:
    std::vector<Vertex> vertices_;
};

// ---------------------------------------------------------------------------
// Terminology operations

struct Degrees {
    int out = 0;
    int in = 0;
    int total = 0;

    bool operator==(const Degrees&) const = default;
};

inline Degrees degrees(const Digraph& d, Vertex x) {
    d.require_vertex(x);
    return {d.out_degree(x), d.in_degree(x), d.degree(x)};
}

/// d+(x,A), d-(x,A) and their sum; x must lie outside A.
inline Degrees degree_toward(const Digraph& d, Vertex x, VertexSet a) {
    d.require_vertex(x);
    d.require_subset(a);
    if (a.contains(x)) throw InvalidArgument("vertex " + std::to_string(x) + " belongs to the target set");
    int out = (d.out_neighbours(x) & a).size();
    int in = (d.in_neighbours(x) & a).size();
    return {out, in, out + in};
}

inline bool adjacent(const Digraph& d, Vertex x, Vertex y) {
    d.require_vertex(x);
    d.require_vertex(y);
    if (x == y) throw InvalidArgument("adjacency of a vertex with itself is undefined");
    return d.has_arc(x, y) || d.has_arc(y, x);
}

inline Digraph converse(const Digraph& d) {
    std::vector<std::uint64_t> rows(d.order());
    for (Vertex v = 0; v < d.order(); ++v) rows[v] = d.in_neighbours(v).bits();
    return Digraph::from_out_rows(d.order(), rows);
}

struct InducedSubdigraph {
    Digraph graph;
    /// original[i] is the id in the parent digraph of vertex i of `graph`.
    std::vector<Vertex> original;
};

/// <A>, relabelled to 0..|A|-1 in increasing id order.
inline InducedSubdigraph induced(const Digraph& d, VertexSet a) {
    d.require_subset(a);
    if (a.empty()) throw InvalidArgument("induced subdigraph of the empty set");
    std::vector<Vertex> original = a.to_vector();
    std::array<int, max_order> local{};
    for (std::size_t i = 0; i < original.size(); ++i) local[original[i]] = static_cast<int>(i);
    std::vector<std::uint64_t> rows(original.size());
    for (std::size_t i = 0; i < original.size(); ++i) {
        for (Vertex w : d.out_neighbours(original[i]) & a) rows[i] |= std::uint64_t{1} << local[w];
    }
    return {Digraph::from_out_rows(static_cast<int>(original.size()), rows), std::move(original)};
}

/// Vertices reachable from `start` inside `allowed` (start included).
inline VertexSet reachable_within(const Digraph& d, Vertex start, VertexSet allowed, bool forward = true) {
    VertexSet seen(std::uint64_t{1} << start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex v : frontier) next |= forward ? d.out_neighbours(v) : d.in_neighbours(v);
        next &= allowed;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// Forward and backward sweeps from vertex 0 both cover V(D).
inline bool is_strong(const Digraph& d) {
    const VertexSet all = d.vertices();
    return reachable_within(d, 0, all, true) == all && reachable_within(d, 0, all, false) == all;
}

struct KStarPartition {
    int p = 0;
    int q = 0;
    VertexSet first;   ///< part of size p
    VertexSet second;  ///< part of size q

    bool operator==(const KStarPartition&) const = default;
};

/// Returns the bipartition iff d is exactly K*_{p,q} (p <= q; on p == q the
/// part containing vertex 0 comes first).
inline std::optional<KStarPartition> recognize_kstar(const Digraph& d) {
    const VertexSet all = d.vertices();
    VertexSet x = all - d.neighbours(0);
    VertexSet y = all - x;
    if (y.empty()) return std::nullopt;
    for (Vertex v : x) {
        if (d.out_neighbours(v) != y || d.in_neighbours(v) != y) return std::nullopt;
    }
    for (Vertex v : y) {
        if (d.out_neighbours(v) != x || d.in_neighbours(v) != x) return std::nullopt;
    }
    if (x.size() <= y.size()) return KStarPartition{x.size(), y.size(), x, y};
    return KStarPartition{y.size(), x.size(), y, x};
}

namespace detail {

inline bool extend_isomorphism(const Digraph& a, const Digraph& b, std::vector<Vertex>& map, VertexSet used,
                               int next) {
    const int n = a.order();
    if (next == n) return true;
    for (Vertex cand = 0; cand < n; ++cand) {
        if (used.contains(cand)) continue;
        if (a.out_degree(next) != b.out_degree(cand) || a.in_degree(next) != b.in_degree(cand)) continue;
        bool ok = true;
        for (Vertex prev = 0; prev < next && ok; ++prev) {
            ok = a.has_arc(prev, next) == b.has_arc(map[prev], cand) &&
                 a.has_arc(next, prev) == b.has_arc(cand, map[prev]);
        }
        if (!ok) continue;
        map[next] = cand;
        VertexSet used_next = used;
        used_next.insert(cand);
        if (extend_isomorphism(a, b, map, used_next, next + 1)) return true;
    }
    return false;
}

}  // namespace detail

/// Brute-force isomorphism test for orders up to 8.
inline bool isomorphic_small(const Digraph& a, const Digraph& b) {
    if (a.order() > 8 || b.order() > 8) throw InvalidArgument("isomorphic_small supports orders up to 8");
    if (a.order() != b.order() || a.arc_count() != b.arc_count()) return false;
    auto degree_sequence = [](const Digraph& d) {
        std::vector<std::pair<int, int>> seq;
        for (Vertex v = 0; v < d.order(); ++v) seq.emplace_back(d.out_degree(v), d.in_degree(v));
        std::sort(seq.begin(), seq.end());
        return seq;
    };
    if (degree_sequence(a) != degree_sequence(b)) return false;
    std::vector<Vertex> map(a.order(), -1);
    return detail::extend_isomorphism(a, b, map, VertexSet{}, 0);
}

}  // namespace hamlab

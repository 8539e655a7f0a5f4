#pragma once

// Exact cycle and path search over bitset neighbourhoods.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/digraph.hpp"

namespace hamlab {

namespace detail {

/// Depth-first search for a cycle of exactly `length` vertices inside
/// `allowed`, rooted at its minimum vertex so each cycle is met in canonical
/// rotation only. Neighbours are tried in increasing id order.
class CycleSearch {
   public:
    CycleSearch(const Digraph& d, VertexSet allowed, int length) : d_(d), allowed_(allowed), length_(length) {
        path_.resize(length);
    }

    std::optional<CycleWitness> run() {
        if (length_ < 2 || allowed_.size() < length_) return std::nullopt;
        for (Vertex root : allowed_) {
            VertexSet above = allowed_ - VertexSet::first(root + 1);
            if (above.size() + 1 < length_) break;
            closers_ = d_.in_neighbours(root) & above;
            if (closers_.empty()) continue;
            path_[0] = root;
            if (extend(1, root, above)) return CycleWitness(path_);
        }
        return std::nullopt;
    }

   private:
    bool extend(int depth, Vertex last, VertexSet free) {
        VertexSet next = d_.out_neighbours(last) & free;
        if (depth == length_ - 1) next &= closers_;
        // The remaining vertices must still contain a closer.
        else if (!free.intersects(closers_)) return false;
        for (Vertex v : next) {
            path_[depth] = v;
            if (depth == length_ - 1) return true;
            VertexSet rest = free;
            rest.erase(v);
            if (rest.empty() && depth + 1 < length_) continue;
            if (extend(depth + 1, v, rest)) return true;
        }
        return false;
    }

    const Digraph& d_;
    VertexSet allowed_;
    int length_;
    VertexSet closers_;
    std::vector<Vertex> path_;
};

inline void require_length(const Digraph& d, int length) {
    if (length < 2 || length > d.order()) {
        throw InvalidArgument("cycle length " + std::to_string(length) + " outside [2, " + std::to_string(d.order()) +
                              "]");
    }
}

}  // namespace detail

/// A cycle of exactly `length` vertices using only vertices in `allowed`.
inline std::optional<CycleWitness> find_cycle_within(const Digraph& d, VertexSet allowed, int length) {
    d.require_subset(allowed);
    return detail::CycleSearch(d, allowed, length).run();
}

inline std::optional<CycleWitness> find_cycle_of_length(const Digraph& d, int length) {
    detail::require_length(d, length);
    return detail::CycleSearch(d, d.vertices(), length).run();
}

struct CycleSpectrum {
    int n = 0;
    std::map<int, CycleWitness> witnesses;  ///< one witness per realizable length

    bool has(int length) const { return witnesses.contains(length); }
    std::vector<int> present() const {
        std::vector<int> lengths;
        for (const auto& [length, w] : witnesses) lengths.push_back(length);
        return lengths;
    }
    /// Cycles of every length 3..n (requires n >= 3).
    bool pancyclic() const {
        if (n < 3) return false;
        for (int m = 3; m <= n; ++m) {
            if (!has(m)) return false;
        }
        return true;
    }
};

inline CycleSpectrum cycle_spectrum(const Digraph& d) {
    CycleSpectrum s{d.order(), {}};
    for (int length = 2; length <= d.order(); ++length) {
        if (auto w = find_cycle_of_length(d, length)) s.witnesses.emplace(length, std::move(*w));
    }
    return s;
}

/// Cycles of every length 3..n, short-circuiting on the first missing length.
inline bool is_pancyclic(const Digraph& d) {
    if (d.order() < 3) return false;
    for (int m = d.order(); m >= 3; --m) {
        if (!find_cycle_of_length(d, m)) return false;
    }
    return true;
}

inline std::optional<CycleWitness> hamiltonian_cycle(const Digraph& d) {
    if (d.order() < 2) throw InvalidArgument("Hamiltonian cycle needs order >= 2");
    return find_cycle_of_length(d, d.order());
}

/// A cycle of length n-1.
inline std::optional<CycleWitness> pre_hamiltonian_cycle(const Digraph& d) {
    if (d.order() < 3) throw InvalidArgument("pre-Hamiltonian cycle needs order >= 3");
    return find_cycle_of_length(d, d.order() - 1);
}

/// A cycle of maximum length among those of length <= n-1.
inline std::optional<CycleWitness> longest_non_hamiltonian_cycle(const Digraph& d) {
    for (int length = d.order() - 1; length >= 2; --length) {
        if (auto w = find_cycle_of_length(d, length)) return w;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Hamiltonian bypass: a Hamiltonian path v1..vn plus the arc v1->vn, i.e. a
// Hamiltonian cycle with its closing arc reversed.

struct HamiltonianBypass {
    PathWitness path;
    Arc chord;
};

namespace detail {

inline bool extend_bypass_path(const Digraph& d, std::vector<Vertex>& path, VertexSet free, VertexSet enders) {
    if (free.empty()) return enders.contains(path.back());
    // The last free vertex must be an out-neighbour of the start.
    if (!free.intersects(enders)) return false;
    VertexSet next = d.out_neighbours(path.back()) & free;
    if (free.size() == 1) next &= enders;
    for (Vertex v : next) {
        path.push_back(v);
        VertexSet rest = free;
        rest.erase(v);
        if (extend_bypass_path(d, path, rest, enders)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace detail

inline std::optional<HamiltonianBypass> hamiltonian_bypass(const Digraph& d) {
    if (d.order() < 3) throw InvalidArgument("Hamiltonian bypass needs order >= 3");
    for (Vertex start = 0; start < d.order(); ++start) {
        std::vector<Vertex> path{start};
        VertexSet free = d.vertices();
        free.erase(start);
        if (detail::extend_bypass_path(d, path, free, d.out_neighbours(start))) {
            Vertex end = path.back();
            return HamiltonianBypass{PathWitness(std::move(path)), Arc{start, end}};
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// C-bypasses

/// Path entry -> interior... -> exit meeting C exactly at entry and exit.
struct Bypass {
    Vertex entry = 0;
    PathWitness interior;
    Vertex exit = 0;
    int gap = 0;  ///< cyclic distance from entry to exit along C

    bool operator==(const Bypass&) const = default;
};

inline bool bypass_valid_in(const Digraph& d, const CycleWitness& c, const Bypass& b) {
    if (b.interior.size() == 0 || b.entry == b.exit || !b.interior.valid_in(d)) return false;
    if (b.interior.vertex_set().intersects(c.vertex_set())) return false;
    auto pe = c.position(b.entry);
    auto px = c.position(b.exit);
    if (!pe || !px) return false;
    const int k = static_cast<int>(c.length());
    int gap = ((static_cast<int>(*px) - static_cast<int>(*pe)) % k + k) % k;
    return gap == b.gap && d.has_arc(b.entry, b.interior.front()) && d.has_arc(b.interior.back(), b.exit);
}

/// A C-bypass of minimum gap; ties go to the lowest entry id, then the
/// shortest interior (breadth-first, lowest ids first).
inline std::optional<Bypass> find_c_bypass(const Digraph& d, const CycleWitness& c) {
    if (!c.valid_in(d)) throw InvalidArgument("cycle is not valid in the digraph");
    if (static_cast<int>(c.length()) == d.order()) throw InvalidArgument("cycle is Hamiltonian");
    const VertexSet outside = d.vertices() - c.vertex_set();
    const int k = static_cast<int>(c.length());

    // Breadth-first layers inside <outside> starting from N+(entry).
    auto shortest_interior = [&](Vertex entry, Vertex exit) -> std::optional<std::vector<Vertex>> {
        std::array<Vertex, max_order> parent{};
        VertexSet frontier = d.out_neighbours(entry) & outside;
        VertexSet seen = frontier;
        for (Vertex v : frontier) parent[v] = -1;
        while (!frontier.empty()) {
            VertexSet hits = frontier & d.in_neighbours(exit);
            if (!hits.empty()) {
                std::vector<Vertex> interior;
                for (Vertex v = hits.min(); v != -1; v = parent[v]) interior.push_back(v);
                std::reverse(interior.begin(), interior.end());
                return interior;
            }
            VertexSet next;
            for (Vertex v : frontier) {
                for (Vertex w : d.out_neighbours(v) & outside) {
                    if (seen.contains(w) || next.contains(w)) continue;
                    parent[w] = v;
                    next.insert(w);
                }
            }
            seen |= next;
            frontier = next;
        }
        return std::nullopt;
    };

    for (int gap = 1; gap < k; ++gap) {
        std::optional<Bypass> best;
        for (std::size_t i = 0; i < c.length(); ++i) {
            Vertex entry = c[i];
            Vertex exit = c[i + gap];
            auto interior = shortest_interior(entry, exit);
            if (!interior) continue;
            Bypass b{entry, PathWitness(std::move(*interior)), exit, gap};
            if (!best || b.entry < best->entry) best = std::move(b);
        }
        if (best) return best;
    }
    return std::nullopt;
}

}  // namespace hamlab

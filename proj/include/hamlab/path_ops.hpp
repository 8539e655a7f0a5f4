#pragma once

// Constructive path/cycle operations: vertex insertion, block insertion,
// cycles through an external vertex or path, and maximal path extension.
//
// Operations whose correctness rests on a degree hypothesis check it first
// and throw HypothesisUnmet when it fails; when the hypothesis holds but the
// promised object is missing they throw LemmaViolation (or return nullopt
// where the signature is optional). They never fall back to general search.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/cycles.hpp"
#include "hamlab/digraph.hpp"

namespace hamlab {

namespace detail {

inline void require_valid_path(const Digraph& d, const PathWitness& p) {
    if (!p.valid_in(d)) throw InvalidArgument("not a path of the digraph");
}
inline void require_valid_cycle(const Digraph& d, const CycleWitness& c) {
    if (!c.valid_in(d)) throw InvalidArgument("not a cycle of the digraph");
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Single-vertex insertion

struct Insertion {
    std::size_t index = 0;  ///< x goes between path[index] and path[index+1]
    PathWitness path;
};

/// Smallest i with path[i]->x and x->path[i+1], and the extended path.
inline std::optional<Insertion> insert_vertex(const Digraph& d, const PathWitness& p, Vertex x) {
    detail::require_valid_path(d, p);
    d.require_vertex(x);
    if (p.vertex_set().contains(x)) throw InvalidArgument("vertex " + std::to_string(x) + " already on the path");
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (d.has_arc(p[i], x) && d.has_arc(x, p[i + 1])) {
            std::vector<Vertex> extended = p.vertices();
            extended.insert(extended.begin() + static_cast<std::ptrdiff_t>(i) + 1, x);
            return Insertion{i, PathWitness(std::move(extended))};
        }
    }
    return std::nullopt;
}

/// Which degree case guarantees that x can be inserted into P = x1..xm:
///   (i)   d(x,P) >= m+2
///   (ii)  d(x,P) >= m+1 and (x->x1 absent or xm->x absent)
///   (iii) d(x,P) >= m, x->x1 absent and xm->x absent
/// Returns 0 when no case applies.
inline int insertion_guarantee(const Digraph& d, const PathWitness& p, Vertex x) {
    const int m = static_cast<int>(p.size());
    const int deg = degree_toward(d, x, p.vertex_set()).total;
    const bool to_first = d.has_arc(x, p.front());
    const bool from_last = d.has_arc(p.back(), x);
    if (deg >= m + 2) return 1;
    if (deg >= m + 1 && (!to_first || !from_last)) return 2;
    if (deg >= m && !to_first && !from_last) return 3;
    return 0;
}

// ---------------------------------------------------------------------------
// Block insertion of a path Q between consecutive vertices of a path P

/// A path from first(P) to last(P) through exactly V(P) u V(Q), obtained by
/// splicing Q between the first pair x_i, x_{i+1} with x_i->y_1 and
/// y_r->x_{i+1}. Requires
///   d-(y1,P) + d+(yr,P) >= |P| + d-(y1,{last(P)}) + d+(yr,{first(P)}).
inline std::optional<PathWitness> merge_path(const Digraph& d, const PathWitness& p, const PathWitness& q) {
    detail::require_valid_path(d, p);
    detail::require_valid_path(d, q);
    if (p.size() < 2) throw InvalidArgument("host path needs at least two vertices");
    if (p.vertex_set().intersects(q.vertex_set())) throw InvalidArgument("paths share a vertex");
    const VertexSet on_p = p.vertex_set();
    const int k = static_cast<int>(p.size());
    const Vertex y1 = q.front();
    const Vertex yr = q.back();
    const int lhs = (d.in_neighbours(y1) & on_p).size() + (d.out_neighbours(yr) & on_p).size();
    const int rhs = k + (d.has_arc(p.back(), y1) ? 1 : 0) + (d.has_arc(yr, p.front()) ? 1 : 0);
    if (lhs < rhs) {
        throw HypothesisUnmet("d-(y1,P) + d+(yr,P) = " + std::to_string(lhs) + " < " + std::to_string(rhs));
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        if (d.has_arc(p[i], y1) && d.has_arc(yr, p[i + 1])) {
            std::vector<Vertex> merged(p.vertices().begin(), p.vertices().begin() + static_cast<std::ptrdiff_t>(i) + 1);
            merged.insert(merged.end(), q.vertices().begin(), q.vertices().end());
            merged.insert(merged.end(), p.vertices().begin() + static_cast<std::ptrdiff_t>(i) + 1, p.vertices().end());
            return PathWitness(std::move(merged));
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cycles through an external vertex / an external path

/// Witnesses for every length in [2, |C|+1] inside V(C) u {x}.
/// Requires d(x, V(C)) >= |C| + 1.
inline std::map<int, CycleWitness> cycles_from_external_vertex(const Digraph& d, const CycleWitness& c, Vertex x) {
    detail::require_valid_cycle(d, c);
    d.require_vertex(x);
    const VertexSet on_c = c.vertex_set();
    if (on_c.contains(x)) throw InvalidArgument("vertex " + std::to_string(x) + " lies on the cycle");
    const int m = static_cast<int>(c.length());
    const int deg = degree_toward(d, x, on_c).total;
    if (deg < m + 1) {
        throw HypothesisUnmet("d(x,C) = " + std::to_string(deg) + " < |C|+1 = " + std::to_string(m + 1));
    }
    VertexSet scope = on_c;
    scope.insert(x);
    std::map<int, CycleWitness> result;
    for (int length = 2; length <= m + 1; ++length) {
        auto w = find_cycle_within(d, scope, length);
        if (!w) throw LemmaViolation("no cycle of length " + std::to_string(length) + " through C and x");
        result.emplace(length, std::move(*w));
    }
    return result;
}

/// Witnesses for every length in [|Q|+1, |C|+|Q|] inside V(C) u V(Q).
/// Requires C non-Hamiltonian, Q disjoint from C and
/// d-(y1,C) + d+(yr,C) >= |C| + 1.
inline std::map<int, CycleWitness> absorb_path_into_cycle(const Digraph& d, const CycleWitness& c,
                                                          const PathWitness& q) {
    detail::require_valid_cycle(d, c);
    detail::require_valid_path(d, q);
    const VertexSet on_c = c.vertex_set();
    if (on_c.intersects(q.vertex_set())) throw InvalidArgument("path meets the cycle");
    const int k = static_cast<int>(c.length());
    const int r = static_cast<int>(q.size());
    const int sum = (d.in_neighbours(q.front()) & on_c).size() + (d.out_neighbours(q.back()) & on_c).size();
    if (sum < k + 1) {
        throw HypothesisUnmet("d-(y1,C) + d+(yr,C) = " + std::to_string(sum) + " < |C|+1 = " + std::to_string(k + 1));
    }
    const VertexSet scope = on_c | q.vertex_set();
    std::map<int, CycleWitness> result;
    for (int length = r + 1; length <= k + r; ++length) {
        auto w = find_cycle_within(d, scope, length);
        if (!w) throw LemmaViolation("no cycle of length " + std::to_string(length) + " through C and Q");
        result.emplace(length, std::move(*w));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Maximal extension of a path by single-vertex insertions

struct ExtensionResult {
    PathWitness path;
    VertexSet absorbed;
    VertexSet leftover;

    bool operator==(const ExtensionResult&) const = default;
};

/// Repeatedly inserts the lowest-id insertable vertex of `candidates` at its
/// leftmost slot until none can be inserted. Endpoints never change.
inline ExtensionResult extend_maximally(const Digraph& d, const PathWitness& p, VertexSet candidates) {
    detail::require_valid_path(d, p);
    d.require_subset(candidates);
    if (candidates.intersects(p.vertex_set())) throw InvalidArgument("candidate vertex already on the path");
    ExtensionResult result{p, {}, candidates};
    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (Vertex v : result.leftover) {
            if (auto ins = insert_vertex(d, result.path, v)) {
                result.path = std::move(ins->path);
                result.absorbed.insert(v);
                result.leftover.erase(v);
                progressed = true;
                break;
            }
        }
    }
    return result;
}

}  // namespace hamlab

#pragma once

// Degree-condition predicates for Hamiltonicity of digraphs.
//
// Every predicate returns a Verdict: whether the condition holds, the
// "worst" witness (the one with least slack, ties broken by lowest
// lexicographic ids), and up to `max_witnesses` violating witnesses together
// with the total number of violations.

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hamlab/digraph.hpp"

namespace hamlab {

inline constexpr std::size_t max_witnesses = 100;

struct VertexWitness {
    Vertex x = 0;
    int value = 0;
    int required = 0;

    bool operator==(const VertexWitness&) const = default;
};

/// A pair and the value/bound of its binding (least slack) clause.
struct PairWitness {
    Vertex x = 0;
    Vertex y = 0;
    int value = 0;
    int required = 0;

    bool operator==(const PairWitness&) const = default;
};

/// Which of the two triple clauses fired: arc x->z absent, or arc z->x absent.
enum class TripleClause { missing_xz, missing_zx };

inline const char* to_string(TripleClause c) { return c == TripleClause::missing_xz ? "missing_xz" : "missing_zx"; }

struct TripleViolation {
    Vertex x = 0;
    Vertex y = 0;
    Vertex z = 0;
    TripleClause clause = TripleClause::missing_xz;
    int sum = 0;
    int required = 0;

    bool operator==(const TripleViolation&) const = default;
};

template <typename W>
struct Verdict {
    bool holds = true;
    std::optional<W> worst;
    std::vector<W> witnesses;
    std::size_t total_violations = 0;

    void record(const W& w, int slack) {
        if (!worst || slack < worst_slack) {
            worst = w;
            worst_slack = slack;
        }
        if (slack < 0) {
            holds = false;
            ++total_violations;
            if (witnesses.size() < max_witnesses) witnesses.push_back(w);
        }
    }

   private:
    int worst_slack = std::numeric_limits<int>::max();
};

namespace detail {

struct DegreeTable {
    explicit DegreeTable(const Digraph& d) : n(d.order()) {
        for (Vertex v = 0; v < n; ++v) {
            out[v] = d.out_degree(v);
            in[v] = d.in_degree(v);
        }
    }
    int total(Vertex v) const { return out[v] + in[v]; }

    int n;
    std::array<int, max_order> out{};
    std::array<int, max_order> in{};
};

/// Least slack over a set of (value, required) clauses; first clause wins ties.
inline PairWitness binding_clause(Vertex x, Vertex y, std::initializer_list<std::pair<int, int>> clauses) {
    PairWitness best{x, y, 0, 0};
    bool first = true;
    for (auto [value, required] : clauses) {
        if (first || value - required < best.value - best.required) {
            best.value = value;
            best.required = required;
            first = false;
        }
    }
    return best;
}

inline bool share_in_neighbour(const Digraph& d, Vertex x, Vertex y) {
    return d.in_neighbours(x).intersects(d.in_neighbours(y));
}
inline bool share_any_neighbour(const Digraph& d, Vertex x, Vertex y) {
    return share_in_neighbour(d, x, y) || d.out_neighbours(x).intersects(d.out_neighbours(y));
}

}  // namespace detail

/// d(x) >= n for every vertex.
inline Verdict<VertexWitness> ghouila_houri(const Digraph& d) {
    Verdict<VertexWitness> v;
    const int n = d.order();
    for (Vertex x = 0; x < n; ++x) v.record({x, d.degree(x), n}, d.degree(x) - n);
    return v;
}

/// d+(x) + d-(y) >= n whenever the arc x->y is absent.
inline Verdict<PairWitness> woodall(const Digraph& d) {
    Verdict<PairWitness> v;
    const int n = d.order();
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y = 0; y < n; ++y) {
            if (x == y || d.has_arc(x, y)) continue;
            int value = d.out_degree(x) + d.in_degree(y);
            v.record({x, y, value, n}, value - n);
        }
    }
    return v;
}

/// d(x) + d(y) >= 2n-1 for every non-adjacent pair.
inline Verdict<PairWitness> meyniel(const Digraph& d) {
    Verdict<PairWitness> v;
    const int n = d.order();
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y : d.vertices() - d.neighbours(x) - VertexSet::first(x + 1)) {
            int value = d.degree(x) + d.degree(y);
            v.record({x, y, value, 2 * n - 1}, value - (2 * n - 1));
        }
    }
    return v;
}

/// min degree >= n-1 and min semi-degree >= n/2 - 1 (compared as 2*semi >= n-2).
/// The witness is the vertex with least slack; `value`/`required` refer to
/// the binding clause (semi-degree clause compared in doubled units).
inline Verdict<VertexWitness> min_degree_semidegree(const Digraph& d) {
    Verdict<VertexWitness> v;
    const int n = d.order();
    for (Vertex x = 0; x < n; ++x) {
        PairWitness c = detail::binding_clause(
            x, x, {{d.degree(x), n - 1}, {2 * std::min(d.out_degree(x), d.in_degree(x)), n - 2}});
        v.record({x, c.value, c.required}, c.value - c.required);
    }
    return v;
}

/// Whether z may coincide with y in the triple quantifier (z != x always).
/// The default lets z = y: with distinct triples every digraph on two
/// vertices and the strong path 1 <-> 0 <-> 2 would satisfy A_0 vacuously.
enum class TripleReading { pairwise_distinct, z_may_equal_y };

inline constexpr TripleReading default_triple_reading = TripleReading::z_may_equal_y;

namespace detail {

/// Visits every qualifying (x, y, z, clause) in order x, y, clause, z.
template <typename Visit>
void for_each_qualifying_triple(const Digraph& d, TripleReading reading, Visit&& visit) {
    const int n = d.order();
    const DegreeTable deg(d);
    const VertexSet all = d.vertices();
    for (Vertex x = 0; x < n; ++x) {
        const VertexSet non_adjacent = all - d.neighbours(x) - VertexSet(std::uint64_t{1} << x);
        for (Vertex y : non_adjacent) {
            VertexSet zs = all;
            zs.erase(x);
            if (reading == TripleReading::pairwise_distinct) zs.erase(y);
            const int base = deg.total(x) + deg.total(y);
            for (Vertex z : zs - d.out_neighbours(x)) {
                visit(x, y, z, TripleClause::missing_xz, base + deg.out[x] + deg.in[z]);
            }
            for (Vertex z : zs - d.in_neighbours(x)) {
                visit(x, y, z, TripleClause::missing_zx, base + deg.in[x] + deg.out[z]);
            }
        }
    }
}

}  // namespace detail

/// Condition A_k: every qualifying triple has degree sum >= 3n-2+k.
inline Verdict<TripleViolation> condition_a_k(const Digraph& d, int k,
                                              TripleReading reading = default_triple_reading) {
    Verdict<TripleViolation> v;
    const int required = 3 * d.order() - 2 + k;
    detail::for_each_qualifying_triple(d, reading, [&](Vertex x, Vertex y, Vertex z, TripleClause c, int sum) {
        v.record({x, y, z, c, sum, required}, sum - required);
    });
    return v;
}

/// Largest k for which A_k holds, or unbounded when no triple qualifies.
struct AkMargin {
    std::optional<int> max_k;

    bool unbounded() const { return !max_k.has_value(); }
    /// Whether A_k holds.
    bool satisfies(int k) const { return unbounded() || *max_k >= k; }
    bool operator==(const AkMargin&) const = default;

    static AkMargin bounded(int k) { return AkMargin{k}; }
    static AkMargin none() { return AkMargin{}; }
};

inline AkMargin ak_margin(const Digraph& d, TripleReading reading = default_triple_reading) {
    int min_sum = std::numeric_limits<int>::max();
    detail::for_each_qualifying_triple(d, reading,
                                       [&](Vertex, Vertex, Vertex, TripleClause, int sum) { min_sum = std::min(min_sum, sum); });
    if (min_sum == std::numeric_limits<int>::max()) return AkMargin::none();
    return AkMargin::bounded(min_sum - (3 * d.order() - 2));
}

/// Non-adjacent pairs with a common in-neighbour: min(d(x),d(y)) >= n-1 and d(x)+d(y) >= 2n-1.
inline Verdict<PairWitness> bjgl_16(const Digraph& d) {
    Verdict<PairWitness> v;
    const int n = d.order();
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y : d.vertices() - d.neighbours(x) - VertexSet::first(x + 1)) {
            if (!detail::share_in_neighbour(d, x, y)) continue;
            PairWitness w = detail::binding_clause(
                x, y, {{std::min(d.degree(x), d.degree(y)), n - 1}, {d.degree(x) + d.degree(y), 2 * n - 1}});
            v.record(w, w.value - w.required);
        }
    }
    return v;
}

/// Non-adjacent pairs with a common out- or in-neighbour:
/// min(d+(x)+d-(y), d-(x)+d+(y)) >= n.
inline Verdict<PairWitness> bjgl_17(const Digraph& d) {
    Verdict<PairWitness> v;
    const int n = d.order();
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y : d.vertices() - d.neighbours(x) - VertexSet::first(x + 1)) {
            if (!detail::share_any_neighbour(d, x, y)) continue;
            int value = std::min(d.out_degree(x) + d.in_degree(y), d.in_degree(x) + d.out_degree(y));
            v.record({x, y, value, n}, value - n);
        }
    }
    return v;
}

/// Non-adjacent pairs with a common out- or in-neighbour: d(x)+d(y) >= 2n-1
/// and min(d+(x)+d-(y), d-(x)+d+(y)) >= n-1.
inline Verdict<PairWitness> bgy_18(const Digraph& d) {
    Verdict<PairWitness> v;
    const int n = d.order();
    for (Vertex x = 0; x < n; ++x) {
        for (Vertex y : d.vertices() - d.neighbours(x) - VertexSet::first(x + 1)) {
            if (!detail::share_any_neighbour(d, x, y)) continue;
            int cross = std::min(d.out_degree(x) + d.in_degree(y), d.in_degree(x) + d.out_degree(y));
            PairWitness w = detail::binding_clause(x, y, {{d.degree(x) + d.degree(y), 2 * n - 1}, {cross, n - 1}});
            v.record(w, w.value - w.required);
        }
    }
    return v;
}

// ---------------------------------------------------------------------------
// Two-partner degree-sum property under A_0

struct Lemma35Result {
    enum class Status { holds, fails, hypothesis_unmet };

    Status status = Status::holds;
    /// On failure: x with two non-adjacent partners y < z, both sums <= 2n-2.
    std::optional<std::array<Vertex, 3>> counterexample;
    /// On hypothesis failure: the first A_0 violation.
    std::optional<TripleViolation> hypothesis_violation;
};

/// For every vertex x with two distinct non-adjacent partners y, z:
/// d(x)+d(y) >= 2n-1 or d(x)+d(z) >= 2n-1. Requires A_0.
inline Lemma35Result lemma35_holds(const Digraph& d, TripleReading reading = default_triple_reading) {
    Lemma35Result result;
    auto a0 = condition_a_k(d, 0, reading);
    if (!a0.holds) {
        result.status = Lemma35Result::Status::hypothesis_unmet;
        result.hypothesis_violation = a0.witnesses.front();
        return result;
    }
    const int n = d.order();
    for (Vertex x = 0; x < n; ++x) {
        std::optional<Vertex> low;
        for (Vertex y : d.vertices() - d.neighbours(x) - VertexSet(std::uint64_t{1} << x)) {
            if (d.degree(x) + d.degree(y) >= 2 * n - 1) continue;
            if (low) {
                result.status = Lemma35Result::Status::fails;
                result.counterexample = std::array<Vertex, 3>{x, *low, y};
                return result;
            }
            low = y;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------

struct ConditionReport {
    Verdict<VertexWitness> ghouila_houri;
    Verdict<PairWitness> woodall;
    Verdict<PairWitness> meyniel;
    Verdict<VertexWitness> min_degree_semidegree;
    Verdict<TripleViolation> a0;
    Verdict<PairWitness> bjgl_16;
    Verdict<PairWitness> bjgl_17;
    Verdict<PairWitness> bgy_18;
    AkMargin ak_margin;
};

inline ConditionReport check_conditions(const Digraph& d, TripleReading reading = default_triple_reading) {
    return {
        hamlab::ghouila_houri(d), hamlab::woodall(d), hamlab::meyniel(d), hamlab::min_degree_semidegree(d),
        hamlab::condition_a_k(d, 0, reading), hamlab::bjgl_16(d), hamlab::bjgl_17(d), hamlab::bgy_18(d),
        hamlab::ak_margin(d, reading),
    };
}

}  // namespace hamlab

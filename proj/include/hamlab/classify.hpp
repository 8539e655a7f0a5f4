#pragma once

#include "hamlab/conditions.hpp"
#include "hamlab/cycles.hpp"
#include "hamlab/digraph.hpp"

namespace hamlab {

/// Hypothesis and conclusion predicates of the verified claims, for one digraph.
struct ClassificationRecord {
    bool strong = false;
    bool a0 = false;
    bool a3 = false;
    bool hamiltonian = false;
    bool pre_hamiltonian = false;
    bool pancyclic = false;
    bool kstar_balanced = false;
    bool ham_bypass = false;
    AkMargin ak_margin;

    bool operator==(const ClassificationRecord&) const = default;
};

/// recognize_kstar with equal part sizes.
inline bool is_balanced_kstar(const Digraph& d) {
    auto k = recognize_kstar(d);
    return k && k->p == k->q;
}

inline ClassificationRecord classify(const Digraph& d, TripleReading reading = default_triple_reading) {
    ClassificationRecord r;
    const int n = d.order();
    r.strong = is_strong(d);
    r.ak_margin = ak_margin(d, reading);
    r.a0 = r.ak_margin.satisfies(0);
    r.a3 = r.ak_margin.satisfies(3);
    CycleSpectrum spectrum = cycle_spectrum(d);
    r.hamiltonian = n >= 2 && spectrum.has(n);
    r.pre_hamiltonian = n >= 3 && spectrum.has(n - 1);
    r.pancyclic = spectrum.pancyclic();
    r.kstar_balanced = is_balanced_kstar(d);
    r.ham_bypass = n >= 3 && hamiltonian_bypass(d).has_value();
    return r;
}

}  // namespace hamlab

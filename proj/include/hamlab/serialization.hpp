#pragma once

// JSON views of witnesses, condition reports, spectra and classifications.

#include <nlohmann/json.hpp>

#include "hamlab/classify.hpp"
#include "hamlab/conditions.hpp"
#include "hamlab/cycles.hpp"
#include "hamlab/digraph.hpp"
#include "hamlab/path_ops.hpp"

namespace hamlab {

using nlohmann::json;

inline void to_json(json& j, const PathWitness& p) { j = p.vertices(); }
inline void to_json(json& j, const CycleWitness& c) { j = c.vertices(); }
inline void to_json(json& j, const Arc& a) { j = json::array({a.from, a.to}); }
inline void to_json(json& j, const VertexSet& s) { j = s.to_vector(); }

inline void to_json(json& j, const VertexWitness& w) {
    j = {{"x", w.x}, {"value", w.value}, {"required", w.required}};
}
inline void to_json(json& j, const PairWitness& w) {
    j = {{"x", w.x}, {"y", w.y}, {"value", w.value}, {"required", w.required}};
}
inline void to_json(json& j, const TripleViolation& w) {
    j = {{"x", w.x}, {"y", w.y}, {"z", w.z}, {"clause", to_string(w.clause)}, {"sum", w.sum}, {"required", w.required}};
}

template <typename W>
void to_json(json& j, const Verdict<W>& v) {
    j = {{"holds", v.holds}, {"witnesses", v.witnesses}, {"total_violations", v.total_violations}};
    if (v.worst) j["worst"] = *v.worst;
}

inline void to_json(json& j, const AkMargin& m) {
    if (m.unbounded()) {
        j = {{"kind", "unbounded"}};
    } else {
        j = {{"kind", "bounded"}, {"max_k", *m.max_k}};
    }
}

inline void from_json(const json& j, AkMargin& m) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "unbounded") {
        m = AkMargin::none();
    } else if (kind == "bounded") {
        m = AkMargin::bounded(j.at("max_k").get<int>());
    } else {
        throw InvalidArgument("unknown ak_margin kind '" + kind + "'");
    }
}

inline void to_json(json& j, const ConditionReport& r) {
    j = {
        {"ghouila_houri", r.ghouila_houri},
        {"woodall", r.woodall},
        {"meyniel", r.meyniel},
        {"min_degree_semidegree", r.min_degree_semidegree},
        {"a0", r.a0},
        {"bjgl_16", r.bjgl_16},
        {"bjgl_17", r.bjgl_17},
        {"bgy_18", r.bgy_18},
        {"ak_margin", r.ak_margin},
    };
}

inline void to_json(json& j, const CycleSpectrum& s) {
    json witnesses = json::object();
    for (const auto& [length, w] : s.witnesses) witnesses[std::to_string(length)] = w;
    j = {{"present", s.present()}, {"witnesses", witnesses}};
}

inline void to_json(json& j, const ClassificationRecord& r) {
    j = {
        {"strong", r.strong},
        {"a0", r.a0},
        {"a3", r.a3},
        {"hamiltonian", r.hamiltonian},
        {"pre_hamiltonian", r.pre_hamiltonian},
        {"pancyclic", r.pancyclic},
        {"kstar_balanced", r.kstar_balanced},
        {"ham_bypass", r.ham_bypass},
        {"ak_margin", r.ak_margin},
    };
}

inline void to_json(json& j, const HamiltonianBypass& b) { j = {{"path", b.path}, {"chord", b.chord}}; }

inline void to_json(json& j, const Bypass& b) {
    j = {{"entry", b.entry}, {"interior", b.interior}, {"exit", b.exit}, {"gap", b.gap}};
}

inline void to_json(json& j, const ExtensionResult& e) {
    j = {{"path", e.path}, {"absorbed", e.absorbed}, {"leftover", e.leftover}};
}

}  // namespace hamlab

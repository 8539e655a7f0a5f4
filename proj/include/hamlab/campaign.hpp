#pragma once

// Verification campaigns: replay a claim over an enumerated or sampled
// space of digraphs, recording counterexamples, with sharding, checkpoints
// and a deterministic merge.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "hamlab/classify.hpp"
#include "hamlab/conditions.hpp"
#include "hamlab/cycles.hpp"
#include "hamlab/generators.hpp"
#include "hamlab/path_ops.hpp"
#include "hamlab/serialization.hpp"
#include "hamlab/text_format.hpp"

namespace hamlab {

enum class Claim { thm15, thm110, conj19, bypass_claim, lemma35, lemma_suite };
enum class Mode { exhaustive, sample, tournaments };

inline const char* to_string(Claim c) {
    switch (c) {
        case Claim::thm15: return "thm15";
        case Claim::thm110: return "thm110";
        case Claim::conj19: return "conj19";
        case Claim::bypass_claim: return "bypass_claim";
        case Claim::lemma35: return "lemma35";
        case Claim::lemma_suite: return "lemma_suite";
    }
    return "?";
}

inline const char* to_string(Mode m) {
    switch (m) {
        case Mode::exhaustive: return "exhaustive";
        case Mode::sample: return "sample";
        case Mode::tournaments: return "tournaments";
    }
    return "?";
}

inline std::optional<Claim> parse_claim(std::string_view s) {
    for (Claim c : {Claim::thm15, Claim::thm110, Claim::conj19, Claim::bypass_claim, Claim::lemma35, Claim::lemma_suite}) {
        if (s == to_string(c)) return c;
    }
    return std::nullopt;
}

inline std::optional<Mode> parse_mode(std::string_view s) {
    for (Mode m : {Mode::exhaustive, Mode::sample, Mode::tournaments}) {
        if (s == to_string(m)) return m;
    }
    return std::nullopt;
}

/// Smallest order at which claims are audited.
inline constexpr int min_campaign_order = 4;
/// Largest order for the randomized lemma suite.
inline constexpr int max_lemma_suite_order = 8;

struct CampaignSpec {
    Claim claim = Claim::thm15;
    int n = 4;
    Mode mode = Mode::exhaustive;
    std::uint64_t shard = 0;
    std::uint64_t shards = 1;
    std::uint64_t samples = 0;  ///< sample mode: accepted samples (lemma_suite: per lemma)
    double arc_prob = 0.5;
    std::uint64_t seed = 42;
    std::optional<std::string> checkpoint_path;
    /// Exhaustive n = 6 (2^30 digraphs) must be requested explicitly.
    bool long_run = false;
    TripleReading reading = default_triple_reading;
};

/// Throws InvalidArgument / CapExceeded when the spec cannot be run.
inline void validate(const CampaignSpec& s) {
    if (s.shards == 0 || s.shard >= s.shards) throw InvalidArgument("shard must lie in [0, shards)");
    if (s.claim == Claim::lemma_suite) {
        if (s.mode != Mode::sample) throw InvalidArgument("lemma_suite runs in sample mode only");
        if (s.n < 3 || s.n > max_lemma_suite_order) throw InvalidArgument("lemma_suite order must lie in [3, 8]");
    } else if (s.n < min_campaign_order || s.n > max_order) {
        throw InvalidArgument("campaign order must lie in [4, 64]");
    }
    switch (s.mode) {
        case Mode::exhaustive:
            if (labeled_bits(s.n) > max_enumeration_bits) {
                throw CapExceeded("exhaustive order " + std::to_string(s.n) + " exceeds the 2^40 cap");
            }
            if (s.n >= 6 && !s.long_run) throw InvalidArgument("exhaustive order >= 6 requires the long-run flag");
            break;
        case Mode::tournaments:
            if (s.n > max_tournament_order) throw CapExceeded("tournament enumeration supports orders up to 8");
            break;
        case Mode::sample:
            if (s.samples < 1) throw InvalidArgument("sample mode needs samples >= 1");
            if (s.shards != 1) throw InvalidArgument("sample mode is not sharded");
            probability_threshold(s.arc_prob);
            break;
    }
}

inline nlohmann::json spec_json(const CampaignSpec& s) {
    return {
        {"claim", to_string(s.claim)},
        {"n", s.n},
        {"mode", to_string(s.mode)},
        {"shard", s.shard},
        {"shards", s.shards},
        {"samples", s.samples},
        {"arc_prob", s.arc_prob},
        {"seed", s.seed},
        {"long_run", s.long_run},
        {"reading", s.reading == TripleReading::pairwise_distinct ? "pairwise_distinct" : "z_may_equal_y"},
    };
}

/// FNV-1a 64 of the canonical spec serialization (checkpoint path excluded).
inline std::string spec_fingerprint(const CampaignSpec& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : spec_json(s).dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

struct Counterexample {
    std::uint64_t index = 0;  ///< enumeration index, or stream offset in sample mode
    std::string digraph;      ///< canonical text
    std::string detail;

    bool operator==(const Counterexample&) const = default;
};

/// One isomorphism class of digraphs admitted by a claim's exception branch.
struct ExceptionClass {
    std::string representative;  ///< canonical text of the lowest-index member
    std::uint64_t first_index = 0;
    std::uint64_t count = 0;

    bool operator==(const ExceptionClass&) const = default;
};

struct CampaignCursor {
    EnumerationCursor enumeration;    ///< exhaustive / tournament modes
    std::uint64_t samples_done = 0;   ///< sample mode
    std::uint64_t stream_offset = 0;  ///< sample mode: draws consumed so far

    bool operator==(const CampaignCursor&) const = default;
};

struct CampaignResult {
    Claim claim = Claim::thm15;
    int n = 0;
    Mode mode = Mode::exhaustive;
    std::uint64_t seed = 0;
    std::uint64_t scanned = 0;
    std::uint64_t strong = 0;
    std::uint64_t hypothesis_hits = 0;
    std::uint64_t verified = 0;
    /// Hits verified through the claim's exceptional branch (balanced K*,
    /// exceptional tournament).
    std::uint64_t exceptional_hits = 0;
    std::vector<Counterexample> counterexamples;
    std::vector<ExceptionClass> exception_classes;
    CampaignCursor cursor;
    bool complete = false;
    std::uint64_t elapsed_ms = 0;

    /// Field-by-field equality ignoring wall-clock time.
    bool same_outcome(const CampaignResult& o) const {
        return claim == o.claim && n == o.n && mode == o.mode && seed == o.seed && scanned == o.scanned &&
               strong == o.strong && hypothesis_hits == o.hypothesis_hits && verified == o.verified &&
               exceptional_hits == o.exceptional_hits && counterexamples == o.counterexamples &&
               exception_classes == o.exception_classes && cursor == o.cursor && complete == o.complete;
    }
};

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json_value(const CampaignResult& r) {
    using nlohmann::json;
    json cex = json::array();
    for (const auto& c : r.counterexamples) cex.push_back({{"index", c.index}, {"digraph", c.digraph}, {"detail", c.detail}});
    json classes = json::array();
    for (const auto& e : r.exception_classes) {
        classes.push_back({{"representative", e.representative}, {"first_index", e.first_index}, {"count", e.count}});
    }
    json cursor;
    if (r.mode == Mode::sample) {
        cursor = {{"samples_done", r.cursor.samples_done}, {"offset", r.cursor.stream_offset}};
    } else {
        cursor = {{"index", r.cursor.enumeration.index},
                  {"shard", r.cursor.enumeration.shard},
                  {"shards", r.cursor.enumeration.shards}};
    }
    return {
        {"claim", to_string(r.claim)},
        {"n", r.n},
        {"mode", to_string(r.mode)},
        {"scanned", r.scanned},
        {"strong", r.strong},
        {"hypothesis_hits", r.hypothesis_hits},
        {"verified", r.verified},
        {"exceptional_hits", r.exceptional_hits},
        {"counterexamples", cex},
        {"exception_classes", classes},
        {"cursor", cursor},
        {"complete", r.complete},
        {"seed", r.seed},
        {"elapsed_ms", r.elapsed_ms},
    };
}

inline CampaignResult result_from_json(const nlohmann::json& j) {
    CampaignResult r;
    auto claim = parse_claim(j.at("claim").get<std::string>());
    auto mode = parse_mode(j.at("mode").get<std::string>());
    if (!claim || !mode) throw CheckpointError("unknown claim or mode in checkpoint");
    r.claim = *claim;
    r.mode = *mode;
    r.n = j.at("n").get<int>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.scanned = j.at("scanned").get<std::uint64_t>();
    r.strong = j.at("strong").get<std::uint64_t>();
    r.hypothesis_hits = j.at("hypothesis_hits").get<std::uint64_t>();
    r.verified = j.at("verified").get<std::uint64_t>();
    r.exceptional_hits = j.at("exceptional_hits").get<std::uint64_t>();
    for (const auto& c : j.at("counterexamples")) {
        r.counterexamples.push_back(
            {c.at("index").get<std::uint64_t>(), c.at("digraph").get<std::string>(), c.at("detail").get<std::string>()});
    }
    for (const auto& e : j.at("exception_classes")) {
        r.exception_classes.push_back({e.at("representative").get<std::string>(), e.at("first_index").get<std::uint64_t>(),
                                       e.at("count").get<std::uint64_t>()});
    }
    const auto& cur = j.at("cursor");
    if (r.mode == Mode::sample) {
        r.cursor.samples_done = cur.at("samples_done").get<std::uint64_t>();
        r.cursor.stream_offset = cur.at("offset").get<std::uint64_t>();
        r.cursor.enumeration = {r.n, 0, 0, 1};  // unused; matches fresh_result
    } else {
        r.cursor.enumeration = {r.n, cur.at("index").get<std::uint64_t>(), cur.at("shard").get<std::uint64_t>(),
                                cur.at("shards").get<std::uint64_t>()};
    }
    r.complete = j.at("complete").get<bool>();
    r.elapsed_ms = j.at("elapsed_ms").get<std::uint64_t>();
    return r;
}

// ---------------------------------------------------------------------------
// Checkpoints: the result JSON plus a "fingerprint" key, written atomically.

inline void checkpoint_save(const std::string& path, const CampaignSpec& spec, const CampaignResult& r) {
    nlohmann::json j = to_json_value(r);
    j["fingerprint"] = spec_fingerprint(spec);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw CheckpointError("cannot write '" + tmp + "'");
        out << j.dump(2) << '\n';
        if (!out) throw CheckpointError("short write to '" + tmp + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw CheckpointError("cannot rename '" + tmp + "' to '" + path + "': " + ec.message());
}

inline CampaignResult checkpoint_load(const std::string& path, const CampaignSpec& spec) {
    std::ifstream in(path);
    if (!in) throw CheckpointError("cannot open checkpoint '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw CheckpointError("corrupt checkpoint '" + path + "' at byte " + std::to_string(e.byte) + ": " + e.what());
    }
    try {
        if (j.at("fingerprint").get<std::string>() != spec_fingerprint(spec)) {
            throw CheckpointError("checkpoint '" + path + "' was written for a different campaign");
        }
        return result_from_json(j);
    } catch (const nlohmann::json::exception& e) {
        throw CheckpointError("malformed checkpoint '" + path + "': " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Per-digraph claim evaluation

enum class Outcome { not_strong, hypothesis_unmet, verified, exceptional, counterexample };

struct Evaluation {
    Outcome outcome = Outcome::not_strong;
    std::string detail;
};

inline std::string missing_lengths(const Digraph& d) {
    std::string out;
    for (int m = 3; m <= d.order(); ++m) {
        if (!find_cycle_of_length(d, m)) out += (out.empty() ? "" : ",") + std::to_string(m);
    }
    return out;
}

/// Judges one digraph against a claim. Strong connectivity is tested first,
/// then the degree hypothesis, then the (expensive) cycle searches.
inline Evaluation evaluate_claim(Claim claim, const Digraph& d,
                                 TripleReading reading = default_triple_reading) {
    if (!is_strong(d)) return {Outcome::not_strong, {}};
    const AkMargin margin = ak_margin(d, reading);
    switch (claim) {
        case Claim::thm15:
            if (!margin.satisfies(0)) return {Outcome::hypothesis_unmet, {}};
            if (hamiltonian_cycle(d)) return {Outcome::verified, {}};
            return {Outcome::counterexample, "A0 holds but no Hamiltonian cycle"};
        case Claim::thm110:
            if (!margin.satisfies(0)) return {Outcome::hypothesis_unmet, {}};
            if (pre_hamiltonian_cycle(d)) return {Outcome::verified, {}};
            if (is_balanced_kstar(d)) return {Outcome::exceptional, {}};
            return {Outcome::counterexample, "A0 holds but no cycle of length n-1 and not K*_{n/2,n/2}"};
        case Claim::conj19:
            if (!margin.satisfies(3)) return {Outcome::hypothesis_unmet, {}};
            if (is_pancyclic(d)) return {Outcome::verified, {}};
            return {Outcome::counterexample, "conjecture candidate: A3 holds but no cycle of length " + missing_lengths(d)};
        case Claim::bypass_claim:
            if (!margin.satisfies(0)) return {Outcome::hypothesis_unmet, {}};
            if (hamiltonian_bypass(d)) return {Outcome::verified, {}};
            if (d.order() == 5 && is_tournament(d)) return {Outcome::exceptional, {}};
            return {Outcome::counterexample, "A0 holds but no Hamiltonian bypass"};
        case Claim::lemma35: {
            if (!margin.satisfies(0)) return {Outcome::hypothesis_unmet, {}};
            Lemma35Result l = lemma35_holds(d, reading);
            if (l.status == Lemma35Result::Status::holds) return {Outcome::verified, {}};
            if (l.status == Lemma35Result::Status::hypothesis_unmet) return {Outcome::hypothesis_unmet, {}};
            const auto& t = *l.counterexample;
            return {Outcome::counterexample, "vertex " + std::to_string(t[0]) + " has low-sum non-adjacent partners " +
                                                 std::to_string(t[1]) + " and " + std::to_string(t[2])};
        }
        case Claim::lemma_suite:
            break;
    }
    throw InvalidArgument("claim has no per-digraph judgement");
}

// ---------------------------------------------------------------------------
// Randomized lemma instances

enum class LemmaId { insert_via_cycle = 0, insert_vertex = 1, absorb_path = 2, merge_path = 3 };

inline const char* lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::insert_via_cycle: return "cycles_from_external_vertex";
        case LemmaId::insert_vertex: return "insert_vertex";
        case LemmaId::absorb_path: return "absorb_path_into_cycle";
        case LemmaId::merge_path: return "merge_path";
    }
    return "?";
}

struct LemmaInstance {
    Digraph digraph{1};
    std::vector<Vertex> host;   ///< cycle (lemmas on cycles) or path
    std::vector<Vertex> guest;  ///< external vertex (size 1) or path
};

/// Random instance: a planted host cycle/path and guest vertex/path on a
/// random background, with the host-guest arcs drawn at a boosted density so
/// the degree hypothesis holds often.
inline LemmaInstance random_lemma_instance(LemmaId id, int max_n, double arc_prob, SplitMix64& rng) {
    const int n = 3 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - 2)));
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);

    const int host_len = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 2)));
    int guest_len = 1;
    if (id == LemmaId::absorb_path || id == LemmaId::merge_path) {
        guest_len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - host_len)));
    }
    std::vector<Vertex> host(perm.begin(), perm.begin() + host_len);
    std::vector<Vertex> guest(perm.begin() + host_len, perm.begin() + host_len + guest_len);
    const VertexSet host_set = VertexSet::of(host);
    const VertexSet guest_set = VertexSet::of(guest);

    static constexpr double boosts[] = {0.5, 0.625, 0.75, 0.875};
    const std::uint64_t background = probability_threshold(arc_prob);
    const std::uint64_t boosted = probability_threshold(boosts[rng.below(4)]);

    std::array<std::uint64_t, max_order> rows{};
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (u == v) continue;
            bool crossing = (host_set.contains(u) && guest_set.contains(v)) || (guest_set.contains(u) && host_set.contains(v));
            if (rng.next() < (crossing ? boosted : background)) rows[u] |= std::uint64_t{1} << v;
        }
    }
    const bool closed = id == LemmaId::insert_via_cycle || id == LemmaId::absorb_path;
    for (int i = 0; i + 1 < host_len; ++i) rows[host[i]] |= std::uint64_t{1} << host[i + 1];
    if (closed) rows[host.back()] |= std::uint64_t{1} << host.front();
    for (int i = 0; i + 1 < guest_len; ++i) rows[guest[i]] |= std::uint64_t{1} << guest[i + 1];

    return {Digraph::from_out_rows(n, std::span(rows).first(n)), std::move(host), std::move(guest)};
}

/// Hypothesis check and constructive run for one instance.
/// nullopt: hypothesis unmet. Otherwise an empty string on success, or the
/// failure detail.
inline std::optional<std::string> run_lemma_instance(LemmaId id, const LemmaInstance& inst) {
    const Digraph& d = inst.digraph;
    try {
        switch (id) {
            case LemmaId::insert_via_cycle: {
                CycleWitness c(inst.host);
                const Vertex x = inst.guest.front();
                if (degree_toward(d, x, c.vertex_set()).total < static_cast<int>(c.length()) + 1) return std::nullopt;
                auto cycles = cycles_from_external_vertex(d, c, x);
                VertexSet scope = c.vertex_set();
                scope.insert(x);
                for (int len = 2; len <= static_cast<int>(c.length()) + 1; ++len) {
                    auto it = cycles.find(len);
                    if (it == cycles.end() || !it->second.valid_in(d) || it->second.length() != static_cast<std::size_t>(len) ||
                        !it->second.vertex_set().subset_of(scope)) {
                        return "bad witness for length " + std::to_string(len);
                    }
                }
                return std::string{};
            }
            case LemmaId::insert_vertex: {
                PathWitness p(inst.host);
                const Vertex x = inst.guest.front();
                if (insertion_guarantee(d, p, x) == 0) return std::nullopt;
                auto ins = insert_vertex(d, p, x);
                if (!ins) return "no insertion slot although case " + std::to_string(insertion_guarantee(d, p, x)) + " holds";
                VertexSet expect = p.vertex_set();
                expect.insert(x);
                if (!ins->path.valid_in(d) || ins->path.vertex_set() != expect || ins->path.front() != p.front() ||
                    ins->path.back() != p.back()) {
                    return std::string("inserted path does not validate");
                }
                return std::string{};
            }
            case LemmaId::absorb_path: {
                CycleWitness c(inst.host);
                PathWitness q(inst.guest);
                const VertexSet on_c = c.vertex_set();
                const int sum = (d.in_neighbours(q.front()) & on_c).size() + (d.out_neighbours(q.back()) & on_c).size();
                if (sum < static_cast<int>(c.length()) + 1) return std::nullopt;
                auto cycles = absorb_path_into_cycle(d, c, q);
                const VertexSet scope = on_c | q.vertex_set();
                const int r = static_cast<int>(q.size());
                for (int len = r + 1; len <= static_cast<int>(c.length()) + r; ++len) {
                    auto it = cycles.find(len);
                    if (it == cycles.end() || !it->second.valid_in(d) || it->second.length() != static_cast<std::size_t>(len) ||
                        !it->second.vertex_set().subset_of(scope)) {
                        return "bad witness for length " + std::to_string(len);
                    }
                }
                return std::string{};
            }
            case LemmaId::merge_path: {
                PathWitness p(inst.host);
                PathWitness q(inst.guest);
                const VertexSet on_p = p.vertex_set();
                const int lhs = (d.in_neighbours(q.front()) & on_p).size() + (d.out_neighbours(q.back()) & on_p).size();
                const int rhs = static_cast<int>(p.size()) + (d.has_arc(p.back(), q.front()) ? 1 : 0) +
                                (d.has_arc(q.back(), p.front()) ? 1 : 0);
                if (lhs < rhs) return std::nullopt;
                auto merged = merge_path(d, p, q);
                if (!merged) return std::string("no splice position although the hypothesis holds");
                if (!merged->valid_in(d) || merged->vertex_set() != (on_p | q.vertex_set()) ||
                    merged->front() != p.front() || merged->back() != p.back()) {
                    return std::string("merged path does not validate");
                }
                return std::string{};
            }
        }
    } catch (const LemmaViolation& e) {
        return std::string(e.what());
    }
    return std::string("unknown lemma");
}

// ---------------------------------------------------------------------------
// Runner

struct RunOptions {
    /// Stop (with a checkpoint, if configured) after this many items in this
    /// invocation; 0 means run to completion.
    std::uint64_t stop_after = 0;
    std::uint64_t checkpoint_every = 1 << 16;
    std::function<void(const CampaignResult&)> heartbeat;
    std::chrono::milliseconds heartbeat_interval{2000};
};

namespace detail {

inline std::uint64_t space_size(const CampaignSpec& s) {
    return std::uint64_t{1} << (s.mode == Mode::tournaments ? tournament_bits(s.n) : labeled_bits(s.n));
}

/// Smallest index >= total in the residue class shard (mod shards).
inline std::uint64_t end_index(std::uint64_t total, std::uint64_t shard, std::uint64_t shards) {
    std::uint64_t base = total - total % shards + shard;
    return base >= total ? base : base + shards;
}

inline void add_exception(CampaignResult& r, const Digraph& d, std::uint64_t index) {
    for (auto& cls : r.exception_classes) {
        if (isomorphic_small(parse_digraph(cls.representative), d)) {
            ++cls.count;
            if (index < cls.first_index) {
                cls.first_index = index;
                cls.representative = serialize(d);
            }
            return;
        }
    }
    r.exception_classes.push_back({serialize(d), index, 1});
}

inline void record(CampaignResult& r, const Evaluation& e, const Digraph& d, std::uint64_t index) {
    ++r.scanned;
    if (e.outcome == Outcome::not_strong) return;
    ++r.strong;
    if (e.outcome == Outcome::hypothesis_unmet) return;
    ++r.hypothesis_hits;
    switch (e.outcome) {
        case Outcome::verified: ++r.verified; break;
        case Outcome::exceptional:
            ++r.verified;
            ++r.exceptional_hits;
            if (r.claim == Claim::bypass_claim) add_exception(r, d, index);
            break;
        case Outcome::counterexample: r.counterexamples.push_back({index, serialize(d), e.detail}); break;
        default: break;
    }
}

class Clock {
   public:
    explicit Clock(std::uint64_t prior_ms) : prior_ms_(prior_ms), start_(std::chrono::steady_clock::now()) {}
    std::uint64_t elapsed_ms() const {
        return prior_ms_ + static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                                          std::chrono::steady_clock::now() - start_)
                                                          .count());
    }

   private:
    std::uint64_t prior_ms_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

inline CampaignResult fresh_result(const CampaignSpec& spec) {
    CampaignResult r;
    r.claim = spec.claim;
    r.n = spec.n;
    r.mode = spec.mode;
    r.seed = spec.seed;
    r.cursor.enumeration = {spec.n, spec.shard, spec.shard, spec.shards};
    return r;
}

/// Runs (or resumes from `spec.checkpoint_path`) a campaign.
inline CampaignResult run_campaign(const CampaignSpec& spec, const RunOptions& options = {}) {
    validate(spec);
    CampaignResult r = fresh_result(spec);
    if (spec.checkpoint_path && std::filesystem::exists(*spec.checkpoint_path)) {
        r = checkpoint_load(*spec.checkpoint_path, spec);
        if (r.complete) return r;
    }
    detail::Clock clock(r.elapsed_ms);
    auto last_beat = std::chrono::steady_clock::now();
    std::uint64_t processed = 0;

    // Returns false when the run must pause.
    auto after_item = [&]() {
        ++processed;
        if (options.heartbeat && (processed & 0x3FF) == 0) {
            auto now = std::chrono::steady_clock::now();
            if (now - last_beat >= options.heartbeat_interval) {
                r.elapsed_ms = clock.elapsed_ms();
                options.heartbeat(r);
                last_beat = now;
            }
        }
        if (spec.checkpoint_path && options.checkpoint_every && processed % options.checkpoint_every == 0) {
            r.elapsed_ms = clock.elapsed_ms();
            checkpoint_save(*spec.checkpoint_path, spec, r);
        }
        return options.stop_after == 0 || processed < options.stop_after;
    };

    bool paused = false;
    if (spec.claim == Claim::lemma_suite) {
        SplitMix64 rng(spec.seed);
        rng.seek(r.cursor.stream_offset);
        const std::uint64_t attempt_cap = spec.samples * 1000;
        while (r.cursor.samples_done < 4 * spec.samples && !paused) {
            const auto id = static_cast<LemmaId>(r.cursor.samples_done / spec.samples);
            std::uint64_t attempts = 0;
            for (;;) {
                const std::uint64_t offset = rng.draws();
                LemmaInstance inst = random_lemma_instance(id, spec.n, spec.arc_prob, rng);
                ++r.scanned;
                auto outcome = run_lemma_instance(id, inst);
                if (!outcome) {
                    if (++attempts > attempt_cap) throw SamplingExhausted("lemma instances rarely meet the hypothesis");
                    continue;
                }
                ++r.hypothesis_hits;
                if (outcome->empty()) {
                    ++r.verified;
                } else {
                    r.counterexamples.push_back(
                        {offset, serialize(inst.digraph), std::string(lemma_name(id)) + ": " + *outcome});
                }
                break;
            }
            ++r.cursor.samples_done;
            r.cursor.stream_offset = rng.draws();
            paused = !after_item();
        }
        r.complete = r.cursor.samples_done == 4 * spec.samples;
    } else if (spec.mode == Mode::sample) {
        SplitMix64 rng(spec.seed);
        rng.seek(r.cursor.stream_offset);
        while (r.cursor.samples_done < spec.samples && !paused) {
            const std::uint64_t offset = rng.draws();
            Digraph d = sample_strong(spec.n, spec.arc_prob, rng);
            detail::record(r, evaluate_claim(spec.claim, d, spec.reading), d, offset);
            ++r.cursor.samples_done;
            r.cursor.stream_offset = rng.draws();
            paused = !after_item();
        }
        r.complete = r.cursor.samples_done == spec.samples;
    } else {
        const std::uint64_t total = detail::space_size(spec);
        auto& cur = r.cursor.enumeration;
        while (cur.index < total && !paused) {
            const std::uint64_t index = cur.index;
            Digraph d = spec.mode == Mode::tournaments ? tournament_from_index(spec.n, index)
                                                       : digraph_from_index(spec.n, index);
            detail::record(r, evaluate_claim(spec.claim, d, spec.reading), d, index);
            cur.index += cur.shards;
            paused = !after_item();
        }
        r.complete = cur.index >= total;
    }

    r.elapsed_ms = clock.elapsed_ms();
    if (spec.checkpoint_path) checkpoint_save(*spec.checkpoint_path, spec, r);
    return r;
}

/// Combines shard results: counts add, counterexamples concatenate in index
/// order, exception classes merge up to isomorphism. The cursor is set to the
/// final cursor of the (shard, shards) slice the parts jointly cover.
inline CampaignResult merge_results(const std::vector<CampaignResult>& parts, std::uint64_t shard = 0,
                                    std::uint64_t shards = 1) {
    if (parts.empty()) throw InvalidArgument("nothing to merge");
    CampaignResult m = parts.front();
    m.scanned = m.strong = m.hypothesis_hits = m.verified = m.exceptional_hits = m.elapsed_ms = 0;
    m.counterexamples.clear();
    m.exception_classes.clear();
    m.complete = true;
    for (const auto& p : parts) {
        if (p.claim != m.claim || p.n != m.n || p.mode != m.mode || p.seed != m.seed) {
            throw InvalidArgument("cannot merge results of different campaigns");
        }
        m.scanned += p.scanned;
        m.strong += p.strong;
        m.hypothesis_hits += p.hypothesis_hits;
        m.verified += p.verified;
        m.exceptional_hits += p.exceptional_hits;
        m.elapsed_ms += p.elapsed_ms;
        m.complete = m.complete && p.complete;
        m.counterexamples.insert(m.counterexamples.end(), p.counterexamples.begin(), p.counterexamples.end());
        for (const auto& cls : p.exception_classes) {
            Digraph rep = parse_digraph(cls.representative);
            auto same = std::find_if(m.exception_classes.begin(), m.exception_classes.end(), [&](const ExceptionClass& e) {
                return isomorphic_small(parse_digraph(e.representative), rep);
            });
            if (same == m.exception_classes.end()) {
                m.exception_classes.push_back(cls);
            } else {
                same->count += cls.count;
                if (cls.first_index < same->first_index) {
                    same->first_index = cls.first_index;
                    same->representative = cls.representative;
                }
            }
        }
    }
    std::stable_sort(m.counterexamples.begin(), m.counterexamples.end(),
                     [](const Counterexample& a, const Counterexample& b) { return a.index < b.index; });
    std::sort(m.exception_classes.begin(), m.exception_classes.end(),
              [](const ExceptionClass& a, const ExceptionClass& b) { return a.first_index < b.first_index; });
    if (m.mode != Mode::sample) {
        CampaignSpec probe;
        probe.n = m.n;
        probe.mode = m.mode;
        const std::uint64_t total = detail::space_size(probe);
        m.cursor.enumeration = {m.n, m.complete ? detail::end_index(total, shard, shards) : 0, shard, shards};
    }
    return m;
}

/// Runs an enumerated campaign on `jobs` worker threads by splitting the
/// spec's shard into `jobs` sub-shards, then merges. Sample-mode and
/// checkpointed campaigns run on the calling thread.
inline CampaignResult run_campaign_parallel(const CampaignSpec& spec, unsigned jobs, const RunOptions& options = {}) {
    validate(spec);
    if (jobs <= 1 || spec.mode == Mode::sample || spec.checkpoint_path) return run_campaign(spec, options);
    std::vector<CampaignResult> parts(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> workers;
    for (unsigned j = 0; j < jobs; ++j) {
        workers.emplace_back([&, j] {
            try {
                CampaignSpec sub = spec;
                sub.shard = spec.shard + spec.shards * j;
                sub.shards = spec.shards * jobs;
                RunOptions sub_options;
                if (j == 0) sub_options.heartbeat = options.heartbeat;
                parts[j] = run_campaign(sub, sub_options);
            } catch (...) {
                errors[j] = std::current_exception();
            }
        });
    }
    for (auto& w : workers) w.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return merge_results(parts, spec.shard, spec.shards);
}

// ---------------------------------------------------------------------------
// Sharpness audit of the A_0 bound

struct SharpnessRow {
    std::string family;
    int parameter = 0;
    AkMargin margin;
    bool hamiltonian = false;
    bool pre_hamiltonian = false;
    bool kstar = false;
    AkMargin expected_margin;
    std::optional<bool> expected_hamiltonian;
    std::optional<bool> expected_pre_hamiltonian;
    std::optional<bool> expected_kstar;
    bool passed = false;
};

struct SharpnessReport {
    std::vector<SharpnessRow> rows;
    bool passed() const {
        return std::all_of(rows.begin(), rows.end(), [](const SharpnessRow& r) { return r.passed; });
    }
};

/// Two cliques sharing a vertex (m = 2..5) and K*_{p,p} minus an arc
/// (p = 2..4) sit at margin -1 and miss the Hamiltonian conclusions of A_0;
/// K*_{p,p} itself (p = 2..4) is the control at margin +2.
inline SharpnessReport audit_sharpness() {
    SharpnessReport report;
    auto row = [&](std::string family, int parameter, const Digraph& d, AkMargin margin, std::optional<bool> ham,
                   std::optional<bool> pre, std::optional<bool> kstar) {
        SharpnessRow r{std::move(family), parameter, ak_margin(d), hamiltonian_cycle(d).has_value(),
                       pre_hamiltonian_cycle(d).has_value(), recognize_kstar(d).has_value(), margin, ham, pre, kstar};
        r.passed = r.margin == margin && (!ham || *ham == r.hamiltonian) && (!pre || *pre == r.pre_hamiltonian) &&
                   (!kstar || *kstar == r.kstar);
        report.rows.push_back(std::move(r));
    };
    for (int m = 2; m <= 5; ++m) row("two-cliques", m, gen_two_cliques(m), AkMargin::bounded(-1), false, std::nullopt, std::nullopt);
    for (int p = 2; p <= 4; ++p) {
        row("kstar-minus-arc", p, gen_kstar_minus_arc(p, p), AkMargin::bounded(-1), true, false, false);
    }
    for (int p = 2; p <= 4; ++p) row("kstar", p, gen_kstar(p, p), AkMargin::bounded(2), true, false, true);
    return report;
}

inline nlohmann::json to_json_value(const SharpnessReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"family", r.family},
                        {"parameter", r.parameter},
                        {"ak_margin", r.margin},
                        {"hamiltonian", r.hamiltonian},
                        {"pre_hamiltonian", r.pre_hamiltonian},
                        {"kstar", r.kstar},
                        {"passed", r.passed}});
    }
    return {{"rows", rows}, {"passed", report.passed()}};
}

}  // namespace hamlab

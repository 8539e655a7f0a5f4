// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>
#include <string>

#include "hamlab/hamlab.hpp"
#include "oracles.hpp"

using namespace hamlab;

namespace {

struct Check {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

CampaignResult timed_run(const CampaignSpec& spec, double& seconds) {
    auto start = std::chrono::steady_clock::now();
    CampaignResult r = run_campaign(spec);
    seconds = seconds_since(start);
    return r;
}

CampaignSpec exhaustive(Claim claim, int n) {
    CampaignSpec s;
    s.claim = claim;
    s.n = n;
    s.mode = Mode::exhaustive;
    return s;
}

std::string margin_text(const AkMargin& m) { return m.unbounded() ? "unbounded" : std::to_string(*m.max_k); }

void criterion_1(Check& o) {
    const double limits[] = {1.0, 60.0};
    for (int n : {4, 5}) {
        double secs = 0;
        CampaignResult r = timed_run(exhaustive(Claim::thm15, n), secs);
        o.detail << " n=" << n << ": " << r.scanned << " scanned, " << r.hypothesis_hits << " hits, "
                 << r.counterexamples.size() << " counterexamples, " << secs << "s;";
        o.require(r.complete && r.scanned == (std::uint64_t{1} << (n * (n - 1))), "full space scanned");
        o.require(r.counterexamples.empty(), "zero counterexamples");
        o.require(r.hypothesis_hits > 0, "hypothesis exercised");
        o.require(secs < limits[n - 4], "time limit at n=" + std::to_string(n));
    }
}

void criterion_2(Check& o) {
    for (int n : {4, 5}) {
        CampaignResult r = run_campaign(exhaustive(Claim::thm110, n));
        o.detail << " n=" << n << ": " << r.hypothesis_hits << " hits, " << r.exceptional_hits << " balanced K*, "
                 << r.counterexamples.size() << " counterexamples;";
        o.require(r.complete && r.counterexamples.empty(), "zero counterexamples");
        if (n == 4) o.require(r.exceptional_hits > 0, "exceptional branch exercised");
    }
    const Digraph k22 = gen_kstar(2, 2);
    const ClassificationRecord c = classify(k22);
    o.require(c.strong && c.a0 && !c.pre_hamiltonian, "K*_{2,2} is a strong A0 hit without a pre-Hamiltonian cycle");
    o.require(evaluate_claim(Claim::thm110, k22).outcome == hamlab::Outcome::exceptional,
              "K*_{2,2} takes the exceptional branch");
}

void criterion_3(Check& o) {
    for (int m : {3, 4, 5}) {
        Digraph d = gen_two_cliques(m);
        AkMargin margin = ak_margin(d);
        o.detail << " two-cliques(" << m << ") margin " << margin_text(margin) << ";";
        o.require(margin == AkMargin::bounded(-1), "two-cliques margin -1");
        o.require(!hamiltonian_cycle(d) && !oracle::has_cycle(d, d.order()), "two-cliques non-Hamiltonian");
    }
    for (int p : {2, 3, 4}) {
        Digraph d = gen_kstar_minus_arc(p, p);
        AkMargin margin = ak_margin(d);
        o.detail << " K*-minus-arc(" << p << ") margin " << margin_text(margin) << ";";
        o.require(margin == AkMargin::bounded(-1), "K* minus arc margin -1");
        o.require(hamiltonian_cycle(d) && oracle::has_cycle(d, 2 * p), "K* minus arc Hamiltonian");
        o.require(!pre_hamiltonian_cycle(d) && !oracle::has_cycle(d, 2 * p - 1), "K* minus arc not pre-Hamiltonian");
        o.require(!recognize_kstar(d) && !oracle::kstar_part(d), "K* minus arc not K*");
    }
}

void criterion_4(Check& o) {
    for (int p : {2, 3, 4}) {
        Digraph d = gen_kstar(p, p);
        AkMargin margin = ak_margin(d);
        std::vector<int> expected;
        for (int len = 2; len <= 2 * p; len += 2) expected.push_back(len);
        const std::vector<int> spectrum = cycle_spectrum(d).present();
        o.detail << " K*(" << p << "," << p << ") margin " << margin_text(margin) << ";";
        o.require(margin == AkMargin::bounded(2) && margin.satisfies(0), "margin +2");
        o.require(hamiltonian_cycle(d).has_value(), "Hamiltonian");
        o.require(spectrum == expected, "spectrum is the even lengths");
    }
}

void criterion_5(Check& o) {
    for (int n : {4, 5}) {
        CampaignResult lemma = run_campaign(exhaustive(Claim::lemma35, n));
        CampaignResult a0 = run_campaign(exhaustive(Claim::thm15, n));
        o.detail << " n=" << n << ": " << lemma.hypothesis_hits << " A0 hits checked, " << lemma.counterexamples.size()
                 << " failures;";
        o.require(lemma.hypothesis_hits == a0.hypothesis_hits, "every A0 hit checked");
        o.require(lemma.counterexamples.empty(), "zero failures");
    }
}

void criterion_6(Check& o) {
    CampaignSpec s;
    s.claim = Claim::lemma_suite;
    s.n = max_lemma_suite_order;
    s.mode = Mode::sample;
    s.samples = 100000;
    s.seed = 42;
    double secs = 0;
    CampaignResult r = timed_run(s, secs);
    o.detail << " " << r.hypothesis_hits << " instances meeting the hypotheses (" << r.scanned << " drawn), "
             << r.counterexamples.size() << " failures, " << secs << "s;";
    o.require(r.complete && r.hypothesis_hits == 4 * s.samples, "10^5 instances per lemma");
    o.require(r.verified == r.hypothesis_hits && r.counterexamples.empty(), "every construction succeeds");
}

void criterion_7(Check& o) {
    CampaignSpec s;
    s.claim = Claim::bypass_claim;
    s.n = 5;
    s.mode = Mode::tournaments;
    double secs = 0;
    CampaignResult r = timed_run(s, secs);
    o.detail << " " << r.scanned << " tournaments, " << r.exception_classes.size() << " class(es), "
             << r.exceptional_hits << " labeled copies, " << secs << "s;";
    o.require(r.scanned == 1024, "all tournaments enumerated");
    o.require(r.counterexamples.empty(), "no unexplained failure");
    o.require(r.exception_classes.size() == 1, "exactly one class");
    o.require(secs < 5.0, "time limit");
    if (r.exception_classes.size() == 1) {
        Digraph rep = parse_digraph(r.exception_classes.front().representative);
        auto m = oracle::ak_margin(rep, true);
        o.require(oracle::strong(rep) && (!m || *m >= 0) && !oracle::has_hamiltonian_bypass(rep),
                  "representative confirmed by the oracles");
    }
}

void criterion_8(Check& o) {
    std::uint64_t candidates = 0;
    for (int n : {4, 5}) {
        CampaignResult r = run_campaign(exhaustive(Claim::conj19, n));
        o.detail << " n=" << n << " exhaustive: " << r.hypothesis_hits << " A3 hits, " << r.counterexamples.size()
                 << " candidates;";
        o.require(r.complete, "exhaustive run completes");
        candidates += r.counterexamples.size();
    }
    for (int n : {6, 7}) {
        CampaignSpec s;
        s.claim = Claim::conj19;
        s.n = n;
        s.mode = Mode::sample;
        s.samples = 1000000;
        s.seed = 42;
        s.arc_prob = 0.5;
        CampaignResult r = run_campaign(s);
        o.detail << " n=" << n << " sampled: " << r.strong << " strong, " << r.hypothesis_hits << " A3 hits, "
                 << r.counterexamples.size() << " candidates;";
        o.require(r.complete && r.strong == s.samples, "10^6 strong samples");
        candidates += r.counterexamples.size();
        for (const auto& c : r.counterexamples) std::printf("  conjecture candidate: %s\n", c.detail.c_str());
    }
    o.detail << " total candidates " << candidates << " (reported, not failed);";
}

void criterion_9(Check& o) {
    SplitMix64 rng(42);
    std::uint64_t comparisons = 0;
    for (int i = 0; i < 10000; ++i) {
        const int n = 2 + static_cast<int>(rng.below(6));
        const double p = 0.15 + 0.1 * static_cast<double>(rng.below(7));
        Digraph d = sample_digraph(n, probability_threshold(p), rng);
        for (int len = 2; len <= n; ++len) {
            auto w = find_cycle_of_length(d, len);
            ++comparisons;
            if (w.has_value() != oracle::has_cycle(d, len) || (w && (!w->valid_in(d) || w->length() != std::size_t(len)))) {
                o.require(false, "disagreement on\n" + serialize(d) + "at length " + std::to_string(len));
                return;
            }
        }
    }
    o.detail << " 10000 digraphs, " << comparisons << " (digraph, length) pairs agree;";
}

void criterion_10(Check& o) {
    CampaignResult whole = run_campaign(exhaustive(Claim::thm110, 5));
    std::vector<CampaignResult> parts;
    for (std::uint64_t shard = 0; shard < 4; ++shard) {
        CampaignSpec s = exhaustive(Claim::thm110, 5);
        s.shard = shard;
        s.shards = 4;
        parts.push_back(run_campaign(s));
    }
    o.require(merge_results(parts).same_outcome(whole), "4-way shard merge equals single run");
    o.require(run_campaign_parallel(exhaustive(Claim::thm110, 5), 3).same_outcome(whole), "threaded run equals single run");

    auto path = std::filesystem::temp_directory_path() / "hamlab_acceptance_checkpoint.json";
    std::filesystem::remove(path);
    CampaignSpec s = exhaustive(Claim::thm110, 5);
    s.checkpoint_path = path.string();
    RunOptions stop;
    stop.stop_after = 300000;
    CampaignResult partial = run_campaign(s, stop);
    CampaignResult resumed = run_campaign(s);
    std::filesystem::remove(path);
    o.require(!partial.complete && resumed.same_outcome(whole), "checkpoint resume equals uninterrupted run");

    CampaignSpec sample;
    sample.claim = Claim::thm15;
    sample.n = 7;
    sample.mode = Mode::sample;
    sample.samples = 20000;
    o.require(run_campaign(sample).same_outcome(run_campaign(sample)), "sample campaign repeats");
    o.require(serialize(gen_random_strong(9, 0.3, 1234)) == serialize(gen_random_strong(9, 0.3, 1234)),
              "random generation repeats byte for byte");
    o.detail << " shard merge, threaded merge, resume after 300000 items, seeded generation;";
}

}  // namespace

int main() {
    const std::function<void(Check&)> criteria[] = {criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
                                                      criterion_6, criterion_7, criterion_8, criterion_9, criterion_10};
    int failures = 0;
    for (int i = 0; i < 10; ++i) {
        Check o;
        try {
            criteria[i](o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        failures += !o.pass;
        std::printf("[PRIMARY] criterion %d: %s%s\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d of 10 criteria passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}

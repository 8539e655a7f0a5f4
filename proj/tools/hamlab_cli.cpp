// hamlab: command-line front end.
//
//   hamlab check <file> [--distinct-triples] [--json]
//   hamlab spectrum <file> [--json]
//   hamlab bypass <file> [--json]
//   hamlab gen <family> <params...> [--seed S] [-o file]
//   hamlab verify <claim> --n N [--mode M] [--shard I --shards K] [--samples S]
//                 [--arc-prob P] [--seed S] [--checkpoint FILE] [--jobs J]
//                 [--long-run] [--distinct-triples] [--json]
//   hamlab audit [--json]
//
// Exit status: 0 success / claim holds, 1 counterexample or property
// failure, 2 usage or input error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamlab/hamlab.hpp"

namespace {

using namespace hamlab;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string margin_text(const AkMargin& m) { return m.unbounded() ? "unbounded" : std::to_string(*m.max_k); }

template <typename W>
std::string worst_text(const Verdict<W>& v) {
    if (!v.worst) return "-";
    json j = *v.worst;
    return j.dump();
}

void print_verdict_row(std::ostream& out, const std::string& name, const auto& v) {
    out << "  " << std::left << std::setw(24) << name << std::setw(7) << (v.holds ? "holds" : "fails")
        << " violations=" << std::setw(6) << v.total_violations << " worst=" << worst_text(v) << '\n';
}

int cmd_check(const std::string& path, TripleReading reading, bool as_json) {
    Digraph d = load_digraph(path);
    ConditionReport report = check_conditions(d, reading);
    ClassificationRecord record = classify(d, reading);
    if (as_json) {
        std::cout << json{{"conditions", report}, {"classification", record}}.dump(2) << '\n';
        return exit_ok;
    }
    std::cout << "order " << d.order() << ", " << d.arc_count() << " arcs\n";
    std::cout << "conditions:\n";
    print_verdict_row(std::cout, "ghouila_houri", report.ghouila_houri);
    print_verdict_row(std::cout, "woodall", report.woodall);
    print_verdict_row(std::cout, "meyniel", report.meyniel);
    print_verdict_row(std::cout, "min_degree_semidegree", report.min_degree_semidegree);
    print_verdict_row(std::cout, "a0", report.a0);
    print_verdict_row(std::cout, "bjgl_16", report.bjgl_16);
    print_verdict_row(std::cout, "bjgl_17", report.bjgl_17);
    print_verdict_row(std::cout, "bgy_18", report.bgy_18);
    std::cout << "  ak_margin               " << margin_text(report.ak_margin) << '\n';
    std::cout << "classification:\n"
              << "  strong           " << yes_no(record.strong) << '\n'
              << "  a0               " << yes_no(record.a0) << '\n'
              << "  a3               " << yes_no(record.a3) << '\n'
              << "  hamiltonian      " << yes_no(record.hamiltonian) << '\n'
              << "  pre-hamiltonian  " << yes_no(record.pre_hamiltonian) << '\n'
              << "  pancyclic        " << yes_no(record.pancyclic) << '\n'
              << "  kstar-balanced   " << yes_no(record.kstar_balanced) << '\n'
              << "  ham-bypass       " << yes_no(record.ham_bypass) << '\n';
    return exit_ok;
}

int cmd_spectrum(const std::string& path, bool as_json) {
    Digraph d = load_digraph(path);
    CycleSpectrum s = cycle_spectrum(d);
    if (as_json) {
        std::cout << json(s).dump() << '\n';
        return exit_ok;
    }
    auto lengths = s.present();
    for (std::size_t i = 0; i < lengths.size(); ++i) std::cout << (i ? " " : "") << lengths[i];
    std::cout << '\n';
    for (const auto& [length, w] : s.witnesses) {
        std::cout << length << ":";
        for (Vertex v : w.vertices()) std::cout << ' ' << v;
        std::cout << '\n';
    }
    return exit_ok;
}

int cmd_bypass(const std::string& path, bool as_json) {
    Digraph d = load_digraph(path);
    std::optional<HamiltonianBypass> b;
    if (d.order() >= 3) b = hamiltonian_bypass(d);
    if (as_json) {
        std::cout << (b ? json(*b) : json(nullptr)).dump() << '\n';
        return exit_ok;
    }
    if (!b) {
        std::cout << "none\n";
        return exit_ok;
    }
    std::cout << "path:";
    for (Vertex v : b->path.vertices()) std::cout << ' ' << v;
    std::cout << "\nchord: " << b->chord.from << ' ' << b->chord.to << '\n';
    return exit_ok;
}

int parse_int(const std::string& s) {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw InvalidArgument("expected an integer, got '" + s + "'");
    return v;
}

double parse_double(const std::string& s) {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw InvalidArgument("expected a number, got '" + s + "'");
    return v;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed,
            const std::string& output) {
    auto arity = [&](std::size_t k) {
        if (params.size() != k) {
            throw InvalidArgument(family + " takes " + std::to_string(k) + " parameter(s), got " + std::to_string(params.size()));
        }
    };
    std::optional<Digraph> d;
    try {
        if (family == "kstar") {
            arity(2);
            d = gen_kstar(parse_int(params[0]), parse_int(params[1]));
        } else if (family == "kstar-minus-arc") {
            arity(2);
            d = gen_kstar_minus_arc(parse_int(params[0]), parse_int(params[1]));
        } else if (family == "two-cliques") {
            arity(1);
            d = gen_two_cliques(parse_int(params[0]));
        } else if (family == "cycle") {
            arity(1);
            d = gen_directed_cycle(parse_int(params[0]));
        } else if (family == "random-strong") {
            arity(2);
            d = gen_random_strong(parse_int(params[0]), parse_double(params[1]), seed);
        } else {
            throw InvalidArgument("unknown family '" + family + "'");
        }
    } catch (const std::logic_error& e) {  // std::stoi / std::stod
        throw InvalidArgument(std::string("bad parameter: ") + e.what());
    }
    const std::string text = serialize(*d);
    if (output.empty() || output == "-") {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::trunc);
        if (!out) throw InvalidArgument("cannot write '" + output + "'");
        out << text;
    }
    return exit_ok;
}

void print_campaign(const CampaignSpec& spec, const CampaignResult& r) {
    std::cout << "claim " << to_string(r.claim) << ", n=" << r.n << ", mode " << to_string(r.mode);
    if (r.mode == Mode::sample) std::cout << ", seed " << r.seed;
    else if (spec.shards > 1) std::cout << ", shard " << spec.shard << "/" << spec.shards;
    std::cout << '\n'
              << "  scanned          " << r.scanned << '\n'
              << "  strong           " << r.strong << '\n'
              << "  hypothesis hits  " << r.hypothesis_hits << '\n'
              << "  verified         " << r.verified << '\n'
              << "  exceptional      " << r.exceptional_hits << '\n'
              << "  counterexamples  " << r.counterexamples.size() << '\n'
              << "  complete         " << yes_no(r.complete) << '\n'
              << "  elapsed          " << r.elapsed_ms << " ms\n";
    for (std::size_t i = 0; i < r.exception_classes.size(); ++i) {
        const auto& cls = r.exception_classes[i];
        std::cout << "exception class " << i + 1 << " (" << cls.count << " labeled copies, first at index "
                  << cls.first_index << "):\n"
                  << cls.representative;
    }
    const char* label = r.claim == Claim::conj19 ? "conjecture candidate" : "counterexample";
    for (const auto& c : r.counterexamples) {
        std::cout << label << " at " << (r.mode == Mode::sample ? "offset " : "index ") << c.index << ": " << c.detail
                  << '\n'
                  << c.digraph;
    }
}

int cmd_verify(CampaignSpec spec, unsigned jobs, bool as_json) {
    try {
        validate(spec);
    } catch (const CapExceeded& e) {
        throw InvalidArgument(e.what());
    }
    RunOptions options;
    options.heartbeat = [](const CampaignResult& r) {
        std::cerr << "[" << r.elapsed_ms / 1000 << "s] scanned " << r.scanned << ", hits " << r.hypothesis_hits
                  << ", counterexamples " << r.counterexamples.size() << std::endl;
    };
    CampaignResult r = run_campaign_parallel(spec, jobs, options);
    if (as_json) {
        json j = to_json_value(r);
        if (r.claim == Claim::conj19) {
            for (auto& c : j["counterexamples"]) c["label"] = "conjecture candidate";
        }
        std::cout << j.dump(2) << '\n';
    } else {
        print_campaign(spec, r);
    }
    const bool failed = !r.counterexamples.empty() || r.exception_classes.size() > 1;
    return failed ? exit_failure : exit_ok;
}

int cmd_audit(bool as_json) {
    SharpnessReport report = audit_sharpness();
    if (as_json) {
        std::cout << to_json_value(report).dump(2) << '\n';
    } else {
        for (const auto& r : report.rows) {
            std::cout << std::left << std::setw(16) << r.family << std::setw(3) << r.parameter << " margin "
                      << std::setw(10) << margin_text(r.margin) << " hamiltonian " << std::setw(4) << yes_no(r.hamiltonian)
                      << " pre-hamiltonian " << std::setw(4) << yes_no(r.pre_hamiltonian) << " kstar " << std::setw(4)
                      << yes_no(r.kstar) << (r.passed ? "ok" : "MISMATCH") << '\n';
        }
    }
    return report.passed() ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Digraph Hamiltonicity laboratory"};
    app.require_subcommand(1);

    bool as_json = false;
    bool distinct_triples = false;
    std::string file;

    auto* check = app.add_subcommand("check", "Degree conditions and classification of a digraph file");
    check->add_option("file", file, "digraph file")->required();
    check->add_flag("--json", as_json, "JSON output");
    check->add_flag("--distinct-triples", distinct_triples, "A_k over pairwise-distinct triples only");

    auto* spectrum = app.add_subcommand("spectrum", "Cycle lengths present, with one witness each");
    spectrum->add_option("file", file, "digraph file")->required();
    spectrum->add_flag("--json", as_json, "JSON output");

    auto* bypass = app.add_subcommand("bypass", "Hamiltonian bypass witness or 'none'");
    bypass->add_option("file", file, "digraph file")->required();
    bypass->add_flag("--json", as_json, "JSON output");

    std::string family;
    std::vector<std::string> params;
    std::uint64_t gen_seed = 42;
    std::string output;
    auto* gen = app.add_subcommand("gen", "Write a named family member in canonical text format");
    gen->add_option("family", family, "kstar | kstar-minus-arc | two-cliques | cycle | random-strong")->required();
    gen->add_option("params", params, "family parameters");
    gen->add_option("--seed", gen_seed, "seed for random-strong");
    gen->add_option("-o,--output", output, "output file (default: standard output)");

    CampaignSpec spec;
    std::string claim_name;
    std::string mode_name = "exhaustive";
    std::string checkpoint;
    unsigned jobs = 1;
    auto* verify = app.add_subcommand("verify", "Replay a claim over a space of digraphs");
    verify->add_option("claim", claim_name, "thm15 | thm110 | conj19 | bypass_claim | lemma35 | lemma_suite")->required();
    verify->add_option("--n", spec.n, "order")->required();
    verify->add_option("--mode", mode_name, "exhaustive | sample | tournaments");
    verify->add_option("--shard", spec.shard, "shard index");
    verify->add_option("--shards", spec.shards, "shard count");
    verify->add_option("--samples", spec.samples, "samples (sample mode)");
    verify->add_option("--arc-prob", spec.arc_prob, "arc probability (sample mode)");
    verify->add_option("--seed", spec.seed, "seed (sample mode)");
    verify->add_option("--checkpoint", checkpoint, "checkpoint file; resumes when present");
    verify->add_option("--jobs", jobs, "worker threads for enumerated campaigns");
    verify->add_flag("--long-run", spec.long_run, "allow exhaustive order 6");
    verify->add_flag("--json", as_json, "JSON output");
    verify->add_flag("--distinct-triples", distinct_triples, "A_k over pairwise-distinct triples only");

    auto* audit = app.add_subcommand("audit", "Sharpness audit of the A0 bound");
    audit->add_flag("--json", as_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        const TripleReading reading = distinct_triples ? TripleReading::pairwise_distinct : default_triple_reading;
        if (*check) return cmd_check(file, reading, as_json);
        if (*spectrum) return cmd_spectrum(file, as_json);
        if (*bypass) return cmd_bypass(file, as_json);
        if (*gen) return cmd_gen(family, params, gen_seed, output);
        if (*audit) return cmd_audit(as_json);
        if (*verify) {
            auto claim = parse_claim(claim_name);
            auto mode = parse_mode(mode_name);
            if (!claim) throw InvalidArgument("unknown claim '" + claim_name + "'");
            if (!mode) throw InvalidArgument("unknown mode '" + mode_name + "'");
            spec.claim = *claim;
            spec.mode = *mode;
            spec.reading = reading;
            if (!checkpoint.empty()) spec.checkpoint_path = checkpoint;
            return cmd_verify(spec, jobs, as_json);
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const CheckpointError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const SamplingExhausted& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

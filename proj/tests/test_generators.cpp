#include <catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <thread>

#include "hamlab/hamlab.hpp"
#include "oracles.hpp"

using namespace hamlab;

namespace {

// Reference splitmix64, written out from the published algorithm.
struct ReferenceSplitMix {
    std::uint64_t x;
    std::uint64_t next() {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
};

}  // namespace

TEST_CASE("K*_{p,q}", "[generators]") {
    Digraph k22 = gen_kstar(2, 2);
    CHECK(k22.arc_count() == 8);
    for (Vertex v = 0; v < 4; ++v) CHECK(k22.degree(v) == 4);
    CHECK(gen_kstar(1, 1) == gen_directed_cycle(2));
    auto k33 = recognize_kstar(gen_kstar(3, 3));
    REQUIRE(k33);
    CHECK(k33->p == 3);
    CHECK(k33->q == 3);
    for (int p = 1; p <= 6; ++p) {
        for (int q = 1; q <= 6; ++q) {
            auto k = recognize_kstar(gen_kstar(p, q));
            REQUIRE(k);
            CHECK(k->p == std::min(p, q));
            CHECK(k->q == std::max(p, q));
            CHECK(gen_kstar(p, q).arc_count() == static_cast<std::size_t>(2 * p * q));
        }
    }
    CHECK_THROWS_AS(gen_kstar(0, 3), InvalidArgument);
    CHECK_THROWS_AS(gen_kstar(32, 33), InvalidArgument);
    CHECK(gen_kstar(32, 32).order() == 64);
}

TEST_CASE("K*_{p,q} minus an arc", "[generators]") {
    Digraph d = gen_kstar_minus_arc(3, 3);
    CHECK_FALSE(d.has_arc(0, 3));
    CHECK(d.has_arc(3, 0));
    CHECK(d.arc_count() == 17);
    CHECK(ak_margin(d) == AkMargin::bounded(-1));
    CHECK(hamiltonian_cycle(d));
    CHECK_FALSE(pre_hamiltonian_cycle(d));
    CHECK_FALSE(recognize_kstar(gen_kstar_minus_arc(2, 2)));
}

TEST_CASE("two cliques sharing a vertex", "[generators]") {
    Digraph d = gen_two_cliques(3);
    CHECK(d.order() == 5);
    CHECK(d.arc_count() == 12);
    CHECK(is_strong(d));
    CHECK_FALSE(hamiltonian_cycle(d));
    CHECK(ak_margin(d) == AkMargin::bounded(-1));
    CHECK_FALSE(meyniel(gen_two_cliques(2)).holds);
    CHECK_FALSE(adjacent(d, 1, 3));
    CHECK(adjacent(d, 1, 2));
    CHECK_THROWS_AS(gen_two_cliques(1), InvalidArgument);
    CHECK_THROWS_AS(gen_two_cliques(33), InvalidArgument);
}

TEST_CASE("directed cycles", "[generators]") {
    CHECK(cycle_spectrum(gen_directed_cycle(4)).present() == std::vector<int>{4});
    CHECK(ak_margin(gen_directed_cycle(4)) == AkMargin::bounded(-4));
    Digraph two = gen_directed_cycle(2);
    CHECK(two.arc_count() == 2);
    CHECK(is_strong(two));
    CHECK_THROWS_AS(gen_directed_cycle(1), InvalidArgument);
}

TEST_CASE("generated families round-trip through text", "[generators][io]") {
    std::vector<Digraph> family{gen_kstar(2, 5), gen_kstar_minus_arc(4, 4), gen_two_cliques(4), gen_directed_cycle(9),
                                gen_complete(6), gen_random_strong(8, 0.4, 3)};
    for (const Digraph& d : family) CHECK(parse_digraph(serialize(d)) == d);
}

TEST_CASE("splitmix64 follows the reference stream", "[generators][random]") {
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL, 1234567ULL, ~0ULL}) {
        SplitMix64 a(seed);
        ReferenceSplitMix b{seed};
        for (int i = 0; i < 1000; ++i) CHECK(a.next() == b.next());
        CHECK(a.draws() == 1000);
    }
    SplitMix64 r(1234567);
    CHECK(r.next() == 6457827717110365317ULL);
    CHECK(r.next() == 3203168211198807973ULL);
}

TEST_CASE("seeking repositions the stream", "[generators][random]") {
    SplitMix64 walk(99);
    std::vector<std::uint64_t> values;
    for (int i = 0; i < 200; ++i) values.push_back(walk.next());
    SplitMix64 jump(99);
    for (std::uint64_t offset : {150ULL, 0ULL, 199ULL, 17ULL}) {
        jump.seek(offset);
        CHECK(jump.draws() == offset);
        CHECK(jump.next() == values[offset]);
    }
}

TEST_CASE("probability thresholds", "[generators][random]") {
    CHECK(probability_threshold(0.5) == (std::uint64_t{1} << 63));
    CHECK(probability_threshold(0.25) == (std::uint64_t{1} << 62));
    CHECK_THROWS_AS(probability_threshold(0.0), InvalidArgument);
    CHECK_THROWS_AS(probability_threshold(1.0), InvalidArgument);
    CHECK_THROWS_AS(probability_threshold(-0.5), InvalidArgument);
}

TEST_CASE("sampled arcs follow the row-major draw order", "[generators][random]") {
    const std::uint64_t threshold = probability_threshold(0.3);
    SplitMix64 rng(5);
    Digraph d = sample_digraph(6, threshold, rng);
    ReferenceSplitMix ref{5};
    for (Vertex u = 0; u < 6; ++u) {
        for (Vertex v = 0; v < 6; ++v) {
            if (u == v) continue;
            CHECK(d.has_arc(u, v) == (ref.next() < threshold));
        }
    }
    CHECK(rng.draws() == 30);
}

TEST_CASE("random strong digraphs", "[generators][random]") {
    CHECK(gen_random_strong(5, 0.5, 42) == gen_random_strong(5, 0.5, 42));
    CHECK(serialize(gen_random_strong(7, 0.3, 9)) == serialize(gen_random_strong(7, 0.3, 9)));
    CHECK(gen_random_strong(2, 0.99, 7) == gen_directed_cycle(2));
    CHECK_THROWS_AS(gen_random_strong(5, 0.001, 1), SamplingExhausted);
    CHECK_THROWS_AS(gen_random_strong(1, 0.5, 1), InvalidArgument);
    CHECK_THROWS_AS(gen_random_strong(5, 1.0, 1), InvalidArgument);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Digraph d = gen_random_strong(2 + static_cast<int>(seed % 9), 0.35, seed);
        CHECK(oracle::strong(d));
    }
}

TEST_CASE("random generation is identical across threads", "[generators][random]") {
    std::vector<std::string> threaded(4);
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([&, t] { threaded[t] = serialize(gen_random_strong(8, 0.4, 2024)); });
    }
    for (auto& w : workers) w.join();
    for (const auto& s : threaded) CHECK(s == serialize(gen_random_strong(8, 0.4, 2024)));
}

TEST_CASE("labeled enumeration", "[generators][enumeration]") {
    LabeledEnumerator all(3, 0, 1);
    CHECK(all.total() == 64);
    int count = 0;
    int strong = 0;
    int strong_oracle = 0;
    std::set<std::string> seen;
    while (auto item = all.next()) {
        CHECK(item->first == static_cast<std::uint64_t>(count));
        CHECK(index_of(item->second) == item->first);
        seen.insert(serialize(item->second));
        strong += is_strong(item->second);
        strong_oracle += oracle::strong(item->second);
        ++count;
    }
    CHECK(count == 64);
    CHECK(seen.size() == 64);
    CHECK(strong == strong_oracle);
    CHECK(strong == 18);
    CHECK(all.done());

    // Bit 0 is the pair (0,1), bit 1 is (0,2), bit 2 is (1,0).
    CHECK(digraph_from_index(3, 1) == Digraph::build(3, {{0, 1}}));
    CHECK(digraph_from_index(3, 4) == Digraph::build(3, {{1, 0}}));
    CHECK(digraph_from_index(3, 63) == gen_complete(3));
}

TEST_CASE("strong digraph counts on four vertices", "[generators][enumeration]") {
    LabeledEnumerator all(4, 0, 1);
    int strong = 0;
    int strong_oracle = 0;
    while (auto item = all.next()) {
        strong += is_strong(item->second);
        strong_oracle += oracle::strong(item->second);
    }
    CHECK(strong == strong_oracle);
    CHECK(strong == 1606);
}

TEST_CASE("shard streams partition the index space", "[generators][enumeration]") {
    std::vector<int> hits(4096, 0);
    for (std::uint64_t shard = 0; shard < 4; ++shard) {
        LabeledEnumerator part(4, shard, 4);
        std::uint64_t previous = 0;
        bool first = true;
        while (auto item = part.next()) {
            CHECK(item->first % 4 == shard);
            if (!first) CHECK(item->first > previous);
            previous = item->first;
            first = false;
            ++hits[item->first];
        }
    }
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));

    for (std::uint64_t shards : {3ULL, 7ULL}) {
        std::uint64_t total = 0;
        for (std::uint64_t shard = 0; shard < shards; ++shard) {
            LabeledEnumerator part(4, shard, shards);
            while (part.next()) ++total;
        }
        CHECK(total == 4096);
    }
}

TEST_CASE("enumeration resumes from a cursor", "[generators][enumeration]") {
    LabeledEnumerator a(4, 1, 3);
    for (int i = 0; i < 100; ++i) a.next();
    LabeledEnumerator b(a.cursor());
    LabeledEnumerator c(4, 1, 3);
    for (int i = 0; i < 100; ++i) c.next();
    while (auto item = b.next()) {
        auto other = c.next();
        REQUIRE(other);
        CHECK(item->first == other->first);
    }
    CHECK_FALSE(c.next());
}

TEST_CASE("enumeration bounds", "[generators][enumeration]") {
    CHECK_THROWS_AS(LabeledEnumerator(7, 0, 1), CapExceeded);
    CHECK_NOTHROW(LabeledEnumerator(6, 0, 1));
    CHECK_THROWS_AS(LabeledEnumerator(4, 2, 2), InvalidArgument);
    CHECK_THROWS_AS(LabeledEnumerator(4, 0, 0), InvalidArgument);
    CHECK_THROWS_AS(LabeledEnumerator(EnumerationCursor{4, 5, 0, 2}), InvalidArgument);
    CHECK_THROWS_AS(TournamentEnumerator(9), CapExceeded);
}

TEST_CASE("tournament enumeration", "[generators][enumeration]") {
    TournamentEnumerator three(3);
    int count = 0;
    int strong = 0;
    int strong_oracle = 0;
    while (auto item = three.next()) {
        CHECK(is_tournament(item->second));
        strong += is_strong(item->second);
        strong_oracle += oracle::strong(item->second);
        ++count;
    }
    CHECK(count == 8);
    CHECK(strong == strong_oracle);
    CHECK(strong == 2);

    TournamentEnumerator five(5);
    std::set<std::string> seen;
    while (auto item = five.next()) {
        CHECK(is_tournament(item->second));
        seen.insert(serialize(item->second));
    }
    CHECK(seen.size() == 1024);

    CHECK(tournament_from_index(3, 0) == Digraph::build(3, {{1, 0}, {2, 0}, {2, 1}}));
    CHECK(tournament_from_index(3, 7) == Digraph::build(3, {{0, 1}, {0, 2}, {1, 2}}));
    CHECK_FALSE(is_tournament(gen_complete(3)));
}

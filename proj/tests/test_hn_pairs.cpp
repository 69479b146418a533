#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "cuspcal/hn_pairs.hpp"

using namespace cuspcal;

namespace {

CharPairSeq seq(std::vector<CharPair> pairs) { return CharPairSeq{std::move(pairs)}; }

CharPairSeq semi_ordinary(long long k) { return seq({{2 * k + 3, 2}}); }

CharPairSeq degree11_pairs() {
    CharPairSeq s;
    s.pairs.push_back({9, 6});
    for (int i = 0; i < 8; ++i)
        s.pairs.push_back({3, 3});
    s.pairs.push_back({3, 1});
    return s;
}

std::vector<int> expected_semi_ordinary_chain(long long k) {
    std::vector<int> w(static_cast<std::size_t>(k), 2);
    w.push_back(3);
    w.push_back(1);
    w.push_back(2);
    return w;
}

CharPairSeq random_valid_seq(std::mt19937& rng, long long c_max = 60, int h_max = 3) {
    std::uniform_int_distribution<long long> cdist(2, c_max);
    CharPairSeq s;
    long long c = cdist(rng);
    for (int i = 0; i < h_max; ++i) {
        std::uniform_int_distribution<long long> pdist(1, c);
        long long p = pdist(rng);
        if (i == h_max - 1) {
            while (std::gcd(c, p) != 1)
                p = pdist(rng);
        }
        s.pairs.push_back({c, p});
        long long g = std::gcd(c, p);
        if (g == 1)
            break;
        c = g;
    }
    return s;
}

bool chain_matches(const DualGraph& g, std::vector<int> expect) {
    auto w = as_chain(g);
    if (!w)
        return false;
    if (w->weights == expect)
        return true;
    std::reverse(expect.begin(), expect.end());
    return w->weights == expect;
}

} // namespace

TEST_CASE("mult_sequence pinned values") {
    CHECK(mult_sequence({3, 2}) == std::vector<long long>{2, 1, 1});
    CHECK(mult_sequence({5, 5}) == std::vector<long long>{5});
    CHECK(mult_sequence({7, 5}) == std::vector<long long>{5, 2, 2, 1, 1});
    CHECK(mult_sequence({1, 0}).empty());
    CHECK_THROWS_AS(mult_sequence({3, 0}), PairSequenceError);
    CHECK_THROWS_AS(mult_sequence({2, 3}), PairSequenceError);
}

TEST_CASE("mult_sequence identities on random pairs") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long long> cdist(1, 200);
    for (int trial = 0; trial < 500; ++trial) {
        long long c = cdist(rng);
        std::uniform_int_distribution<long long> pdist(1, c);
        long long p = pdist(rng);
        auto m = mult_sequence({c, p});
        BigInt sum = 0, sq = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            sum += m[i];
            sq += BigInt(m[i]) * m[i];
            if (i > 0)
                CHECK(m[i] <= m[i - 1]);
        }
        CHECK(sum == c + p - std::gcd(c, p));
        CHECK(sq == BigInt(c) * p);
    }
}

TEST_CASE("multiplicity profile blocks") {
    auto prof = multiplicity_profile(seq({{3, 2}}));
    CHECK(prof.blocks == std::vector<std::vector<long long>>{{2, 1, 1}});

    CHECK(multiplicity_profile(seq({{1, 0}})).blocks.empty());

    auto p3 = multiplicity_profile(seq({{9, 6}, {3, 3}, {3, 1}}));
    CHECK(p3.blocks == std::vector<std::vector<long long>>{{6, 3, 3}, {3}, {1, 1, 1}});
    // block sums c_i + p_i - gcd(c_i, p_i): 12, 3, 3
    long long sums[3] = {0, 0, 0};
    for (int b = 0; b < 3; ++b)
        for (long long m : p3.blocks[b])
            sums[b] += m;
    CHECK(sums[0] == 9 + 6 - 3);
    CHECK(sums[1] == 3 + 3 - 3);
    CHECK(sums[2] == 3 + 1 - 1);
}

TEST_CASE("pair sequence validation") {
    CHECK_NOTHROW(validate(seq({{1, 0}})));
    CHECK_NOTHROW(validate(seq({{3, 2}})));
    CHECK_NOTHROW(validate(degree11_pairs()));
    CHECK_THROWS_AS(validate(seq({})), PairSequenceError);
    CHECK_THROWS_AS(validate(seq({{4, 2}})), PairSequenceError);          // ends with gcd 2
    CHECK_THROWS_AS(validate(seq({{4, 2}, {3, 1}})), PairSequenceError);  // broken gcd chain
    CHECK_THROWS_AS(validate(seq({{3, 2}, {1, 0}})), PairSequenceError);  // (1,0) not alone
}

TEST_CASE("resolution graph of the ordinary cusp") {
    MarkedResolution m = build_resolution_graph(seq({{3, 2}}));
    CHECK(chain_matches(m.graph, {3, 1, 2}));
    CHECK(m.mu == 2);
    CHECK(m.graph.component(m.minus_one).self_int == -1);
}

TEST_CASE("resolution graphs of semi-ordinary cusps") {
    for (long long k = 0; k <= 5; ++k) {
        MarkedResolution m = build_resolution_graph(semi_ordinary(k));
        CHECK(chain_matches(m.graph, expected_semi_ordinary_chain(k)));
        CHECK(m.mu == 2);
        CHECK(contracts_to_smooth_point(m.graph));
        CHECK(is_negative_definite(m.graph));
        CHECK(graph_type(m) == ChainType{{1}});
    }
}

TEST_CASE("resolution graph of the (1,1) germ") {
    MarkedResolution m = build_resolution_graph(seq({{1, 1}}));
    CHECK(m.graph.order() == 1);
    CHECK(m.mu == 1);
    CHECK(m.graph.component(m.minus_one).self_int == -1);
    CHECK_THROWS_AS(build_resolution_graph(seq({{1, 0}})), PairSequenceError);
}

TEST_CASE("resolution graph of the degree-11 cusp") {
    MarkedResolution m = build_resolution_graph(degree11_pairs());
    CHECK(m.graph.order() == 14);
    CHECK(m.mu == 6);
    CHECK(contracts_to_smooth_point(m.graph));
    CHECK(is_negative_definite(m.graph));
    CHECK(graph_type(m) == ChainType{{1, 2}});
}

TEST_CASE("random resolutions are contractible and negative definite") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 100; ++trial) {
        CharPairSeq s = random_valid_seq(rng, 40);
        if (is_smooth_germ(s))
            continue;
        MarkedResolution m = build_resolution_graph(s);
        CHECK(contracts_to_smooth_point(m.graph));
        CHECK(is_negative_definite(m.graph));
    }
}

TEST_CASE("lemma22_deltas pinned values") {
    CHECK(lemma22_deltas(seq({{3, 2}}), 1) == std::pair<BigInt, BigInt>{4, 6});
    CHECK(lemma22_deltas(seq({{1, 0}}), 5) == std::pair<BigInt, BigInt>{0, 0});
    CHECK(lemma22_deltas(degree11_pairs(), 1) == std::pair<BigInt, BigInt>{39, 129});
}

TEST_CASE("lemma22_deltas equals the blowup simulation") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 120; ++trial) {
        CharPairSeq s = random_valid_seq(rng);
        for (long long t : {1, 2, 3})
            CHECK(lemma22_deltas(s, t) == germ_blowup_deltas(s, t));
    }
}

TEST_CASE("graph types of pinned chains") {
    CHECK(graph_type(mark_chain(Chain{{3, 1, 2}})) == ChainType{{1}});
    CHECK(graph_type(mark_chain(Chain{{2, 2, 4, 1, 2, 2}})) == ChainType{{2}});
    CHECK(graph_type(mark_chain(Chain{{2, 2, 2, 1}})) == ChainType{});
    CHECK(graph_type(MarkedResolution{DualGraph{}, -1, 0}) == ChainType{});
}

TEST_CASE("graph type rejects non-towers") {
    DualGraph no_minus_one = DualGraph::from_chain(Chain{{2}});
    CHECK_THROWS_AS(graph_type(MarkedResolution{no_minus_one, 0, 1}), TowerError);
    DualGraph two = DualGraph::from_chain(Chain{{1, 3, 1}});
    CHECK_THROWS_AS(graph_type(MarkedResolution{two, 0, 1}), TowerError);
}

TEST_CASE("enumerate_chains reproduces the small tables") {
    auto as_set = [](const std::vector<Chain>& chains) {
        std::set<std::vector<int>> out;
        for (const Chain& c : chains)
            out.insert(c.weights);
        return out;
    };
    CHECK(as_set(enumerate_chains(0, 2)) ==
          std::set<std::vector<int>>{{1}, {2, 1}, {2, 2, 1}});
    CHECK(as_set(enumerate_chains(2, 0)) ==
          std::set<std::vector<int>>{{4, 1, 2, 2}, {3, 2, 1, 3}});
    CHECK(as_set(enumerate_chains(4, 0)) ==
          std::set<std::vector<int>>{{6, 1, 2, 2, 2, 2},
                                     {5, 2, 1, 3, 2, 2},
                                     {4, 3, 1, 2, 3, 2},
                                     {4, 2, 2, 1, 4, 2},
                                     {3, 4, 1, 2, 2, 3},
                                     {3, 3, 2, 1, 3, 3},
                                     {3, 2, 3, 1, 2, 4},
                                     {3, 2, 2, 2, 1, 5}});
    CHECK_THROWS_AS(enumerate_chains(7, 0), DomainError);
}

TEST_CASE("enumerated chains satisfy the type and Fibonacci laws") {
    for (int r = 0; r <= 4; ++r) {
        for (const Chain& c : enumerate_chains(r, 2)) {
            MarkedResolution m = mark_chain(c);
            CHECK(contracts_to_smooth_point(m.graph));
            std::vector<int> rest;
            for (const Component& comp : m.graph.components())
                if (comp.id != m.minus_one)
                    rest.push_back(comp.id);
            CHECK(k_dot(m.graph, rest) == r);
            CHECK(fibonacci_bound_holds(m));
        }
    }
}

TEST_CASE("fibonacci bound index range") {
    DualGraph flat;
    flat.add_component(0); // K.Q = -2, index would be 1
    CHECK_THROWS_AS(fibonacci_bound_holds(MarkedResolution{flat, 0, 1}), DomainError);
}

TEST_CASE("fibonacci bound tight cases") {
    MarkedResolution one = mark_chain(Chain{{1}});
    CHECK(one.mu == 1);
    CHECK(k_dot(one.graph) == -1);
    CHECK(one.mu == fibonacci(-1 + 3));

    MarkedResolution m312 = mark_chain(Chain{{3, 1, 2}});
    CHECK(m312.mu == 2);
    CHECK(m312.mu == fibonacci(k_dot(m312.graph) + 3));

    MarkedResolution m4122 = mark_chain(Chain{{4, 1, 2, 2}});
    CHECK(m4122.mu == 3);
    CHECK(m4122.mu == fibonacci(k_dot(m4122.graph) + 3));
}

TEST_CASE("type is stable under gcd-repetition padding") {
    // Exhaustive over h <= 2 sequences with entries <= 12: inserting (g,g)
    // blocks at the gcd seam or appending (1,1) blocks never changes the type.
    for (long long c1 = 2; c1 <= 12; ++c1) {
        for (long long p1 = 1; p1 <= c1; ++p1) {
            long long g = std::gcd(c1, p1);
            std::vector<CharPairSeq> bases;
            if (g == 1) {
                bases.push_back(seq({{c1, p1}}));
            } else {
                for (long long p2 = 1; p2 <= g; ++p2)
                    if (std::gcd(g, p2) == 1)
                        bases.push_back(seq({{c1, p1}, {g, p2}}));
            }
            for (const CharPairSeq& base : bases) {
                ChainType t0 = graph_type(build_resolution_graph(base));
                for (int reps = 1; reps <= 2; ++reps) {
                    CharPairSeq padded;
                    padded.pairs.push_back(base.pairs[0]);
                    long long gg = std::gcd(base.pairs[0].c, base.pairs[0].p);
                    for (int i = 0; i < reps; ++i)
                        padded.pairs.push_back({gg, gg});
                    for (std::size_t i = 1; i < base.pairs.size(); ++i)
                        padded.pairs.push_back(base.pairs[i]);
                    if (gg > 1)
                        CHECK(graph_type(build_resolution_graph(padded)) == t0);

                    CharPairSeq tail = base;
                    for (int i = 0; i < reps; ++i)
                        tail.pairs.push_back({1, 1});
                    CHECK(graph_type(build_resolution_graph(tail)) == t0);
                }
            }
        }
    }
}

TEST_CASE("characteristic pairs read back from chains") {
    CHECK(char_pairs_of(Chain{{3, 1, 2}}) == seq({{3, 2}}));
    CHECK(char_pairs_of(Chain{{4, 2, 1, 3, 2}}) == seq({{7, 5}}));
    CHECK(char_pairs_of(Chain{{2, 2, 1}}) == seq({{1, 1}, {1, 1}, {1, 1}}));
}

TEST_CASE("round trip through char_pairs_of on the chain tables") {
    for (int r = 0; r <= 4; ++r) {
        for (const Chain& c : enumerate_chains(r, 3)) {
            CharPairSeq pairs = char_pairs_of(c);
            MarkedResolution rebuilt = build_resolution_graph(pairs);
            CHECK(chain_matches(rebuilt.graph, c.weights));
            CHECK(rebuilt.mu == mark_chain(c).mu);
        }
    }
}

TEST_CASE("weak resolution of a semi-ordinary cusp by blowdown") {
    // Contract the two multiplicity-one blowups of [(2)_k,3,1,2] with the
    // curve attached: the exceptional image is [1,(2)_k] and its (-1)-curve
    // ends up tangent to the curve.
    for (long long k = 0; k <= 3; ++k) {
        MarkedResolution m = build_resolution_graph(semi_ordinary(k));
        DualGraph d = m.graph;
        int e = d.add_component(-5, 0, "E");
        d.add_edge(m.minus_one, e, 1);

        d = blowdown(d, m.minus_one);
        int next = -1;
        for (const Component& c : d.components())
            if (c.id != e && c.self_int == -1)
                next = c.id;
        REQUIRE(next >= 0);
        d = blowdown(d, next);

        int minus_one = -1;
        std::vector<int> weights;
        for (const Component& c : d.components()) {
            if (c.id == e)
                continue;
            CHECK(c.genus_defect == 0);
            weights.push_back(-c.self_int);
            if (c.self_int == -1)
                minus_one = c.id;
        }
        std::sort(weights.begin(), weights.end());
        std::vector<int> expected{1};
        expected.insert(expected.end(), static_cast<std::size_t>(k), 2);
        CHECK(weights == expected);
        REQUIRE(minus_one >= 0);
        CHECK(d.edge_mult(minus_one, e) == 2); // tangency
        CHECK(d.component(e).self_int == -3);  // touched twice
    }
}

TEST_CASE("first branch of small towers") {
    MarkedResolution m = build_resolution_graph(seq({{3, 2}}));
    CHECK(first_branch(m).size() == 3);

    MarkedResolution big = build_resolution_graph(degree11_pairs());
    std::vector<int> branch = first_branch(big);
    CHECK(branch == std::vector<int>{0, 1, 2});

    MarkedResolution tip = build_resolution_graph(seq({{1, 1}}));
    CHECK_THROWS_AS(first_branch(tip), DomainError);
}

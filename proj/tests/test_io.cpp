#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "cuspcal/io.hpp"

using namespace cuspcal;

TEST_CASE("chain shorthand expansion") {
    CHECK(parse_chain_shorthand("[(2)_3,3,1,2]").weights ==
          std::vector<int>{2, 2, 2, 3, 1, 2});
    CHECK(parse_chain_shorthand("[5,(2)_3]").weights == std::vector<int>{5, 2, 2, 2});
    CHECK(parse_chain_shorthand("[3,1,2]").weights == std::vector<int>{3, 1, 2});
    CHECK(parse_chain_shorthand("[]").weights.empty());
    CHECK(parse_chain_shorthand("[(2)_0,4]").weights == std::vector<int>{4});
    CHECK(parse_chain_shorthand(" [ 2 , (3)_{2} ] ").weights == std::vector<int>{2, 3, 3});
}

TEST_CASE("chain shorthand deletion convention") {
    CHECK(parse_chain_shorthand("[2,2,1,4,(2)_{-1}]").weights == std::vector<int>{2, 2, 1});
    CHECK(parse_chain_shorthand("[3,1,2,(2)_{-1},(2)_2]").weights ==
          std::vector<int>{3, 1, 2, 2});
    CHECK_THROWS_AS(parse_chain_shorthand("[(2)_{-1}]"), DomainError);
    CHECK_THROWS_AS(parse_chain_shorthand("[(2)_{-2}]"), DomainError);
}

TEST_CASE("chain shorthand rejects malformed input") {
    CHECK_THROWS_AS(parse_chain_shorthand("3,1,2"), DomainError);
    CHECK_THROWS_AS(parse_chain_shorthand("[3,1,2"), DomainError);
    CHECK_THROWS_AS(parse_chain_shorthand("[3,,2]"), DomainError);
    CHECK_THROWS_AS(parse_chain_shorthand("[0]"), DomainError);
    CHECK_THROWS_AS(parse_chain_shorthand("[3]x"), DomainError);
}

TEST_CASE("graph documents round trip") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> ncomp(0, 7);
    std::uniform_int_distribution<int> self(-6, 2);
    std::uniform_int_distribution<int> mult(1, 3);
    std::uniform_int_distribution<int> genus(0, 2);
    for (int trial = 0; trial < 50; ++trial) {
        DualGraph g;
        int n = ncomp(rng);
        for (int i = 0; i < n; ++i)
            g.add_component(self(rng), genus(rng), i % 3 == 0 ? "C" + std::to_string(i) : "");
        for (int i = 1; i < n; ++i) {
            std::uniform_int_distribution<int> prev(0, i - 1);
            g.add_edge(prev(rng), i, mult(rng));
        }
        CHECK(graph_from_json(graph_to_json(g)) == g);
    }
}

TEST_CASE("graph document validation") {
    CHECK_THROWS_AS(graph_from_json(Json::parse("{\"nodes\":[]}")), DomainError);
    Json dup = Json::parse(R"({"nodes":[{"id":0,"selfInt":-1},{"id":0,"selfInt":-2}],"edges":[]})");
    CHECK_THROWS_AS(graph_from_json(dup), DomainError);
    Json loop = Json::parse(R"({"nodes":[{"id":0,"selfInt":-1}],"edges":[{"a":0,"b":0,"mult":1}]})");
    CHECK_THROWS_AS(graph_from_json(loop), DomainError);
}

TEST_CASE("pair sequence and candidate round trips") {
    CharPairSeq s{{{9, 6}, {3, 3}, {3, 1}}};
    CHECK(pairs_from_json(pairs_to_json(s)) == s);

    CurveCandidate cand;
    cand.degree = 11;
    cand.gamma = 8;
    cand.cusps.push_back({s, 1});
    Json j = candidate_to_json(cand);
    CurveCandidate back = candidate_from_json(j);
    CHECK(back.degree == cand.degree);
    CHECK(back.gamma == cand.gamma);
    REQUIRE(back.cusps.size() == 1);
    CHECK(back.cusps[0].pairs == s);
    CHECK(back.cusps[0].rho == 1);
}

TEST_CASE("exact scalar encodings") {
    CHECK(bigint_to_json(BigInt(42)) == Json(42));
    BigInt big("123456789012345678901234567890");
    CHECK(bigint_to_json(big) == Json("123456789012345678901234567890"));
    CHECK(rational_to_string(Rational(-2, 3)) == "-2/3");
    CHECK(rational_from_string("-2/3") == Rational(-2, 3));
    CHECK(rational_from_string("7") == Rational(7));
    CHECK_THROWS_AS(rational_from_string("1/0"), DomainError);
    CHECK_THROWS_AS(rational_from_string("x/2"), DomainError);
}

TEST_CASE("type rendering") {
    CHECK(type_to_string(ChainType{}) == "(0)");
    CHECK(type_to_string(ChainType{{1}}) == "(1)");
    CHECK(type_to_string(ChainType{{1, 2}}) == "(1,2)");
}

TEST_CASE("dot output") {
    DualGraph g = DualGraph::from_chain(Chain{{3, 1, 2}});
    std::string dot = emit_dot(g);
    CHECK(dot.find("graph dual {") == 0);
    CHECK(dot.find("n0 [label=\"-3\"]") != std::string::npos);
    CHECK(dot.find("n0 -- n1") != std::string::npos);
    CHECK(dot.find("n1 -- n2") != std::string::npos);
    CHECK(dot == emit_dot(g));

    DualGraph tangent;
    tangent.add_component(-2);
    tangent.add_component(-3);
    tangent.add_edge(0, 1, 2);
    CHECK(emit_dot(tangent).find("[label=\"2\"]") != std::string::npos);
}

TEST_CASE("chain formatting") {
    CHECK(format_chain(Chain{{2, 2, 3, 1, 2}}) == "[2,2,3,1,2]");
    CHECK(format_chain(Chain{}) == "[]");
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ccn/generators.hpp"
#include "ccn/graph6.hpp"

using namespace ccn;

TEST_CASE("graph6 fixtures") {
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_decode("@") == Graph(1));

    // single edge on two vertices
    CHECK(graph6_encode(path(2)) == "A_");
    CHECK(graph6_decode("A_") == path(2));

    // K4: six upper-triangle bits all set
    CHECK(graph6_encode(complete(4)) == "C~");

    // P4 with edges 01,12,23: column-major bits 101001
    CHECK(graph6_encode(path(4)) == "Ch");

    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_decode("?") == Graph(0));
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(graph6_decode(""), ParseError);
    CHECK_THROWS_AS(graph6_decode("A"), ParseError);  // truncated record

    try {
        graph6_decode("A_~");
        FAIL("expected trailing-bytes error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 2);
    }

    try {
        graph6_decode("~??");  // multi-byte size escape
        FAIL("expected multi-byte rejection");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 0);
    }

    try {
        graph6_decode(std::string("A") + char(30));  // data byte below 63
        FAIL("expected out-of-range error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }

    try {
        graph6_decode(std::string(1, char(20)));  // size byte below 63
        FAIL("expected out-of-range error");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 0);
    }

    // nonzero padding bits: n=2 needs one data byte with only the top bit used
    CHECK_THROWS_AS(graph6_decode("A~"), ParseError);
}

TEST_CASE("graph6 round-trip") {
    CHECK(graph6_decode(graph6_encode(Graph(0))) == Graph(0));
    for (int n = 1; n <= 4; ++n) {
        enumerate_graphs(n, {}, [&](const Graph& g) {
            CHECK(graph6_decode(graph6_encode(g)) == g);
        });
    }
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        int n = 5 + static_cast<int>(rng() % 4);
        Graph g = random_graph(n, 0.5, rng);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
}

TEST_CASE("edge list text format") {
    Graph g = parse_edge_list_text("4\n0 1\n1 2\n2 3\n");
    CHECK(g == path(4));
    CHECK(parse_edge_list_text("1") == Graph(1));
    CHECK_THROWS_AS(parse_edge_list_text(""), Error);
    CHECK_THROWS_AS(parse_edge_list_text("3\n0"), Error);
    CHECK_THROWS_AS(parse_edge_list_text("3\n0 5"), Error);
    CHECK_THROWS_AS(parse_edge_list_text("3\n0 1 x"), Error);
}

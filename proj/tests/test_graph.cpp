#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "ccn/connectivity.hpp"
#include "ccn/domination.hpp"
#include "ccn/generators.hpp"
#include "ccn/graph.hpp"
#include "ccn/vertex_set.hpp"

using namespace ccn;

TEST_CASE("vertex set basics") {
    VertexSet s = VertexSet::of({0, 3, 5});
    CHECK(s.count() == 3);
    CHECK(s.contains(3));
    CHECK_FALSE(s.contains(1));
    CHECK(s.lowest() == 0);
    CHECK(s.without(0).lowest() == 3);
    CHECK((s | VertexSet::single(1)) == VertexSet::of({0, 1, 3, 5}));
    CHECK((s & VertexSet::of({3, 4})) == VertexSet::single(3));
    CHECK((s - VertexSet::single(5)) == VertexSet::of({0, 3}));
    CHECK(VertexSet::first_n(4) == VertexSet::of({0, 1, 2, 3}));
    CHECK(VertexSet::of({2, 4}).is_subset_of(VertexSet::first_n(5)));
    CHECK(s.to_vector() == std::vector<int>{0, 3, 5});

    int sum = 0;
    for (int v : s) sum += v;
    CHECK(sum == 8);
}

TEST_CASE("graph construction invariants") {
    Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 0));  // symmetric
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.degree(0) == 2);
    CHECK_THROWS_AS(g.add_edge(1, 1), Error);
    CHECK_THROWS_AS(g.add_edge(0, 7), Error);
    CHECK_THROWS_AS(Graph(64), Error);

    g.add_edge(0, 1);  // duplicate is a no-op
    CHECK(g.edge_count() == 4);

    int popcount_sum = 0;
    for (int v = 0; v < g.order(); ++v) popcount_sum += g.degree(v);
    CHECK(popcount_sum == 2 * g.edge_count());
}

TEST_CASE("is_connected") {
    CHECK(is_connected(cycle(4)));
    Graph two_edges(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(is_connected(two_edges));
    CHECK(is_connected(Graph(1)));   // K1
    CHECK_FALSE(is_connected(Graph(0)));  // empty graph convention
    CHECK_FALSE(is_connected(Graph(2)));
}

TEST_CASE("induced_is_connected") {
    Graph c5 = cycle(5);
    CHECK(induced_is_connected(c5, VertexSet::of({0, 1, 2})));
    CHECK_FALSE(induced_is_connected(c5, VertexSet::of({0, 2})));
    CHECK_THROWS_AS(induced_is_connected(c5, VertexSet{}), Error);

    Graph k4 = complete(4);
    for (std::uint64_t mask = 1; mask < 16; ++mask)
        CHECK(induced_is_connected(k4, VertexSet::from_bits(mask)));
}

TEST_CASE("is_dominating") {
    Graph c4 = cycle(4);
    CHECK_FALSE(is_dominating(c4, VertexSet::single(0)));  // vertex 2 uncovered
    CHECK(is_dominating(star(3), VertexSet::single(0)));   // full vertex dominates
    // C5 with {v0, v2}: v1 sees both, v3 sees v2, v4 sees v0
    CHECK(is_dominating(cycle(5), VertexSet::of({0, 2})));
}

TEST_CASE("domination is monotone") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = random_graph(n, 0.4, rng);
        VertexSet s = VertexSet::from_bits(rng() & g.vertices().bits());
        if (!is_dominating(g, s)) continue;
        VertexSet t = s | VertexSet::from_bits(rng() & g.vertices().bits());
        CHECK(is_dominating(g, t));
    }
}

TEST_CASE("is_cds") {
    Graph c5 = cycle(5);
    CHECK(is_cds(c5, VertexSet::of({0, 1, 2})));
    CHECK_FALSE(is_cds(c5, VertexSet::of({0, 2})));
    CHECK(is_cds(path(4), VertexSet::of({1, 2})));
    CHECK_FALSE(is_cds(c5, VertexSet{}));
}

TEST_CASE("is_cds of the whole vertex set equals connectivity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0.35, rng);
        CHECK(is_cds(g, g.vertices()) == is_connected(g));
    }
}

TEST_CASE("full_vertices") {
    CHECK(full_vertices(complete(4)) == VertexSet::first_n(4));
    CHECK(full_vertices(cycle(5)).empty());
    CHECK(full_vertices(star(4)) == VertexSet::single(0));
    CHECK(full_vertices(Graph(1)) == VertexSet::single(0));  // K1's vertex is full
}

TEST_CASE("cut_vertices") {
    CHECK(cut_vertices(path(4)) == VertexSet::of({1, 2}));
    CHECK(cut_vertices(cycle(6)).empty());
    CHECK(cut_vertices(c4_plus_e()) == VertexSet::single(0));
    CHECK_THROWS_AS(cut_vertices(Graph(3)), Error);
    CHECK(cut_vertices(Graph(1)).empty());
}

TEST_CASE("cut vertices: lowlink agrees with deletion checks") {
    // exhaustive over all connected graphs on up to 5 vertices
    for (int n = 1; n <= 5; ++n) {
        enumerate_graphs(n, {.connected = true}, [&](const Graph& g) {
            CHECK(cut_vertices(g) == cut_vertices_by_deletion(g));
        });
    }
    // random samples up to 8 vertices
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        Graph g = random_graph_matching(n, 0.3, {.connected = true}, rng);
        CHECK(cut_vertices(g) == cut_vertices_by_deletion(g));
    }
}

TEST_CASE("minimal_cds") {
    CHECK(minimal_cds(cycle(5), VertexSet::first_n(5)) == VertexSet::of({0, 1, 2}));
    CHECK(minimal_cds(complete(4), VertexSet::first_n(4)) == VertexSet::single(0));
    CHECK(minimal_cds(path(4), VertexSet::first_n(4)) == VertexSet::of({1, 2}));
    CHECK_THROWS_AS(minimal_cds(cycle(5), VertexSet::of({0, 2})), Error);
}

TEST_CASE("minimal_cds output is minimal") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        Graph g = random_graph_matching(n, 0.45, {.connected = true}, rng);
        VertexSet x = minimal_cds(g, g.vertices());
        CHECK(is_cds(g, x));
        for (int v : x) CHECK_FALSE(is_cds(g, x.without(v)));
    }
}

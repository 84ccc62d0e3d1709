#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ccn/canonical.hpp"
#include "ccn/connectivity.hpp"
#include "ccn/generators.hpp"

using namespace ccn;

TEST_CASE("family constructors") {
    Graph c4 = cycle(4);
    CHECK(c4.edge_count() == 4);
    CHECK(c4.has_edge(0, 1));
    CHECK(c4.has_edge(3, 0));
    CHECK_FALSE(c4.has_edge(0, 2));

    Graph s3 = star(3);
    CHECK(s3.order() == 4);
    CHECK(s3.degree(0) == 3);

    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK_THROWS_AS(cycle(2), Error);
    CHECK_THROWS_AS(star(0), Error);
    CHECK_THROWS_AS(complete(0), Error);

    Graph fg1 = family_g(1);
    CHECK(fg1.order() == 4);
    CHECK(full_vertices(fg1) == VertexSet::single(0));
    CHECK(family_g(2).degree(0) == 4);
    CHECK_THROWS_AS(family_g(0), Error);

    Graph c4e = c4_plus_e();
    CHECK(c4e.order() == 5);
    std::vector<int> degs;
    for (int v = 0; v < 5; ++v) degs.push_back(c4e.degree(v));
    std::sort(degs.begin(), degs.end(), std::greater<>());
    CHECK(degs == std::vector<int>{3, 2, 2, 2, 1});
    CHECK(cut_vertices(c4e) == VertexSet::single(0));
}

TEST_CASE("corona layout") {
    // corona(K1, C4) is the wheel and coincides with join(K1, C4)
    Graph w4 = corona(Graph(1), cycle(4));
    CHECK(w4.order() == 5);
    CHECK(w4 == join(Graph(1), cycle(4)));
    CHECK(full_vertices(w4) == VertexSet::single(0));

    // corona(P2, K1) is a path on four vertices up to labels
    Graph g = corona(path(2), Graph(1));
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(is_connected(g));
    CHECK(tree_canonical_code(g) == tree_canonical_code(path(4)));

    Graph h = corona(cycle(3), Graph(1));
    CHECK(h.order() == 6);
    int pendants = 0;
    for (int v = 0; v < h.order(); ++v) pendants += h.degree(v) == 1;
    CHECK(pendants == 3);
}

TEST_CASE("products") {
    // K2 x K2 in the box product is the 4-cycle
    Graph sq = cartesian_product(path(2), path(2));
    CHECK(sq.order() == 4);
    CHECK(sq.edge_count() == 4);
    CHECK(is_connected(sq));
    for (int v = 0; v < 4; ++v) CHECK(sq.degree(v) == 2);

    CHECK(lexicographic_product(path(2), path(2)) == complete(4));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int ng = 1 + static_cast<int>(rng() % 4);
        int nh = 1 + static_cast<int>(rng() % 4);
        Graph g = random_graph(ng, 0.5, rng);
        Graph h = random_graph(nh, 0.5, rng);

        CHECK(join(g, h).edge_count() == g.edge_count() + h.edge_count() + ng * nh);
        CHECK(cartesian_product(g, h).edge_count() == ng * h.edge_count() + nh * g.edge_count());
        CHECK(lexicographic_product(g, h).edge_count() ==
              ng * h.edge_count() + nh * nh * g.edge_count());

        // coordinate swap relabels cartesian(h, g) onto cartesian(g, h)
        std::vector<int> swap_perm(static_cast<std::size_t>(ng * nh));
        for (int u = 0; u < nh; ++u)
            for (int v = 0; v < ng; ++v)
                swap_perm[static_cast<std::size_t>(u * ng + v)] = v * nh + u;
        CHECK(relabel(cartesian_product(h, g), swap_perm) == cartesian_product(g, h));

        std::vector<int> join_perm(static_cast<std::size_t>(ng + nh));
        for (int u = 0; u < nh; ++u) join_perm[static_cast<std::size_t>(u)] = ng + u;
        for (int v = 0; v < ng; ++v) join_perm[static_cast<std::size_t>(nh + v)] = v;
        CHECK(relabel(join(h, g), join_perm) == join(g, h));
    }
}

TEST_CASE("enumeration counts") {
    int trees4 = 0;
    enumerate_trees(4, [&](const Graph& g) {
        ++trees4;
        CHECK(g.edge_count() == 3);
        CHECK(is_connected(g));
    });
    CHECK(trees4 == 16);  // Cayley: 4^2

    int trees5 = 0;
    std::set<std::uint64_t> distinct;
    enumerate_trees(5, [&](const Graph& g) {
        ++trees5;
        std::uint64_t key = 0;
        int bit = 0;
        for (int j = 1; j < 5; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (g.has_edge(i, j)) key |= std::uint64_t{1} << bit;
        distinct.insert(key);
    });
    CHECK(trees5 == 125);
    CHECK(distinct.size() == 125);  // Prufer decoding is a bijection

    int connected3 = 0;
    enumerate_graphs(3, {.connected = true}, [&](const Graph&) { ++connected3; });
    CHECK(connected3 == 4);

    int unicyclic5 = 0;
    enumerate_graphs(5, {.unicyclic = true}, [&](const Graph& g) {
        ++unicyclic5;
        CHECK(g.edge_count() == 5);
        CHECK(is_connected(g));
    });
    CHECK(unicyclic5 == 222);

    // the dedicated unicyclic enumerator matches the filtered enumeration
    int unicyclic5_direct = 0;
    std::set<std::uint64_t> keys;
    enumerate_unicyclic(5, [&](const Graph& g) {
        ++unicyclic5_direct;
        std::uint64_t key = 0;
        int bit = 0;
        for (int j = 1; j < 5; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (g.has_edge(i, j)) key |= std::uint64_t{1} << bit;
        keys.insert(key);
    });
    CHECK(unicyclic5_direct == 222);
    CHECK(keys.size() == 222);

    int unicyclic4 = 0;
    enumerate_unicyclic(4, [&](const Graph&) { ++unicyclic4; });
    CHECK(unicyclic4 == 15);

    CHECK_THROWS_AS(enumerate_graphs(10, {}, [](const Graph&) {}), Error);
}

TEST_CASE("canonical codes are relabeling invariants") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + static_cast<int>(rng() % 5);
        Graph t = labeled_tree(n, rng() % labeled_tree_count(n));
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(tree_canonical_code(t) == tree_canonical_code(relabel(t, perm)));
    }

    for (int trial = 0; trial < 100; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = random_graph_matching(n, 0.45, {.unicyclic = true}, rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(unicyclic_canonical_code(g) == unicyclic_canonical_code(relabel(g, perm)));
    }

    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = random_graph(n, 0.5, rng);
        std::vector<int> perm(static_cast<std::size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_mask(g) == canonical_mask(relabel(g, perm)));
    }
}

TEST_CASE("canonical codes separate isomorphism classes") {
    // class counts for labeled trees: 2 on 4 vertices, 3 on 5, 6 on 6, 11 on 7
    const int expected[] = {2, 3, 6, 11};
    for (int n = 4; n <= 7; ++n) {
        std::set<std::string> codes;
        enumerate_trees(n, [&](const Graph& g) { codes.insert(tree_canonical_code(g)); });
        CHECK(static_cast<int>(codes.size()) == expected[n - 4]);
    }

    // unlabeled connected unicyclic graphs: 2 on 4 vertices, 5 on 5, 13 on 6
    const int uni_expected[] = {2, 5, 13};
    for (int n = 4; n <= 6; ++n) {
        std::set<std::string> codes;
        enumerate_unicyclic(n, [&](const Graph& g) { codes.insert(unicyclic_canonical_code(g)); });
        CHECK(static_cast<int>(codes.size()) == uni_expected[n - 4]);
    }

    // unlabeled graphs on 4 vertices: 11 total
    std::set<std::uint64_t> masks;
    enumerate_graphs(4, {}, [&](const Graph& g) { masks.insert(canonical_mask(g)); });
    CHECK(masks.size() == 11);

    // unlabeled connected graphs on 5 vertices: 21
    std::set<std::uint64_t> masks5;
    enumerate_graphs(5, {.connected = true}, [&](const Graph& g) { masks5.insert(canonical_mask(g)); });
    CHECK(masks5.size() == 21);
}

TEST_CASE("random graph matching respects the filter") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 30; ++t) {
        Graph g = random_graph_matching(6, 0.4, {.connected = true, .no_full_vertex = true}, rng);
        CHECK(is_connected(g));
        CHECK(full_vertices(g).empty());
    }
}

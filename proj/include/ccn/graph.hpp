#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "ccn/errors.hpp"
#include "ccn/vertex_set.hpp"

namespace ccn {

// Simple undirected graph on vertices 0..n-1, one adjacency word per
// vertex. Treated as immutable once built: every algorithm takes a
// const reference and construction happens in one place.
class Graph {
public:
    static constexpr int max_vertices = 63;

    Graph() = default;

    explicit Graph(int n) {
        if (n < 0 || n > max_vertices)
            throw Error("vertex count out of range [0, 63]");
        adj_.assign(static_cast<std::size_t>(n), 0);
    }

    Graph(int n, std::initializer_list<std::pair<int, int>> edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw Error("self-loops not allowed");
        if (has_edge(u, v)) return;
        adj_[static_cast<std::size_t>(u)] |= bit(v);
        adj_[static_cast<std::size_t>(v)] |= bit(u);
        ++edge_count_;
    }

    int order() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
    }

    int degree(int v) const {
        check_vertex(v);
        return std::popcount(adj_[static_cast<std::size_t>(v)]);
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return VertexSet::from_bits(adj_[static_cast<std::size_t>(v)]);
    }

    // Unchecked fast path for inner loops.
    std::uint64_t neighbors_bits(int v) const { return adj_[static_cast<std::size_t>(v)]; }

    VertexSet vertices() const { return VertexSet::first_n(order()); }

    bool is_complete() const {
        int n = order();
        return edge_count_ == n * (n - 1) / 2;
    }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

    void check_vertex(int v) const {
        if (v < 0 || v >= order()) throw Error("vertex id out of range");
    }

    std::vector<std::uint64_t> adj_;
    int edge_count_ = 0;
};

// Graph with vertex v removed; vertices above v shift down by one.
inline Graph remove_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw Error("vertex id out of range");
    Graph out(g.order() - 1);
    for (int u = 0; u < g.order(); ++u) {
        if (u == v) continue;
        for (int w : g.neighbors(u)) {
            if (w == v || w < u) continue;
            out.add_edge(u - (u > v ? 1 : 0), w - (w > v ? 1 : 0));
        }
    }
    return out;
}

// Graph relabeled so that old vertex i becomes new_id[i].
inline Graph relabel(const Graph& g, const std::vector<int>& new_id) {
    if (static_cast<int>(new_id.size()) != g.order())
        throw Error("relabel: permutation size mismatch");
    Graph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int w : g.neighbors(u))
            if (w > u) out.add_edge(new_id[static_cast<std::size_t>(u)], new_id[static_cast<std::size_t>(w)]);
    return out;
}

}  // namespace ccn

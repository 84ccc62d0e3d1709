#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ccn/canonical.hpp"
#include "ccn/coalition.hpp"
#include "ccn/connectivity.hpp"
#include "ccn/domination.hpp"
#include "ccn/generators.hpp"
#include "ccn/graph.hpp"
#include "ccn/oracle.hpp"
#include "ccn/results.hpp"

namespace ccn {

inline int cc_cycle(int n) {
    if (n < 3) throw Error("cycles need at least three vertices");
    return n == 4 ? 4 : 3;
}

// CC(G) = 2 exactly when the cut vertices form a connected dominating
// set (connected G without full vertices). When the preconditions hold
// but the cut set is not a CDS, the verdict "CC != 2" is reported as
// case "not-two" with no value.
inline FormulaReport cc_two_characterization(const Graph& g) {
    if (!is_connected(g)) return FormulaReport::not_applicable("disconnected");
    if (!full_vertices(g).empty()) return FormulaReport::not_applicable("has-full-vertex");
    VertexSet x = cut_vertices(g);
    std::vector<std::pair<std::string, long long>> inputs{{"cut_vertex_count", x.count()}};
    if (is_cds(g, x)) return FormulaReport::decided(2, "cut-vertices-form-cds", std::move(inputs));
    return FormulaReport::not_applicable("not-two", std::move(inputs));
}

inline FormulaReport cc_tree(const Graph& g) {
    int n = g.order();
    if (n < 1 || g.edge_count() != n - 1 || !is_connected(g))
        return FormulaReport::not_applicable("not-a-tree");
    if (n == 1) return FormulaReport::decided(1, "K1");
    if (n == 2) return FormulaReport::decided(2, "P2");
    if (!full_vertices(g).empty()) return FormulaReport::decided(0, "full-vertex");
    return FormulaReport::decided(2, "no-full-vertex");
}

namespace detail {

struct UnicyclicShape {
    int cycle_length = 0;
    VertexSet core;  // the unique cycle
    VertexSet y;     // cycle vertices whose removal keeps G connected
};

inline UnicyclicShape analyze_unicyclic(const Graph& g) {
    UnicyclicShape s;
    s.core = two_core(g);
    s.cycle_length = s.core.count();
    for (int v : s.core)
        if (component_count_within(g, g.vertices().without(v)) == 1) s.y = s.y.with(v);
    return s;
}

}  // namespace detail

// Four-branch value for connected graphs with exactly one cycle.
inline FormulaReport cc_unicyclic(const Graph& g) {
    int n = g.order();
    if (n < 3 || g.edge_count() != n || !is_connected(g))
        return FormulaReport::not_applicable("not-unicyclic");
    auto shape = detail::analyze_unicyclic(g);
    std::vector<std::pair<std::string, long long>> inputs{
        {"cycle_length", shape.cycle_length}, {"Y_size", shape.y.count()}};
    if (n == 4 && shape.cycle_length == 4)
        return FormulaReport::decided(4, "C4", std::move(inputs));
    // a unicyclic graph on >= 4 vertices has a full vertex exactly when
    // it is a triangle with pendants at one triangle vertex
    if (n >= 4 && !full_vertices(g).empty())
        return FormulaReport::decided(0, "family-G", std::move(inputs));
    if (n >= 5 && shape.y.count() <= 1)
        return FormulaReport::decided(2, "Y-le-1", std::move(inputs));
    if (n >= 5 && shape.y.count() == 2) {
        auto ys = shape.y.to_vector();
        if (g.has_edge(ys[0], ys[1]))
            return FormulaReport::decided(2, "Y-K2", std::move(inputs));
    }
    return FormulaReport::decided(3, "others", std::move(inputs));
}

// ---- the dispatcher ---------------------------------------------------

namespace detail {

inline CoalitionCertificate checked_certificate(const Graph& g, Partition p) {
    auto outcome = validate_partition(g, p);
    if (!outcome.valid())
        throw std::logic_error("internal error: constructed partition failed validation at cell " +
                               std::to_string(outcome.failing_cell));
    return *std::move(outcome.certificate);
}

inline Partition singletons(const Graph& g) {
    Partition p;
    for (int v = 0; v < g.order(); ++v) p.cells.push_back(VertexSet::single(v));
    return p;
}

// {{x}, V \ {x}} for the lowest cut vertex x; valid whenever g is
// connected with no full vertex and has a cut vertex.
inline Partition two_cell_partition(const Graph& g) {
    VertexSet x = cut_vertices(g);
    if (x.empty()) throw std::logic_error("two_cell_partition needs a cut vertex");
    int v = x.lowest();
    Partition p;
    p.cells.push_back(VertexSet::single(v));
    p.cells.push_back(g.vertices().without(v));
    return p;
}

inline std::vector<int> cycle_order(const Graph& g, VertexSet core) {
    std::vector<int> cyc;
    int start = core.lowest();
    int prev = -1, cur = start;
    do {
        cyc.push_back(cur);
        int next = -1;
        for (int w : (g.neighbors(cur) & core))
            if (w != prev) {
                next = w;
                break;
            }
        prev = cur;
        cur = next;
    } while (cur != start);
    return cyc;
}

// {{second}, {last}, rest} along the cycle, following the three-cell
// construction used for cycles of length other than four.
inline Partition cycle_partition(const Graph& g) {
    auto cyc = cycle_order(g, g.vertices());
    int n = g.order();
    if (n == 4) return singletons(g);
    Partition p;
    VertexSet a = VertexSet::single(cyc[1]);
    VertexSet b = VertexSet::single(cyc[static_cast<std::size_t>(n - 1)]);
    p.cells.push_back(a);
    p.cells.push_back(b);
    p.cells.push_back((g.vertices() - a) - b);
    return p;
}

// {{a}, {b}, rest} for the first non-adjacent pair a < b inside Y;
// such a pair exists in every "others" branch instance on >= 5 vertices.
inline Partition unicyclic_three_cell_partition(const Graph& g, VertexSet y) {
    auto ys = y.to_vector();
    for (std::size_t i = 0; i < ys.size(); ++i)
        for (std::size_t j = i + 1; j < ys.size(); ++j) {
            if (g.has_edge(ys[i], ys[j])) continue;
            Partition p;
            p.cells.push_back(VertexSet::single(ys[i]));
            p.cells.push_back(VertexSet::single(ys[j]));
            p.cells.push_back((g.vertices().without(ys[i])).without(ys[j]));
            return p;
        }
    throw std::logic_error("no non-adjacent pair in Y");
}

// Complete bipartite with both sides of size >= 2, detected structurally.
inline bool is_complete_bipartite(const Graph& g, int& m_out, int& n_out) {
    int n = g.order();
    if (n < 4 || !is_connected(g)) return false;
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    side[0] = 0;
    std::vector<int> queue{0};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int u = queue[qi];
        for (int w : g.neighbors(u)) {
            if (side[static_cast<std::size_t>(w)] == -1) {
                side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(u)];
                queue.push_back(w);
            } else if (side[static_cast<std::size_t>(w)] == side[static_cast<std::size_t>(u)]) {
                return false;
            }
        }
    }
    int a = 0;
    for (int v = 0; v < n; ++v) a += side[static_cast<std::size_t>(v)] == 0;
    int b = n - a;
    if (a < 2 || b < 2) return false;
    if (g.edge_count() != a * b) return false;
    m_out = a;
    n_out = b;
    return true;
}

struct BaseResult {
    int value = 0;
    std::string method;
    std::optional<Partition> partition;
};

// Value and witness partition for a connected graph with no full vertex
// and at least two vertices.
inline BaseResult cc_core_dispatch(const Graph& h, const OracleOptions& opts) {
    int n = h.order();
    if (h.edge_count() == n - 1) return {2, "tree-formula", two_cell_partition(h)};

    bool all_deg_two = true;
    for (int v = 0; v < n && all_deg_two; ++v) all_deg_two = h.degree(v) == 2;
    if (all_deg_two && is_connected(h)) return {cc_cycle(n), "cycle-formula", cycle_partition(h)};

    if (h.edge_count() == n) {
        auto shape = analyze_unicyclic(h);
        // no full vertex here, so the zero branch cannot fire
        if (n == 4 && shape.cycle_length == 4) return {4, "unicyclic-formula", singletons(h)};
        bool small_y = shape.y.count() <= 1;
        bool y_is_k2 = false;
        if (shape.y.count() == 2) {
            auto ys = shape.y.to_vector();
            y_is_k2 = h.has_edge(ys[0], ys[1]);
        }
        if (n >= 5 && (small_y || y_is_k2)) return {2, "unicyclic-formula", two_cell_partition(h)};
        return {3, "unicyclic-formula", unicyclic_three_cell_partition(h, shape.y)};
    }

    VertexSet x = cut_vertices(h);
    if (is_cds(h, x)) return {2, "cut-set", two_cell_partition(h)};

    int bm = 0, bn = 0;
    if (is_complete_bipartite(h, bm, bn)) return {bm + bn, "complete-bipartite", singletons(h)};

    if (n <= opts.max_n) {
        CCResult r = cc_oracle(h, opts);
        return {r.value, "oracle", r.certificate ? std::optional<Partition>(r.certificate->partition)
                                                 : std::nullopt};
    }
    throw UndecidedError("no closed form applies and the instance exceeds the oracle cap", 2);
}

}  // namespace detail

// Dispatches K1 / disconnected handling, the full-vertex reduction, the
// zero-family test, then the closed forms in order, falling back to the
// oracle. The method field records the rule that decided the value.
inline CCResult cc_auto(const Graph& g, const OracleOptions& opts = {}) {
    int n = g.order();
    if (n == 0) return {0, "disconnected", std::nullopt};
    if (n == 1)
        return {1, "K1", detail::checked_certificate(g, detail::singletons(g))};
    if (!is_connected(g)) return {0, "disconnected", std::nullopt};

    FullReduction red = full_vertex_reduction(g);
    const Graph& h = red.stripped;
    int k = red.removed_count;

    if (h.order() == 1)
        // only complete graphs strip all the way down to one vertex
        return {n, "complete", detail::checked_certificate(g, detail::singletons(g))};

    if (cc_zero_family_check(h)) return {0, "zero-family", std::nullopt};

    detail::BaseResult base;
    try {
        base = detail::cc_core_dispatch(h, opts);
    } catch (const UndecidedError& e) {
        throw UndecidedError(e.what(), k + e.lower_bound());
    }

    Partition lifted;
    for (int v : red.removed) lifted.cells.push_back(VertexSet::single(v));
    if (base.partition) {
        for (VertexSet cell : base.partition->cells) {
            VertexSet mapped;
            for (int v : cell) mapped = mapped.with(red.original_ids[static_cast<std::size_t>(v)]);
            lifted.cells.push_back(mapped);
        }
    }
    return {k + base.value, base.method, detail::checked_certificate(g, std::move(lifted))};
}

// ---- product formulas and bounds ---------------------------------------

// Corona G o H: one copy of G, |V(G)| copies of H, copy i joined to
// vertex i of G.
inline FormulaReport cc_corona(const Graph& g, const Graph& h, const OracleOptions& opts = {}) {
    if (!is_connected(g)) return FormulaReport::not_applicable("g-disconnected");
    if (h.order() == 0) return FormulaReport::not_applicable("h-empty");
    if (g.order() >= 2)
        return FormulaReport::decided(2, "g-order-ge-2", {{"g_order", g.order()}});
    int ch = cc_auto(h, opts).value;
    if (ch == 0) return FormulaReport::decided(0, "K1-and-cc-h-zero", {{"cc_h", ch}});
    return FormulaReport::decided(1 + ch, "K1-and-cc-h-positive", {{"cc_h", ch}});
}

// Join G v H. The garbled three-case table is read as: both
// non-complete -> |V(G)|+|V(H)|; one complete while the other has
// CC = 0 -> 0; otherwise CC(G)+CC(H).
inline FormulaReport cc_join(const Graph& g, const Graph& h, const OracleOptions& opts = {}) {
    if (g.order() == 0 && h.order() == 0) throw Error("join of two empty graphs");
    bool gc = g.is_complete();
    bool hc = h.is_complete();
    std::vector<std::pair<std::string, long long>> inputs{
        {"g_order", g.order()}, {"h_order", h.order()}, {"g_complete", gc}, {"h_complete", hc}};
    if (!gc && !hc)
        return FormulaReport::decided(g.order() + h.order(), "neither-complete", std::move(inputs));
    int cg = cc_auto(g, opts).value;
    int ch = cc_auto(h, opts).value;
    inputs.emplace_back("cc_g", cg);
    inputs.emplace_back("cc_h", ch);
    if ((gc && ch == 0) || (hc && cg == 0))
        return FormulaReport::decided(0, "complete-plus-cc-zero", std::move(inputs));
    return FormulaReport::decided(cg + ch, "cc-sum", std::move(inputs));
}

// max(CC(G)+k_G, CC(H)+k_H) where k counts full vertices.
inline int cc_cartesian_lower_bound(const Graph& g, const Graph& h, const OracleOptions& opts = {}) {
    if (g.order() < 2 || h.order() < 2)
        throw Error("cartesian bound needs both factors of order at least two");
    if (!is_connected(g) || !is_connected(h))
        throw Error("cartesian bound needs connected factors");
    int bg = cc_auto(g, opts).value + full_vertices(g).count();
    int bh = cc_auto(h, opts).value + full_vertices(h).count();
    return std::max(bg, bh);
}

struct CartesianPairBound {
    int bound = 0;
    Partition witness;  // on cartesian_product(g, h)
};

// Bound |V(G)|+|V(H)|-1 with the explicit witness partition, available
// when each factor has a full vertex whose removal keeps it connected.
inline CartesianPairBound cc_cartesian_full_pair_bound(const Graph& g, const Graph& h) {
    int n = g.order(), m = h.order();
    if (n < 2 || m < 2) throw Error("cartesian pair bound needs both factors of order at least two");
    auto eligible = [](const Graph& f) {
        for (int v : full_vertices(f))
            if (is_connected(remove_vertex(f, v))) return v;
        return -1;
    };
    int u = eligible(g);
    int v = eligible(h);
    if (u < 0 || v < 0)
        throw Error("cartesian pair bound needs a full vertex with connected remainder in each factor");

    auto id = [m](int x, int y) { return x * m + y; };
    CartesianPairBound out;
    out.bound = n + m - 1;
    VertexSet a1 = VertexSet::single(id(u, v));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < m; ++y)
            if (x != u && y != v) a1 = a1.with(id(x, y));
    out.witness.cells.push_back(a1);
    for (int x = 0; x < n; ++x)
        if (x != u) out.witness.cells.push_back(VertexSet::single(id(x, v)));
    for (int y = 0; y < m; ++y)
        if (y != v) out.witness.cells.push_back(VertexSet::single(id(u, y)));

    Graph product = cartesian_product(g, h);
    if (!validate_partition(product, out.witness).valid())
        throw std::logic_error("internal error: cartesian pair witness failed validation");
    return out;
}

// CC(G)+k_G for the lexicographic product.
inline int cc_lexicographic_lower_bound(const Graph& g, const Graph& h, const OracleOptions& opts = {}) {
    if (g.order() < 2 || h.order() < 2)
        throw Error("lexicographic bound needs both factors of order at least two");
    return cc_auto(g, opts).value + full_vertices(g).count();
}

}  // namespace ccn

#pragma once

#include <numeric>
#include <optional>
#include <vector>

#include "ccn/connectivity.hpp"
#include "ccn/domination.hpp"
#include "ccn/graph.hpp"
#include "ccn/partition.hpp"

namespace ccn {

// a and b form a connected coalition: their union is a connected
// dominating set while neither set alone is.
inline bool is_coalition(const Graph& g, VertexSet a, VertexSet b) {
    if (a.empty() || b.empty()) throw Error("coalition sets must be nonempty");
    if (a.intersects(b)) throw Error("coalition sets must be disjoint");
    return is_cds(g, a | b) && !is_cds(g, a) && !is_cds(g, b);
}

struct ValidationOutcome {
    std::optional<CoalitionCertificate> certificate;
    int failing_cell = -1;  // first cell with no witness, when invalid

    bool valid() const { return certificate.has_value(); }
};

// Checks every cell of p against the partition definition, assigning a
// full-singleton witness or the lowest-index coalition partner.
inline ValidationOutcome validate_partition(const Graph& g, const Partition& p) {
    if (!is_partition_of(g, p)) throw Error("not a partition of V(G)");
    int k = p.size();
    std::vector<char> cell_is_cds(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cell_is_cds[static_cast<std::size_t>(i)] = is_cds(g, p.cells[static_cast<std::size_t>(i)]);
    VertexSet full = full_vertices(g);

    std::vector<CellWitness> wits;
    wits.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        VertexSet cell = p.cells[static_cast<std::size_t>(i)];
        if (cell.count() == 1 && full.contains(cell.lowest())) {
            wits.push_back(CellWitness::full());
            continue;
        }
        // a cell that is itself a CDS can never satisfy "neither is"
        if (cell_is_cds[static_cast<std::size_t>(i)]) return {std::nullopt, i};
        int partner = -1;
        for (int j = 0; j < k; ++j) {
            if (j == i || cell_is_cds[static_cast<std::size_t>(j)]) continue;
            if (is_cds(g, cell | p.cells[static_cast<std::size_t>(j)])) {
                partner = j;
                break;
            }
        }
        if (partner < 0) return {std::nullopt, i};
        wits.push_back(CellWitness::partnered(partner));
    }
    return {CoalitionCertificate{p, std::move(wits)}, -1};
}

// Full re-check of a certificate from scratch.
inline bool certificate_is_valid(const Graph& g, const CoalitionCertificate& c) {
    if (!is_partition_of(g, c.partition)) return false;
    int k = c.partition.size();
    if (static_cast<int>(c.witnesses.size()) != k) return false;
    VertexSet full = full_vertices(g);
    for (int i = 0; i < k; ++i) {
        VertexSet cell = c.partition.cells[static_cast<std::size_t>(i)];
        const CellWitness& w = c.witnesses[static_cast<std::size_t>(i)];
        if (w.kind == CellWitness::Kind::full_singleton) {
            if (cell.count() != 1 || !full.contains(cell.lowest())) return false;
        } else {
            if (w.partner < 0 || w.partner >= k || w.partner == i) return false;
            if (!is_coalition(g, cell, c.partition.cells[static_cast<std::size_t>(w.partner)])) return false;
        }
    }
    return true;
}

// Membership in the CC = 0 family: deleting every full vertex leaves a
// disconnected remainder. An empty remainder (complete graph) does not
// count as disconnected.
inline bool cc_zero_family_check(const Graph& g) {
    if (!is_connected(g)) throw Error("graph not connected");
    VertexSet rest = g.vertices() - full_vertices(g);
    if (rest.empty()) return false;
    return component_count_within(g, rest) != 1;
}

struct FullReduction {
    Graph stripped;
    int removed_count = 0;
    std::vector<int> removed;       // original ids, in removal order
    std::vector<int> original_ids;  // stripped id -> original id
};

// Removes full vertices one at a time (lowest eligible id first) while
// the remainder stays connected and nonempty.
inline FullReduction full_vertex_reduction(const Graph& g) {
    if (!is_connected(g)) throw Error("graph not connected");
    FullReduction r;
    r.stripped = g;
    r.original_ids.resize(static_cast<std::size_t>(g.order()));
    std::iota(r.original_ids.begin(), r.original_ids.end(), 0);

    for (;;) {
        if (r.stripped.order() <= 1) break;
        int pick = -1;
        for (int v : full_vertices(r.stripped)) {
            if (is_connected(remove_vertex(r.stripped, v))) {
                pick = v;
                break;
            }
        }
        if (pick < 0) break;
        r.removed.push_back(r.original_ids[static_cast<std::size_t>(pick)]);
        r.original_ids.erase(r.original_ids.begin() + pick);
        r.stripped = remove_vertex(r.stripped, pick);
        ++r.removed_count;
    }
    return r;
}

}  // namespace ccn

#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <future>
#include <optional>
#include <vector>

#include "ccn/coalition.hpp"
#include "ccn/connectivity.hpp"
#include "ccn/domination.hpp"
#include "ccn/graph.hpp"
#include "ccn/partition.hpp"
#include "ccn/results.hpp"

namespace ccn {

struct OracleOptions {
    int max_n = 12;                        // hard instance-size cap
    bool cut_vertices_share_cell = false;  // restrict the search to partitions
                                           // keeping all cut vertices in one cell
    bool deterministic_certificate = true;
    int threads = 1;                       // >1 opts into the parallel search
};

namespace detail {

// Exhaustive search over set partitions encoded as restricted-growth
// strings. Branches die under prunes that are exact consequences of the
// partition definition:
//  - a cell of size >= 2 that is a connected dominating set can never be
//    admissible (supersets of a CDS stay CDSs);
//  - every coalition's union is a CDS and every CDS contains every cut
//    vertex, so cut vertices spread over three cells kill all pairings,
//    and spread over two cells force every remaining cell to be a
//    full-vertex singleton;
//  - a cell with no remaining way to reach a partner (no candidate union
//    with the unassigned pool is a CDS) cannot be completed;
//  - a branch whose cell count plus unassigned pool cannot beat the
//    incumbent is abandoned.
struct PartitionSearch {
    const Graph& g;
    int n;
    std::uint64_t all = 0;
    std::uint64_t full = 0;
    std::uint64_t cut = 0;
    bool restrict_cut_cell = false;

    std::vector<std::uint64_t> suffix;  // suffix[v] = vertices v..n-1
    std::vector<std::uint64_t> cells;

    int best = 0;
    std::vector<std::uint64_t> best_cells;

    // collector mode: gather every valid partition of exactly this size
    int collect_size = -1;
    std::vector<Partition>* collector = nullptr;

    // parallel mode support
    const std::atomic<int>* shared_floor = nullptr;  // external lower bound for pruning

    explicit PartitionSearch(const Graph& graph) : g(graph), n(graph.order()) {
        all = graph.vertices().bits();
        full = full_vertices(graph).bits();
        if (is_connected(graph)) cut = cut_vertices(graph).bits();
        suffix.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int v = n - 1; v >= 0; --v)
            suffix[static_cast<std::size_t>(v)] = suffix[static_cast<std::size_t>(v) + 1] | (std::uint64_t{1} << v);
        cells.reserve(static_cast<std::size_t>(n));
    }

    bool is_cds_mask(std::uint64_t s) const {
        if (!s) return false;
        std::uint64_t cover = s;
        for (std::uint64_t f = s; f; f &= f - 1)
            cover |= g.neighbors_bits(std::countr_zero(f));
        if (all & ~cover) return false;
        std::uint64_t comp = s & (~s + 1);
        std::uint64_t frontier = comp;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t f = frontier; f; f &= f - 1)
                next |= g.neighbors_bits(std::countr_zero(f));
            frontier = next & s & ~comp;
            comp |= frontier;
        }
        return comp == s;
    }

    bool cell_is_full_singleton(std::uint64_t s) const {
        return (s & (s - 1)) == 0 && (s & full) != 0;
    }

    int prune_floor() const {
        int floor = best;
        if (shared_floor) {
            int sf = shared_floor->load(std::memory_order_relaxed);
            if (sf > floor) floor = sf;
        }
        return floor;
    }

    // Cells spread checks that look at the whole state; run after an
    // assignment has been applied.
    bool state_alive(std::uint64_t cut_cells, std::uint64_t unassigned) const {
        if (std::popcount(cut_cells) == 2) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if ((cut_cells >> i) & 1) continue;
                if (!cell_is_full_singleton(cells[i])) return false;
            }
        }
        for (std::size_t i = 0; i < cells.size(); ++i) {
            std::uint64_t a = cells[i];
            if (cell_is_full_singleton(a)) continue;
            if (is_cds_mask(a | unassigned)) continue;  // future-only partner still possible
            bool ok = false;
            for (std::size_t j = 0; j < cells.size(); ++j) {
                if (j == i) continue;
                std::uint64_t b = cells[j];
                // a cell that is already a CDS can only survive as a full
                // singleton, never as the non-CDS side of a coalition
                if (cell_is_full_singleton(b)) continue;
                if (is_cds_mask(a | b | unassigned)) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    }

    bool leaf_valid() const {
        std::size_t k = cells.size();
        std::uint64_t cds_flags = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (is_cds_mask(cells[i])) cds_flags |= std::uint64_t{1} << i;
        for (std::size_t i = 0; i < k; ++i) {
            std::uint64_t cell = cells[i];
            if (cell_is_full_singleton(cell)) continue;
            if ((cds_flags >> i) & 1) return false;
            bool ok = false;
            for (std::size_t j = 0; j < k; ++j) {
                if (j == i || ((cds_flags >> j) & 1)) continue;
                if (is_cds_mask(cell | cells[j])) {
                    ok = true;
                    break;
                }
            }
            if (!ok) return false;
        }
        return true;
    }

    void leaf() {
        int k = static_cast<int>(cells.size());
        if (collector) {
            if (k == collect_size && leaf_valid()) {
                Partition p;
                for (std::uint64_t c : cells) p.cells.push_back(VertexSet::from_bits(c));
                collector->push_back(std::move(p));
            }
            return;
        }
        if (k > best && leaf_valid()) {
            best = k;
            best_cells = cells;
        }
    }

    void dfs(int v, std::uint64_t cut_cells) {
        if (v == n) {
            leaf();
            return;
        }
        std::uint64_t vbit = std::uint64_t{1} << v;
        std::uint64_t unassigned = suffix[static_cast<std::size_t>(v) + 1];
        int k = static_cast<int>(cells.size());
        bool v_cut = (cut & vbit) != 0;

        for (int c = 0; c <= k; ++c) {
            if (restrict_cut_cell && v_cut && cut_cells && !((cut_cells >> c) & 1)) continue;

            std::uint64_t grown = (c == k) ? vbit : (cells[static_cast<std::size_t>(c)] | vbit);
            if ((grown & (grown - 1)) != 0 && is_cds_mask(grown)) continue;

            std::uint64_t next_cut_cells = cut_cells | (v_cut ? (std::uint64_t{1} << c) : 0);
            if (std::popcount(next_cut_cells) >= 3) continue;

            int kk = k + (c == k ? 1 : 0);
            if (collector) {
                if (kk > collect_size) continue;
                if (kk + std::popcount(unassigned) < collect_size) continue;
            } else {
                if (kk + std::popcount(unassigned) <= prune_floor()) continue;
            }

            if (c == k)
                cells.push_back(grown);
            else
                cells[static_cast<std::size_t>(c)] = grown;

            if (state_alive(next_cut_cells, unassigned)) dfs(v + 1, next_cut_cells);

            if (c == k)
                cells.pop_back();
            else
                cells[static_cast<std::size_t>(c)] &= ~vbit;
        }
    }

    void run() {
        if (n == 0) return;
        dfs(0, 0);
    }
};

struct SearchState {
    std::vector<std::uint64_t> cells;
    std::uint64_t cut_cells = 0;
};

// Enumerates all surviving states at the given depth.
inline std::vector<SearchState> search_frontier(const Graph& g, bool restricted, int depth) {
    struct FrontierSearch : PartitionSearch {
        int stop_depth;
        std::vector<SearchState>* out;
        FrontierSearch(const Graph& graph, int d, std::vector<SearchState>* o)
            : PartitionSearch(graph), stop_depth(d), out(o) {}
        void dfs2(int v, std::uint64_t cut_cells) {
            if (v == stop_depth) {
                out->push_back({cells, cut_cells});
                return;
            }
            std::uint64_t vbit = std::uint64_t{1} << v;
            std::uint64_t unassigned = suffix[static_cast<std::size_t>(v) + 1];
            int k = static_cast<int>(cells.size());
            bool v_cut = (cut & vbit) != 0;
            for (int c = 0; c <= k; ++c) {
                if (restrict_cut_cell && v_cut && cut_cells && !((cut_cells >> c) & 1)) continue;
                std::uint64_t grown = (c == k) ? vbit : (cells[static_cast<std::size_t>(c)] | vbit);
                if ((grown & (grown - 1)) != 0 && is_cds_mask(grown)) continue;
                std::uint64_t next_cut_cells = cut_cells | (v_cut ? (std::uint64_t{1} << c) : 0);
                if (std::popcount(next_cut_cells) >= 3) continue;
                if (c == k)
                    cells.push_back(grown);
                else
                    cells[static_cast<std::size_t>(c)] = grown;
                if (state_alive(next_cut_cells, unassigned)) dfs2(v + 1, next_cut_cells);
                if (c == k)
                    cells.pop_back();
                else
                    cells[static_cast<std::size_t>(c)] &= ~vbit;
            }
        }
    };
    std::vector<SearchState> states;
    FrontierSearch fs(g, depth, &states);
    fs.restrict_cut_cell = restricted;
    if (g.order() > 0) fs.dfs2(0, 0);
    return states;
}

}  // namespace detail

// Exact CC(G) by exhaustive partition search. Returns a certificate
// whenever the value is at least 1; the certificate is re-derived by the
// independent validator before being returned.
inline CCResult cc_oracle(const Graph& g, const OracleOptions& opts = {}) {
    if (g.order() > opts.max_n) throw Error("instance too large for oracle");
    if (g.order() == 0) return {0, "oracle", std::nullopt};

    int best = 0;
    std::vector<std::uint64_t> best_cells;

    if (opts.threads <= 1 || g.order() < 6) {
        detail::PartitionSearch search(g);
        search.restrict_cut_cell = opts.cut_vertices_share_cell;
        search.run();
        best = search.best;
        best_cells = std::move(search.best_cells);
    } else {
        int depth = 4;
        auto states = detail::search_frontier(g, opts.cut_vertices_share_cell, depth);
        std::atomic<int> shared{0};
        struct BranchResult {
            int best = 0;
            std::vector<std::uint64_t> cells;
        };
        std::vector<std::future<BranchResult>> futures;
        futures.reserve(states.size());
        for (const auto& st : states) {
            futures.push_back(std::async(std::launch::async, [&, st]() {
                detail::PartitionSearch search(g);
                search.restrict_cut_cell = opts.cut_vertices_share_cell;
                search.cells = st.cells;
                if (!opts.deterministic_certificate) search.shared_floor = &shared;
                search.dfs(depth, st.cut_cells);
                if (!opts.deterministic_certificate) {
                    int cur = shared.load(std::memory_order_relaxed);
                    while (search.best > cur &&
                           !shared.compare_exchange_weak(cur, search.best, std::memory_order_relaxed)) {
                    }
                }
                return BranchResult{search.best, std::move(search.best_cells)};
            }));
        }
        // branches are in search order, so taking the first branch that
        // attains the maximum reproduces the single-threaded certificate
        for (auto& f : futures) {
            BranchResult r = f.get();
            if (r.best > best) {
                best = r.best;
                best_cells = std::move(r.cells);
            }
        }
    }

    if (best == 0) return {0, "oracle", std::nullopt};
    Partition p;
    for (std::uint64_t c : best_cells) p.cells.push_back(VertexSet::from_bits(c));
    auto outcome = validate_partition(g, p);
    if (!outcome.valid()) throw Error("internal error: oracle produced an invalid partition");
    return {best, "oracle", std::move(outcome.certificate)};
}

// Every valid connected coalition partition with exactly k cells.
// Intended for small instances (checking claims about all optimal
// partitions).
inline std::vector<Partition> all_cc_partitions(const Graph& g, int k, int max_n = 10) {
    if (g.order() > max_n) throw Error("instance too large for exhaustive partition collection");
    std::vector<Partition> out;
    if (g.order() == 0 || k <= 0) return out;
    detail::PartitionSearch search(g);
    search.collect_size = k;
    search.collector = &out;
    search.run();
    return out;
}

// Exact connected domatic number by exhaustive partition search where
// every cell must end up a connected dominating set.
inline int connected_domatic_number(const Graph& g, int max_n = 12) {
    if (g.order() > max_n) throw Error("instance too large for domatic enumeration");
    if (!is_connected(g)) throw Error("graph not connected");

    struct DomaticSearch {
        const Graph& g;
        int n;
        std::vector<std::uint64_t> suffix;
        std::vector<std::uint64_t> cells;
        int best = 0;

        explicit DomaticSearch(const Graph& graph) : g(graph), n(graph.order()) {
            suffix.assign(static_cast<std::size_t>(n) + 1, 0);
            for (int v = n - 1; v >= 0; --v)
                suffix[static_cast<std::size_t>(v)] =
                    suffix[static_cast<std::size_t>(v) + 1] | (std::uint64_t{1} << v);
        }

        void dfs(int v) {
            if (v == n) {
                for (std::uint64_t c : cells)
                    if (!is_cds(g, VertexSet::from_bits(c))) return;
                best = std::max(best, static_cast<int>(cells.size()));
                return;
            }
            std::uint64_t vbit = std::uint64_t{1} << v;
            std::uint64_t unassigned = suffix[static_cast<std::size_t>(v) + 1];
            int k = static_cast<int>(cells.size());
            for (int c = 0; c <= k; ++c) {
                int kk = k + (c == k ? 1 : 0);
                if (kk + std::popcount(unassigned) <= best) continue;
                if (c == k)
                    cells.push_back(vbit);
                else
                    cells[static_cast<std::size_t>(c)] |= vbit;
                // every cell must still be completable into a CDS from the pool
                bool alive = true;
                for (std::uint64_t cell : cells) {
                    if (!is_cds(g, VertexSet::from_bits(cell | unassigned))) {
                        alive = false;
                        break;
                    }
                }
                if (alive) dfs(v + 1);
                if (c == k)
                    cells.pop_back();
                else
                    cells[static_cast<std::size_t>(c)] &= ~vbit;
            }
        }
    };

    DomaticSearch search(g);
    search.dfs(0);
    return search.best;
}

// Constructive partition of a connected dominating set `a` in which
// every cell has a coalition partner inside the partition: split a
// minimal CDS off `a`, then absorb the remaining vertices one by one,
// opening a singleton cell whenever it can complete an existing cell to
// a CDS and merging it into the first cell otherwise.
inline Partition partition_cds(const Graph& g, VertexSet a) {
    if (!is_connected(g)) throw Error("graph not connected");
    if (!full_vertices(g).empty()) throw Error("graph has a full vertex");
    if (!is_cds(g, a)) throw Error("input set is not a connected dominating set");
    if (a.count() < 2) throw Error("input set needs at least two vertices");

    VertexSet x = minimal_cds(g, a);
    // no full vertex, so the minimal CDS has at least two vertices
    int x0 = x.lowest();
    Partition p;
    p.cells.push_back(VertexSet::single(x0));
    p.cells.push_back(x.without(x0));

    for (int v : a - x) {
        bool completes_some_cell = false;
        for (const VertexSet& cell : p.cells) {
            if (is_cds(g, cell.with(v))) {
                completes_some_cell = true;
                break;
            }
        }
        if (completes_some_cell)
            p.cells.push_back(VertexSet::single(v));
        else
            p.cells[0] = p.cells[0].with(v);
    }
    return p;
}

}  // namespace ccn

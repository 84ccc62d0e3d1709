#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

#include "json.hpp"

#include "ccn/errors.hpp"
#include "ccn/graph.hpp"
#include "ccn/vertex_set.hpp"

namespace ccn {

// Ordered list of cells. A valid partition of V(G) has nonempty,
// pairwise disjoint cells whose union is V(G).
struct Partition {
    std::vector<VertexSet> cells;

    int size() const { return static_cast<int>(cells.size()); }

    static Partition of(std::initializer_list<std::initializer_list<int>> cell_lists) {
        Partition p;
        for (const auto& c : cell_lists) p.cells.push_back(VertexSet::of(c));
        return p;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
};

inline bool is_partition_of(const Graph& g, const Partition& p) {
    std::uint64_t seen = 0;
    for (VertexSet c : p.cells) {
        if (c.empty()) return false;
        if (seen & c.bits()) return false;
        seen |= c.bits();
    }
    return seen == g.vertices().bits();
}

// Why a cell is admissible: it is a full-vertex singleton, or it forms
// a connected coalition with the cell at index `partner`.
struct CellWitness {
    enum class Kind { full_singleton, partner };

    Kind kind = Kind::full_singleton;
    int partner = -1;

    static CellWitness full() { return {Kind::full_singleton, -1}; }
    static CellWitness partnered(int cell) { return {Kind::partner, cell}; }

    friend bool operator==(const CellWitness&, const CellWitness&) = default;
};

// A partition plus one witness per cell; re-checkable independently of
// whatever search produced it.
struct CoalitionCertificate {
    Partition partition;
    std::vector<CellWitness> witnesses;

    friend bool operator==(const CoalitionCertificate&, const CoalitionCertificate&) = default;
};

inline nlohmann::ordered_json partition_to_json(const Partition& p) {
    nlohmann::ordered_json cells = nlohmann::ordered_json::array();
    for (VertexSet c : p.cells) cells.push_back(c.to_vector());
    return cells;
}

inline Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw Error("partition JSON must be an array of cells");
    Partition p;
    for (const auto& cell : j) {
        if (!cell.is_array()) throw Error("partition cell must be an array of vertex ids");
        VertexSet s;
        for (const auto& v : cell) {
            if (!v.is_number_integer()) throw Error("partition vertex id must be an integer");
            long long id = v.get<long long>();
            if (id < 0 || id >= Graph::max_vertices) throw Error("partition vertex id out of range");
            s = s.with(static_cast<int>(id));
        }
        p.cells.push_back(s);
    }
    return p;
}

inline nlohmann::ordered_json certificate_to_json(const CoalitionCertificate& c) {
    int n = 0;
    for (VertexSet s : c.partition.cells) n += s.count();
    nlohmann::ordered_json wits = nlohmann::ordered_json::array();
    for (const CellWitness& w : c.witnesses) {
        if (w.kind == CellWitness::Kind::full_singleton)
            wits.push_back({{"type", "full"}});
        else
            wits.push_back({{"type", "partner"}, {"cell", w.partner}});
    }
    return {{"n", n}, {"cells", partition_to_json(c.partition)}, {"witness", wits}};
}

inline CoalitionCertificate certificate_from_json(const nlohmann::json& j) {
    CoalitionCertificate c;
    c.partition = partition_from_json(j.at("cells"));
    for (const auto& w : j.at("witness")) {
        const std::string type = w.at("type").get<std::string>();
        if (type == "full")
            c.witnesses.push_back(CellWitness::full());
        else if (type == "partner")
            c.witnesses.push_back(CellWitness::partnered(w.at("cell").get<int>()));
        else
            throw Error("unknown witness type: " + type);
    }
    return c;
}

}  // namespace ccn

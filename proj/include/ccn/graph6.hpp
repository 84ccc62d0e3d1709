#pragma once

#include <sstream>
#include <string>
#include <string_view>

#include "ccn/errors.hpp"
#include "ccn/graph.hpp"

namespace ccn {

// graph6 with the single-byte size header: size byte 63+n for n <= 62,
// then the upper triangle in column-major order, six bits per byte,
// each data byte offset by 63.

inline std::string graph6_encode(const Graph& g) {
    int n = g.order();
    if (n > 62) throw Error("graph6 single-byte size encoding supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph graph6_decode(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 record", 0);
    unsigned char c0 = static_cast<unsigned char>(text[0]);
    if (c0 == 126) throw ParseError("multi-byte graph6 sizes not supported", 0);
    if (c0 < 63 || c0 > 125) throw ParseError("graph6 size byte out of range", 0);
    int n = c0 - 63;
    int nbits = n * (n - 1) / 2;
    std::size_t need = 1 + static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() < need) throw ParseError("truncated graph6 record", text.size());
    if (text.size() > need) throw ParseError("trailing bytes after graph6 record", need);

    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            std::size_t pos = 1 + static_cast<std::size_t>(bit / 6);
            unsigned char c = static_cast<unsigned char>(text[pos]);
            if (c < 63 || c > 126) throw ParseError("graph6 data byte out of range", pos);
            if (((c - 63) >> (5 - bit % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (nbits % 6) {
        unsigned char last = static_cast<unsigned char>(text[need - 1]);
        if ((last - 63) & ((1 << (6 - nbits % 6)) - 1))
            throw ParseError("nonzero graph6 padding bits", need - 1);
    }
    return g;
}

// Whitespace-separated alternative input: vertex count followed by
// 0-indexed endpoint pairs ("n\nu v\nu v\n...").
inline Graph parse_edge_list_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1;
    if (!(in >> n)) throw Error("edge list: missing vertex count");
    if (n < 0 || n > Graph::max_vertices) throw Error("edge list: vertex count out of range");
    Graph g(static_cast<int>(n));
    long long u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v)) throw Error("edge list: dangling endpoint");
        if (u < 0 || v < 0 || u >= n || v >= n) throw Error("edge list: endpoint out of range");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) throw Error("edge list: unexpected token");
    return g;
}

}  // namespace ccn

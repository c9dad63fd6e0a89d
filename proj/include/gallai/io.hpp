#ifndef GALLAI_IO_HPP
#define GALLAI_IO_HPP

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "gallai/graph.hpp"

namespace gallai {

// graph6, short form only (n <= 62): byte 0 is n+63, then the upper triangle
// in column order ((0,1),(0,2),(1,2),(0,3),...) packed 6 bits per byte, high
// bit first, zero padded, each byte offset by 63.
inline std::string emit_graph6(const SimpleGraph& g) {
    if (g.n > kMaxVertices) throw std::invalid_argument("graph6 short form needs n <= 62");
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int nbits = g.n * (g.n - 1) / 2;
    int acc = 0, filled = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (nbits % 6 != 0) out.push_back(static_cast<char>((acc << (6 - nbits % 6)) + 63));
    return out;
}

inline SimpleGraph parse_graph6(const std::string& line) {
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    size_t pos = 0;
    if (line[0] == '>') {  // optional ">>graph6<<" header
        const std::string hdr = ">>graph6<<";
        if (line.rfind(hdr, 0) != 0) throw std::invalid_argument("graph6: bad header");
        pos = hdr.size();
    }
    if (pos >= line.size()) throw std::invalid_argument("graph6: missing order byte");
    unsigned char c0 = static_cast<unsigned char>(line[pos]);
    if (c0 == 126) throw std::invalid_argument("graph6: long form (n > 62) unsupported");
    if (c0 < 63 || c0 > 125) throw std::invalid_argument("graph6: malformed order byte");
    int n = c0 - 63;
    ++pos;
    int nbits = n * (n - 1) / 2;
    int nbytes = (nbits + 5) / 6;
    if (static_cast<int>(line.size() - pos) != nbytes)
        throw std::invalid_argument("graph6: length mismatch for n = " + std::to_string(n));
    std::vector<Edge> es;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            unsigned char b = static_cast<unsigned char>(line[pos + static_cast<size_t>(bit / 6)]);
            if (b < 63 || b > 126) throw std::invalid_argument("graph6: malformed data byte");
            if (((b - 63) >> (5 - bit % 6)) & 1) es.emplace_back(i, j);
        }
    // padding bits must be zero for a byte-exact round trip
    for (int k = nbits; k < nbytes * 6; ++k) {
        unsigned char b = static_cast<unsigned char>(line[pos + static_cast<size_t>(k / 6)]);
        if (((b - 63) >> (5 - k % 6)) & 1) throw std::invalid_argument("graph6: nonzero padding");
    }
    return SimpleGraph(n, std::move(es));
}

// edge list: first data line "n m", then m lines "u v". Blank lines and '#'
// comments are skipped anywhere.
inline SimpleGraph parse_edge_list(std::istream& in) {
    auto next_line = [&in](std::string& s) {
        while (std::getline(in, s)) {
            size_t i = s.find_first_not_of(" \t\r");
            if (i == std::string::npos || s[i] == '#') continue;
            return true;
        }
        return false;
    };
    std::string line;
    if (!next_line(line)) throw std::invalid_argument("edge list: missing header");
    std::istringstream hdr(line);
    int n = 0, m = 0;
    if (!(hdr >> n >> m)) throw std::invalid_argument("edge list: bad header '" + line + "'");
    std::vector<Edge> es;
    es.reserve(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k) {
        if (!next_line(line)) throw std::invalid_argument("edge list: expected " + std::to_string(m) + " edges");
        std::istringstream row(line);
        int u = 0, v = 0;
        if (!(row >> u >> v)) throw std::invalid_argument("edge list: bad edge line '" + line + "'");
        es.emplace_back(u, v);
    }
    return SimpleGraph(n, std::move(es));
}

inline SimpleGraph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline std::string emit_edge_list(const SimpleGraph& g) {
    std::ostringstream out;
    out << g.n << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace gallai

#endif

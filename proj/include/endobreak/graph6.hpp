#ifndef ENDOBREAK_GRAPH6_HPP
#define ENDOBREAK_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "endobreak/graph.hpp"

namespace endobreak {

/// Failure modes of the graph6 parser, each reported distinctly.
enum class Graph6ErrorKind {
    MalformedHeader,   // bad or unsupported order encoding
    OutOfRangeByte,    // byte outside the printable 63..126 range
    TruncatedBits,     // adjacency bit-vector shorter than required
    TrailingData,      // extra bytes after the bit-vector
    NonzeroPadding,    // padding bits of the last byte are not zero
};

class Graph6Error : public std::runtime_error {
public:
    Graph6Error(Graph6ErrorKind kind, const std::string& msg)
        : std::runtime_error(msg), kind_(kind) {}
    Graph6ErrorKind kind() const { return kind_; }

private:
    Graph6ErrorKind kind_;
};

/// Encodes a graph in graph6: N(n) header followed by the upper-triangle
/// adjacency bits x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 per byte,
/// big-endian within a byte, each byte offset by 63.
inline std::string write_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw std::invalid_argument("write_graph6: order too large");
    }
    int acc = 0, nbits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    if (text.empty())
        throw Graph6Error(Graph6ErrorKind::MalformedHeader, "graph6: empty input");
    for (char c : text)
        if (static_cast<unsigned char>(c) < 63 || static_cast<unsigned char>(c) > 126)
            throw Graph6Error(Graph6ErrorKind::OutOfRangeByte,
                              "graph6: byte outside printable range 63..126");
    std::size_t pos = 0;
    long long n;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() >= 2 && text[1] == 126)
            throw Graph6Error(Graph6ErrorKind::MalformedHeader,
                              "graph6: orders above 258047 not supported");
        if (text.size() < 4)
            throw Graph6Error(Graph6ErrorKind::MalformedHeader, "graph6: truncated header");
        n = (static_cast<long long>(text[1] - 63) << 12) |
            (static_cast<long long>(text[2] - 63) << 6) | (text[3] - 63);
        pos = 4;
    }
    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (text.size() - pos < nbytes)
        throw Graph6Error(Graph6ErrorKind::TruncatedBits,
                          "graph6: adjacency bit-vector is truncated");
    if (text.size() - pos > nbytes)
        throw Graph6Error(Graph6ErrorKind::TrailingData, "graph6: trailing bytes");
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = text[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    // Unused low bits of the final byte must be zero padding.
    if (nbytes > 0) {
        int pad = static_cast<int>(6 * nbytes - nbits);
        int last = text[pos + nbytes - 1] - 63;
        if (pad > 0 && (last & ((1 << pad) - 1)) != 0)
            throw Graph6Error(Graph6ErrorKind::NonzeroPadding,
                              "graph6: nonzero padding bits");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace endobreak

#endif

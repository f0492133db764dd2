#pragma once

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace mdis {

// Plain text edge list: first line is the vertex count, then one "u v" pair
// per line, 0-indexed.
inline std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << '\n';
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int u : g.neighbors(v))
            if (u > v) out << v << ' ' << u << '\n';
    return out.str();
}

inline Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    int n;
    if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
    Graph g(n);
    int u, v;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
        g.add_edge(u, v);
    }
    return g;
}

// graph6: the standard printable encoding. One byte (or, for n >= 63, a '~'
// and three bytes) holds the vertex count; the upper triangle follows in
// column order, six bits per printable byte.
inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    }
    int bits = 0, count = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            bits = (bits << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++count == 6) {
                out += static_cast<char>(bits + 63);
                bits = 0;
                count = 0;
            }
        }
    if (count > 0) out += static_cast<char>((bits << (6 - count)) + 63);
    return out;
}

inline Graph from_graph6(std::string_view s) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
        return c - 63;
    };
    int n;
    if (!s.empty() && s[0] == '~') {
        ++pos;
        int a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    Graph g(n);
    int bits = 0, count = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (count == 0) {
                bits = next();
                count = 6;
            }
            if ((bits >> (count - 1)) & 1) g.add_edge(i, j);
            --count;
        }
    if (pos != s.size()) throw std::invalid_argument("graph6: trailing bytes");
    return g;
}

} // namespace mdis

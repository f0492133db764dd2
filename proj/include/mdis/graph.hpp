#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "vertex_set.hpp"

namespace mdis {

// Simple undirected graph on at most 64 vertices, adjacency kept as one
// VertexSet row per vertex.
class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 1 || n > VertexSet::max_vertices)
            throw std::invalid_argument("Graph: vertex count must be in [1, 64]");
    }

    int vertex_count() const { return n_; }
    VertexSet vertices() const { return VertexSet::full(n_); }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        adj_[static_cast<std::size_t>(u)].add(v);
        adj_[static_cast<std::size_t>(v)].add(u);
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return adj_[static_cast<std::size_t>(u)].contains(v);
    }

    VertexSet neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return neighbors(v).size(); }

    int edge_count() const {
        int twice = 0;
        for (const VertexSet& row : adj_) twice += row.size();
        return twice / 2;
    }

    // Union of neighborhoods of all vertices in s.
    VertexSet neighbors_of_set(VertexSet s) const {
        VertexSet out;
        for (int v : s) out |= adj_[static_cast<std::size_t>(v)];
        return out;
    }

    // Vertices reachable from v.
    VertexSet component_of(int v) const {
        check_vertex(v);
        VertexSet seen = VertexSet::single(v);
        VertexSet frontier = seen;
        while (!frontier.empty()) {
            frontier = neighbors_of_set(frontier) - seen;
            seen |= frontier;
        }
        return seen;
    }

    bool is_connected() const { return component_of(0) == vertices(); }

    friend bool operator==(const Graph& a, const Graph& b) = default;

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    }

    int n_;
    std::vector<VertexSet> adj_;
};

// A connected acyclic Graph; the constructor enforces the invariant.
class Tree {
public:
    explicit Tree(Graph g) : g_(std::move(g)) {
        if (g_.edge_count() != g_.vertex_count() - 1)
            throw std::invalid_argument("Tree: edge count must be n - 1");
        if (!g_.is_connected())
            throw std::invalid_argument("Tree: graph is not connected");
    }

    const Graph& graph() const { return g_; }
    operator const Graph&() const { return g_; }

    int vertex_count() const { return g_.vertex_count(); }
    VertexSet vertices() const { return g_.vertices(); }
    VertexSet neighbors(int v) const { return g_.neighbors(v); }
    int degree(int v) const { return g_.degree(v); }
    bool has_edge(int u, int v) const { return g_.has_edge(u, v); }

    friend bool operator==(const Tree& a, const Tree& b) = default;

private:
    Graph g_;
};

// All pairwise distances; 0xff marks an unreachable pair.
class DistanceTable {
public:
    static constexpr std::uint8_t unreachable = 0xff;

    explicit DistanceTable(int n)
        : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), unreachable) {}

    int vertex_count() const { return n_; }

    std::uint8_t at(int u, int v) const {
        return d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)];
    }

    bool reachable(int u, int v) const { return at(u, v) != unreachable; }

    void set(int u, int v, std::uint8_t dist) {
        d_[static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v)] = dist;
    }

private:
    int n_;
    std::vector<std::uint8_t> d_;
};

inline DistanceTable distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceTable table(n);
    for (int s = 0; s < n; ++s) {
        VertexSet seen = VertexSet::single(s);
        VertexSet frontier = seen;
        std::uint8_t d = 0;
        table.set(s, s, 0);
        while (!frontier.empty()) {
            frontier = g.neighbors_of_set(frontier) - seen;
            ++d;
            for (int v : frontier) table.set(s, v, d);
            seen |= frontier;
        }
    }
    return table;
}

// Closed ball N_s[v]: vertices at distance at most s from v.
inline VertexSet ball(const Graph& g, int v, int s) {
    if (s < 0) throw std::invalid_argument("ball: negative radius");
    VertexSet b = VertexSet::single(v);
    for (int i = 0; i < s; ++i) {
        VertexSet grown = b | g.neighbors_of_set(b);
        if (grown == b) break;
        b = grown;
    }
    return b;
}

// Sphere N_s(v): vertices at distance exactly s from v.
inline VertexSet sphere(const Graph& g, int v, int s) {
    if (s < 0) throw std::invalid_argument("sphere: negative radius");
    if (s == 0) return VertexSet::single(v);
    return ball(g, v, s) - ball(g, v, s - 1);
}

inline int eccentricity(const Tree& t, int v) {
    const Graph& g = t.graph();
    VertexSet seen = VertexSet::single(v);
    VertexSet frontier = seen;
    int d = 0;
    while (true) {
        VertexSet next = g.neighbors_of_set(frontier) - seen;
        if (next.empty()) return d;
        seen |= next;
        frontier = next;
        ++d;
    }
}

inline int diameter(const Tree& t) {
    int best = 0;
    for (int v : t.vertices()) best = std::max(best, eccentricity(t, v));
    return best;
}

// Central vertices: those of minimum eccentricity (one or two in a tree).
inline VertexSet center(const Tree& t) {
    const int n = t.vertex_count();
    std::vector<int> ecc(static_cast<std::size_t>(n));
    int best = n;
    for (int v = 0; v < n; ++v) {
        ecc[static_cast<std::size_t>(v)] = eccentricity(t, v);
        best = std::min(best, ecc[static_cast<std::size_t>(v)]);
    }
    VertexSet c;
    for (int v = 0; v < n; ++v)
        if (ecc[static_cast<std::size_t>(v)] == best) c.add(v);
    return c;
}

inline int radius(const Tree& t) {
    return eccentricity(t, center(t).front());
}

// Subgraph induced by `keep`, vertices relabeled in ascending order.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
    if (keep.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
    int label[VertexSet::max_vertices];
    int m = 0;
    for (int v : keep) label[v] = m++;
    Graph out(m);
    for (int v : keep)
        for (int u : g.neighbors(v) & keep)
            if (u > v) out.add_edge(label[v], label[u]);
    return out;
}

// Tree with one leaf removed; remaining vertices are relabeled in order.
inline Tree remove_leaf(const Tree& t, int leaf) {
    if (t.vertex_count() == 1) throw std::invalid_argument("remove_leaf: single-vertex tree");
    if (t.degree(leaf) != 1) throw std::invalid_argument("remove_leaf: vertex is not a leaf");
    return Tree(induced_subgraph(t.graph(), t.vertices().without(leaf)));
}

// Tree with one extra leaf attached to `anchor`; the new vertex gets label n.
inline Tree add_leaf(const Tree& t, int anchor) {
    const int n = t.vertex_count();
    Graph g(n + 1);
    for (int v = 0; v < n; ++v)
        for (int u : t.neighbors(v))
            if (u > v) g.add_edge(v, u);
    g.add_edge(anchor, n);
    return Tree(std::move(g));
}

// Disjoint union; vertices of b are shifted up by a.vertex_count().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.vertex_count();
    Graph g(na + b.vertex_count());
    for (int v = 0; v < na; ++v)
        for (int u : a.neighbors(v))
            if (u > v) g.add_edge(v, u);
    for (int v = 0; v < b.vertex_count(); ++v)
        for (int u : b.neighbors(v))
            if (u > v) g.add_edge(na + v, na + u);
    return g;
}

inline Tree path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return Tree(std::move(g));
}

// Star on n vertices, hub labeled 0.
inline Tree star_graph(int n) {
    Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return Tree(std::move(g));
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

// Circulant graph: i ~ i +- o (mod n) for each offset o.
inline Graph circulant_graph(int n, std::span<const int> offsets) {
    if (n < 3) throw std::invalid_argument("circulant_graph: need at least 3 vertices");
    Graph g(n);
    for (int o : offsets) {
        if (o < 1 || o > n / 2)
            throw std::invalid_argument("circulant_graph: offset out of [1, n/2]");
        for (int v = 0; v < n; ++v) g.add_edge(v, (v + o) % n);
    }
    return g;
}

// d-dimensional hypercube on 2^d vertices; labels are coordinate masks.
inline Graph hypercube_graph(int d) {
    if (d < 1 || d > 6) throw std::invalid_argument("hypercube_graph: dimension out of [1, 6]");
    const int n = 1 << d;
    Graph g(n);
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
    return g;
}

} // namespace mdis

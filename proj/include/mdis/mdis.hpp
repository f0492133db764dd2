#pragma once

#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace mdis {

// A set J of vertices is distance-k independent when every two members are
// more than k apart, and maximal when every outside vertex has a member
// within distance k. Such sets are exactly the maximal independent sets of
// the k-th graph power, which is where all routines below operate.

inline Graph power_graph(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("power_graph: k must be positive");
    DistanceTable dist = distances(g);
    Graph p(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (dist.reachable(u, v) && dist.at(u, v) <= k) p.add_edge(u, v);
    return p;
}

inline bool is_k_independent(const Graph& g, int k, VertexSet s) {
    Graph p = power_graph(g, k);
    for (int u : s)
        if (p.neighbors(u).intersects(s)) return false;
    return true;
}

inline bool is_k_mdis(const Graph& g, int k, VertexSet s) {
    Graph p = power_graph(g, k);
    for (int u : s)
        if (p.neighbors(u).intersects(s)) return false;
    VertexSet outside = VertexSet::full(g.vertex_count()) - s;
    for (int w : outside)
        if (!p.neighbors(w).intersects(s)) return false;
    return true;
}

namespace detail {

// Bron-Kerbosch with pivoting over the complement of the power graph;
// compat[u] lists the vertices more than k away from u. Candidates are
// scanned in ascending order so the visit order is deterministic.
template <class Sink>
void maximal_cliques(const std::vector<VertexSet>& compat, VertexSet r, VertexSet p, VertexSet x,
                     Sink&& sink) {
    if (p.empty() && x.empty()) {
        sink(r);
        return;
    }
    int pivot = -1;
    int best = -1;
    for (int u : p | x) {
        int score = (p & compat[u]).size();
        if (score > best) {
            best = score;
            pivot = u;
        }
    }
    for (int v : p - compat[pivot]) {
        maximal_cliques(compat, r.with(v), p & compat[v], x & compat[v], sink);
        p.remove(v);
        x.add(v);
    }
}

inline std::vector<VertexSet> compatibility(const Graph& g, int k) {
    Graph p = power_graph(g, k);
    std::vector<VertexSet> compat(static_cast<std::size_t>(g.vertex_count()));
    VertexSet all = VertexSet::full(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        compat[static_cast<std::size_t>(u)] = all - p.neighbors(u).with(u);
    return compat;
}

} // namespace detail

struct MdisFamily {
    int vertex_count = 0;
    int k = 0;
    std::vector<VertexSet> sets;

    long long count() const { return static_cast<long long>(sets.size()); }
};

inline MdisFamily enumerate_mdis(const Graph& g, int k) {
    std::vector<VertexSet> compat = detail::compatibility(g, k);
    MdisFamily family{g.vertex_count(), k, {}};
    detail::maximal_cliques(compat, VertexSet{}, VertexSet::full(g.vertex_count()), VertexSet{},
                            [&](VertexSet s) { family.sets.push_back(s); });
    std::sort(family.sets.begin(), family.sets.end());
    return family;
}

inline long long mdi(const Graph& g, int k) {
    std::vector<VertexSet> compat = detail::compatibility(g, k);
    long long count = 0;
    detail::maximal_cliques(compat, VertexSet{}, VertexSet::full(g.vertex_count()), VertexSet{},
                            [&](VertexSet) { ++count; });
    return count;
}

// Number of maximal distance-k independent sets J of t that contain the
// leaf and keep some outside vertex covered by the leaf alone. Removing
// the leaf destroys exactly these sets, so
// mdi(t) = mdi(t minus leaf) + mdi_star(t, leaf).
inline long long mdi_star(const Tree& t, int leaf, int k) {
    if (t.vertex_count() == 1) throw std::invalid_argument("mdi_star: tree has no removable leaf");
    if (t.degree(leaf) != 1) throw std::invalid_argument("mdi_star: vertex is not a leaf");
    std::vector<VertexSet> balls(static_cast<std::size_t>(t.vertex_count()));
    for (int v = 0; v < t.vertex_count(); ++v)
        balls[static_cast<std::size_t>(v)] = ball(t.graph(), v, k);
    MdisFamily family = enumerate_mdis(t.graph(), k);
    long long count = 0;
    for (VertexSet j : family.sets) {
        if (!j.contains(leaf)) continue;
        VertexSet outside = VertexSet::full(t.vertex_count()) - j;
        for (int w : outside)
            if ((balls[static_cast<std::size_t>(w)] & j) == VertexSet::single(leaf)) {
                ++count;
                break;
            }
    }
    return count;
}

} // namespace mdis

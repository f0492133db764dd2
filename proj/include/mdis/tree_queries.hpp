#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace mdis {

// Degree-1 vertices; a single-vertex tree counts as one leaf.
inline VertexSet leaves(const Tree& t) {
    if (t.vertex_count() == 1) return VertexSet::single(0);
    VertexSet out;
    for (int v : t.vertices())
        if (t.degree(v) == 1) out.add(v);
    return out;
}

inline VertexSet branching_vertices(const Tree& t) {
    VertexSet out;
    for (int v : t.vertices())
        if (t.degree(v) >= 3) out.add(v);
    return out;
}

// Leaves of maximum eccentricity among all leaves.
inline VertexSet diametral_leaves(const Tree& t) {
    VertexSet ls = leaves(t);
    int best = -1;
    for (int v : ls) best = std::max(best, eccentricity(t, v));
    VertexSet out;
    for (int v : ls)
        if (eccentricity(t, v) == best) out.add(v);
    return out;
}

// Leaves of minimum eccentricity among all leaves.
inline VertexSet central_leaves(const Tree& t) {
    VertexSet ls = leaves(t);
    int best = t.vertex_count() + 1;
    for (int v : ls) best = std::min(best, eccentricity(t, v));
    VertexSet out;
    for (int v : ls)
        if (eccentricity(t, v) == best) out.add(v);
    return out;
}

// Pendant paths: maximal paths containing a leaf but no branching vertex,
// listed leaf first. In a tree with branching vertices each path runs from
// its leaf up to, but excluding, the first branching vertex. A bare path
// has no branching vertices; there the two pendant paths run from each end
// up to, but excluding, the central vertices.
inline std::vector<std::vector<int>> pendant_paths(const Tree& t) {
    std::vector<std::vector<int>> out;
    VertexSet branch = branching_vertices(t);
    VertexSet stop = branch.empty() ? center(t) : branch;
    if (t.vertex_count() <= 2) return out;
    for (int leaf : leaves(t)) {
        if (stop.contains(leaf)) continue;
        std::vector<int> path{leaf};
        int prev = -1, cur = leaf;
        while (true) {
            VertexSet nb = t.neighbors(cur);
            if (prev >= 0) nb.remove(prev);
            int next = nb.front();
            if (stop.contains(next)) break;
            path.push_back(next);
            prev = cur;
            cur = next;
        }
        out.push_back(std::move(path));
    }
    return out;
}

// Vertex sets of the main subtrees: connected components left after the
// central vertices are removed. Empty for a single vertex or single edge.
inline std::vector<VertexSet> main_subtree_sets(const Tree& t) {
    VertexSet rest = t.vertices() - center(t);
    std::vector<VertexSet> out;
    while (!rest.empty()) {
        int v = rest.front();
        VertexSet comp = VertexSet::single(v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            frontier = (t.graph().neighbors_of_set(frontier) & rest) - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        rest -= comp;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Tree> main_subtrees(const Tree& t) {
    std::vector<Tree> out;
    for (VertexSet s : main_subtree_sets(t))
        out.push_back(Tree(induced_subgraph(t.graph(), s)));
    return out;
}

namespace detail {

inline void require_twin_radius(int k) {
    if (k < 2) throw std::invalid_argument("twin queries need k >= 2");
}

inline std::vector<VertexSet> all_balls(const Tree& t, int k) {
    std::vector<VertexSet> balls;
    balls.reserve(static_cast<std::size_t>(t.vertex_count()));
    for (int v : t.vertices()) balls.push_back(ball(t.graph(), v, k));
    return balls;
}

} // namespace detail

// u is a k-twin if some other vertex has the same closed k-ball.
inline bool is_k_twin(const Tree& t, int u, int k) {
    detail::require_twin_radius(k);
    VertexSet bu = ball(t.graph(), u, k);
    for (int v : t.vertices())
        if (v != u && ball(t.graph(), v, k) == bu) return true;
    return false;
}

inline VertexSet k_twins(const Tree& t, int k) {
    detail::require_twin_radius(k);
    std::vector<VertexSet> balls = detail::all_balls(t, k);
    const int n = t.vertex_count();
    VertexSet out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (balls[static_cast<std::size_t>(u)] == balls[static_cast<std::size_t>(v)]) {
                out.add(u);
                out.add(v);
            }
    return out;
}

// Diametral leaves that are k-twins.
inline VertexSet diametral_k_twins(const Tree& t, int k) {
    return diametral_leaves(t) & k_twins(t, k);
}

// Pairs (x, y), x < y, of diametral leaves that are both k-twins but have
// different closed k-balls.
inline std::vector<std::pair<int, int>> k_special_pairs(const Tree& t, int k) {
    detail::require_twin_radius(k);
    std::vector<std::pair<int, int>> out;
    VertexSet candidates = diametral_k_twins(t, k);
    std::vector<VertexSet> balls = detail::all_balls(t, k);
    for (int x : candidates)
        for (int y : candidates) {
            if (y <= x) continue;
            if (balls[static_cast<std::size_t>(x)] != balls[static_cast<std::size_t>(y)])
                out.emplace_back(x, y);
        }
    return out;
}

// One reduction step: every k-twin leaf together with the tree it leaves
// behind, in ascending leaf order.
inline std::vector<std::pair<int, Tree>> reduce_step(const Tree& t, int k) {
    detail::require_twin_radius(k);
    std::vector<std::pair<int, Tree>> out;
    if (t.vertex_count() == 1) return out;
    VertexSet twin_leaves = leaves(t) & k_twins(t, k);
    for (int u : twin_leaves) out.emplace_back(u, remove_leaf(t, u));
    return out;
}

// Whether m successive twin-leaf deletions are possible from t.
inline bool is_m_reducible(const Tree& t, int k, int m) {
    detail::require_twin_radius(k);
    if (m < 0) throw std::invalid_argument("is_m_reducible: negative step count");
    if (m == 0) return true;
    for (const auto& [u, sub] : reduce_step(t, k))
        if (is_m_reducible(sub, k, m - 1)) return true;
    return false;
}

} // namespace mdis

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace mdis {

namespace detail {

// Kuhn's augmenting-path matching on a small bipartite graph given as
// left-vertex adjacency masks over right vertices.
class BipartiteMatcher {
public:
    explicit BipartiteMatcher(int right_size) : match_(static_cast<std::size_t>(right_size), -1) {}

    bool full_match(const std::vector<std::uint64_t>& left_adj) {
        std::fill(match_.begin(), match_.end(), -1);
        for (std::size_t l = 0; l < left_adj.size(); ++l) {
            seen_ = 0;
            if (!augment(static_cast<int>(l), left_adj)) return false;
        }
        return true;
    }

private:
    bool augment(int l, const std::vector<std::uint64_t>& left_adj) {
        std::uint64_t options = left_adj[static_cast<std::size_t>(l)] & ~seen_;
        while (options) {
            int r = std::countr_zero(options);
            options &= options - 1;
            seen_ |= std::uint64_t{1} << r;
            if (match_[static_cast<std::size_t>(r)] < 0 ||
                augment(match_[static_cast<std::size_t>(r)], left_adj)) {
                match_[static_cast<std::size_t>(r)] = l;
                return true;
            }
        }
        return false;
    }

    std::vector<int> match_;
    std::uint64_t seen_ = 0;
};

} // namespace detail

// Whether `pattern` is isomorphic to a subtree of `host`. The host is rooted
// once; a rooted embedding is tried for every (pattern vertex, host vertex)
// anchor pair. emb[e][m] answers whether the pattern subtree hanging from
// directed edge e embeds at host vertex m mapping e's head to m; each step
// assigns pattern children to distinct host children via bipartite matching.
inline bool contains_subtree(const Tree& host, const Tree& pattern) {
    const int nh = host.vertex_count();
    const int np = pattern.vertex_count();
    if (np > nh) return false;
    if (np == 1) return true;

    // Root the host at 0; order[] puts children before parents.
    std::vector<int> parent(static_cast<std::size_t>(nh), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(nh));
    order.push_back(0);
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int u : host.neighbors(v))
            if (u != parent[static_cast<std::size_t>(v)]) {
                parent[static_cast<std::size_t>(u)] = v;
                order.push_back(u);
            }
    }
    std::vector<std::vector<int>> host_children(static_cast<std::size_t>(nh));
    for (int v = 1; v < nh; ++v)
        host_children[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])].push_back(v);

    // Directed pattern edges (head, tail): the subtree hanging from head
    // when approached from tail.
    std::vector<std::vector<int>> dir_id(static_cast<std::size_t>(np),
                                         std::vector<int>(static_cast<std::size_t>(np), -1));
    std::vector<std::pair<int, int>> dirs;
    for (int v = 0; v < np; ++v)
        for (int u : pattern.neighbors(v)) {
            dir_id[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] =
                static_cast<int>(dirs.size());
            dirs.emplace_back(v, u);
        }

    std::vector<std::vector<char>> emb(dirs.size(),
                                       std::vector<char>(static_cast<std::size_t>(nh), 0));
    detail::BipartiteMatcher matcher(nh);

    auto children_embed = [&](int head, int avoid, int m) {
        std::vector<std::uint64_t> left;
        for (int c : pattern.neighbors(head)) {
            if (c == avoid) continue;
            std::uint64_t row = 0;
            int e = dir_id[static_cast<std::size_t>(c)][static_cast<std::size_t>(head)];
            for (int hc : host_children[static_cast<std::size_t>(m)])
                if (emb[static_cast<std::size_t>(e)][static_cast<std::size_t>(hc)])
                    row |= std::uint64_t{1} << hc;
            if (row == 0) return false;
            left.push_back(row);
        }
        if (left.empty()) return true;
        if (left.size() > host_children[static_cast<std::size_t>(m)].size()) return false;
        return matcher.full_match(left);
    };

    // Children-first host order makes every emb[][] lookup already final.
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int m = *it;
        for (std::size_t e = 0; e < dirs.size(); ++e) {
            auto [head, tail] = dirs[e];
            emb[e][static_cast<std::size_t>(m)] =
                children_embed(head, tail, m) ? 1 : 0;
        }
        for (int q = 0; q < np; ++q)
            if (children_embed(q, -1, m)) return true;
    }
    return false;
}

} // namespace mdis

#pragma once

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace mdis {

// Enumeration of all unlabeled free trees on n vertices using the
// level-sequence successor technique of Wright, Richmond, Odlyzko and
// McKay. A rooted tree is a layout [l_0 .. l_{n-1}] giving each vertex's
// distance from the root in preorder; the stream walks canonical rooted
// layouts in decreasing lexicographic order, keeping exactly those that
// are the canonical rooting of their free tree and jumping over maximal
// runs of rejected layouts in one step.

inline constexpr int max_treegen_vertices = 20;

namespace detail {

using Layout = std::vector<int>;

// Beyer-Hedetniemi successor of a canonical rooted layout. p, when given,
// truncates at that position instead of the last entry above level 1.
inline std::optional<Layout> next_rooted_layout(const Layout& prev, int p = -1) {
    if (p < 0) {
        p = static_cast<int>(prev.size()) - 1;
        while (prev[static_cast<std::size_t>(p)] == 1) --p;
    }
    if (p == 0) return std::nullopt;
    int q = p - 1;
    while (prev[static_cast<std::size_t>(q)] != prev[static_cast<std::size_t>(p)] - 1) --q;
    Layout result = prev;
    for (std::size_t i = static_cast<std::size_t>(p); i < result.size(); ++i)
        result[i] = result[i - static_cast<std::size_t>(p - q)];
    return result;
}

// Splits a layout into the root's first subtree (levels shifted down by
// one) and the remainder (root plus the other subtrees).
inline std::pair<Layout, Layout> split_layout(const Layout& layout) {
    std::size_t m = layout.size();
    bool one_found = false;
    for (std::size_t i = 0; i < layout.size(); ++i)
        if (layout[i] == 1) {
            if (one_found) {
                m = i;
                break;
            }
            one_found = true;
        }
    Layout left, rest;
    for (std::size_t i = 1; i < m; ++i) left.push_back(layout[i] - 1);
    rest.push_back(0);
    for (std::size_t i = m; i < layout.size(); ++i) rest.push_back(layout[i]);
    return {std::move(left), std::move(rest)};
}

// Returns `candidate` when it is the canonical rooting of a free tree,
// otherwise the next layout that is. The rooting is canonical when the
// first subtree does not outgrow the rest in height, then size, then
// lexicographic order.
inline Layout free_layout_at_or_after(Layout candidate) {
    auto [left, rest] = split_layout(candidate);
    int left_height = *std::max_element(left.begin(), left.end());
    int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left.size() > rest.size())
            valid = false;
        else if (left.size() == rest.size() &&
                 std::lexicographical_compare(rest.begin(), rest.end(), left.begin(), left.end()))
            valid = false;
    }
    if (valid) return candidate;

    int p = static_cast<int>(left.size());
    std::optional<Layout> next = next_rooted_layout(candidate, p);
    Layout result = std::move(*next);
    if (candidate[static_cast<std::size_t>(p)] > 2) {
        auto [new_left, new_rest] = split_layout(result);
        int new_height = *std::max_element(new_left.begin(), new_left.end());
        std::size_t len = static_cast<std::size_t>(new_height) + 1;
        for (std::size_t i = 0; i < len; ++i)
            result[result.size() - len + i] = static_cast<int>(i) + 1;
    }
    return result;
}

// Each vertex attaches to the nearest earlier vertex one level up.
inline Tree layout_to_tree(const Layout& layout) {
    Graph g(static_cast<int>(layout.size()));
    std::vector<int> stack;
    for (std::size_t i = 0; i < layout.size(); ++i) {
        if (!stack.empty()) {
            while (layout[static_cast<std::size_t>(stack.back())] >= layout[i]) stack.pop_back();
            g.add_edge(static_cast<int>(i), stack.back());
        }
        stack.push_back(static_cast<int>(i));
    }
    return Tree(std::move(g));
}

} // namespace detail

// Single-consumer stream of all free trees on n vertices in a fixed order,
// optionally thinned to every total-th tree starting at `shard`.
class TreeStream {
public:
    explicit TreeStream(int n) : TreeStream(n, 0, 1) {}

    TreeStream(int n, int shard, int total) : n_(n), shard_(shard), total_(total) {
        if (n < 1 || n > max_treegen_vertices)
            throw std::invalid_argument("TreeStream: vertex count must be in [1, 20]");
        if (total < 1 || shard < 0 || shard >= total)
            throw std::invalid_argument("TreeStream: bad shard");
        if (n == 1) return;
        // Start from the path rooted at its center, the lexicographically
        // greatest canonical layout.
        for (int i = 0; i <= n / 2; ++i) layout_.push_back(i);
        for (int i = 1; i <= (n + 1) / 2 - 1; ++i) layout_.push_back(i);
    }

    std::optional<Tree> next() {
        if (n_ == 1) {
            if (exhausted_) return std::nullopt;
            exhausted_ = true;
            if (shard_ == 0) return Tree(Graph(1));
            return std::nullopt;
        }
        while (!exhausted_) {
            layout_ = detail::free_layout_at_or_after(std::move(layout_));
            bool take = index_ % total_ == shard_;
            ++index_;
            std::optional<Tree> out;
            if (take) out = detail::layout_to_tree(layout_);
            std::optional<detail::Layout> successor = detail::next_rooted_layout(layout_);
            if (successor)
                layout_ = std::move(*successor);
            else
                exhausted_ = true;
            if (take) return out;
        }
        return std::nullopt;
    }

private:
    int n_;
    int shard_;
    int total_;
    long long index_ = 0;
    detail::Layout layout_;
    bool exhausted_ = false;
};

inline TreeStream all_free_trees(int n) { return TreeStream(n); }

inline TreeStream stream_partition(int n, int shard, int total) {
    return TreeStream(n, shard, total);
}

template <class F>
void for_each_tree(int n, F&& f) {
    TreeStream stream(n);
    while (std::optional<Tree> t = stream.next()) f(*t);
}

// Number of unlabeled free trees on n vertices, memoized.
inline long long tree_count(int n) {
    if (n < 1 || n > max_treegen_vertices)
        throw std::invalid_argument("tree_count: vertex count must be in [1, 20]");
    static long long cache[max_treegen_vertices + 1] = {};
    static std::mutex lock;
    std::scoped_lock guard(lock);
    if (cache[n] == 0) {
        long long count = 0;
        for_each_tree(n, [&](const Tree&) { ++count; });
        cache[n] = count;
    }
    return cache[n];
}

} // namespace mdis

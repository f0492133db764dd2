#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "graph.hpp"

namespace mdis {

// Canonical form of an unlabeled tree: the rooted encoding "(" children ")"
// with child encodings sorted, rooted at the center (the smaller of the two
// rootings when the tree is bicentral). Two trees are isomorphic exactly
// when their keys are equal.
struct CanonicalForm {
    std::string key;

    int vertex_count() const { return static_cast<int>(key.size()) / 2; }

    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) = default;
    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) = default;
};

namespace detail {

inline std::string rooted_encoding(const Tree& t, int v, int parent) {
    std::vector<std::string> parts;
    for (int u : t.neighbors(v))
        if (u != parent) parts.push_back(rooted_encoding(t, u, v));
    std::sort(parts.begin(), parts.end());
    std::string out = "(";
    for (const std::string& p : parts) out += p;
    out += ')';
    return out;
}

} // namespace detail

inline CanonicalForm canonical_form(const Tree& t) {
    CanonicalForm best;
    for (int c : center(t)) {
        std::string enc = detail::rooted_encoding(t, c, -1);
        if (best.key.empty() || enc < best.key) best.key = std::move(enc);
    }
    return best;
}

inline bool is_isomorphic(const Tree& a, const Tree& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

// Representative tree of a canonical form, labeled in preorder of the key.
inline Tree canonical_tree(const CanonicalForm& form) {
    const std::string& key = form.key;
    if (key.empty() || key.size() % 2 != 0)
        throw std::invalid_argument("canonical_tree: malformed key");
    Graph g(static_cast<int>(key.size()) / 2);
    std::vector<int> stack;
    int next = 0;
    for (char c : key) {
        if (c == '(') {
            if (!stack.empty()) g.add_edge(stack.back(), next);
            stack.push_back(next++);
        } else if (c == ')') {
            if (stack.empty()) throw std::invalid_argument("canonical_tree: malformed key");
            stack.pop_back();
        } else {
            throw std::invalid_argument("canonical_tree: malformed key");
        }
    }
    if (!stack.empty()) throw std::invalid_argument("canonical_tree: malformed key");
    return Tree(std::move(g));
}

namespace detail {

// Automorphisms of the subtree rooted at v: the product over children of
// their own counts, times a factorial for every group of identical child
// encodings. Returns the encoding so groups can be detected on the way up.
inline unsigned long long rooted_aut(const Tree& t, int v, int parent, std::string& enc_out) {
    std::vector<std::string> encs;
    unsigned long long aut = 1;
    for (int u : t.neighbors(v))
        if (u != parent) {
            std::string enc;
            aut *= rooted_aut(t, u, v, enc);
            encs.push_back(std::move(enc));
        }
    std::sort(encs.begin(), encs.end());
    for (std::size_t i = 0; i < encs.size();) {
        std::size_t j = i;
        while (j < encs.size() && encs[j] == encs[i]) ++j;
        for (std::size_t run = 2; run <= j - i; ++run) aut *= run;
        i = j;
    }
    enc_out = "(";
    for (const std::string& e : encs) enc_out += e;
    enc_out += ')';
    return aut;
}

} // namespace detail

// |Aut(T)| for the free tree. Exact in 64 bits up to the 20-vertex cap.
inline unsigned long long automorphism_count(const Tree& t) {
    VertexSet c = center(t);
    if (c.size() == 1) {
        std::string enc;
        return detail::rooted_aut(t, c.front(), -1, enc);
    }
    // Bicentral: split at the central edge. Automorphisms either fix both
    // halves or, when the rooted halves are isomorphic, swap them.
    int c1 = c.front();
    int c2 = (c - VertexSet::single(c1)).front();
    std::string e1, e2;
    unsigned long long a1 = detail::rooted_aut(t, c1, c2, e1);
    unsigned long long a2 = detail::rooted_aut(t, c2, c1, e2);
    return a1 * a2 * (e1 == e2 ? 2 : 1);
}

} // namespace mdis

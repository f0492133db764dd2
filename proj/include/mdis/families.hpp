#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"
#include "subtree.hpp"
#include "tree_queries.hpp"

namespace mdis {

// Sharp lower bound for the number of maximal distance-k independent sets
// of a tree on n vertices: n itself while n <= k + 1, afterwards
// n - floor((n - (k mod 2)) / (floor(k/2) + 1)) + 1.
inline long long mdi_lower_bound(int k, int n) {
    if (k < 1) throw std::invalid_argument("mdi_lower_bound: k must be positive");
    if (n < 1) throw std::invalid_argument("mdi_lower_bound: n must be positive");
    if (n <= k + 1) return n;
    long long h = k / 2 + 1;
    return n - (n - k % 2) / h + 1;
}

// The bound grows by one per vertex except at multiples of floor(k/2) + 1
// (shifted by the parity of k), where it stays flat; over a full period it
// gains floor(k/2). Checks both facts at n.
inline bool bound_step_identities(int k, int n) {
    if (k < 2 || n < k + 2)
        throw std::invalid_argument("bound_step_identities: need k >= 2 and n >= k + 2");
    int h = k / 2 + 1;
    long long here = mdi_lower_bound(k, n);
    long long prev = mdi_lower_bound(k, n - 1);
    bool flat = (n - k % 2) % h == 0;
    if (here != prev + (flat ? 0 : 1)) return false;
    return mdi_lower_bound(k, n + h) == here + k / 2;
}

namespace detail {

inline Tree spider_of_legs(const std::vector<int>& legs) {
    int n = 1;
    for (int len : legs) {
        if (len < 0) throw std::invalid_argument("spider_of_legs: negative leg");
        n += len;
    }
    Graph g(n);
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return Tree(std::move(g));
}

} // namespace detail

// Hub vertex 0 joined to one end of each of p paths on m vertices.
inline Tree spider(int p, int m) {
    if (p < 1 || m < 1) throw std::invalid_argument("spider: need p >= 1 and m >= 1");
    return detail::spider_of_legs(std::vector<int>(static_cast<std::size_t>(p), m));
}

// Spider with one arm shortened by a vertex, i.e. spider(p, m) minus a
// deepest leaf. p * m vertices in total.
inline Tree spider_trimmed(int p, int m) {
    if (p < 1 || m < 1) throw std::invalid_argument("spider_trimmed: need p >= 1 and m >= 1");
    std::vector<int> legs{m - 1};
    legs.insert(legs.end(), static_cast<std::size_t>(p - 1), m);
    return detail::spider_of_legs(legs);
}

// spider_trimmed(p, 2) with an extra leaf on the hub. 2p + 1 vertices.
inline Tree spider_hub_leaf(int p) {
    if (p < 2) throw std::invalid_argument("spider_hub_leaf: need p >= 2");
    std::vector<int> legs{1};
    legs.insert(legs.end(), static_cast<std::size_t>(p - 1), 2);
    legs.push_back(1);
    return detail::spider_of_legs(legs);
}

// spider(p - 1, 2) with an extra leaf on an arm vertex next to the hub,
// splitting that arm. 2p vertices.
inline Tree spider_split_arm(int p) {
    if (p < 3) throw std::invalid_argument("spider_split_arm: need p >= 3");
    return add_leaf(spider(p - 1, 2), 1);
}

// Two adjacent hubs 0 and 1 carrying p1 and p2 pendant paths on s vertices
// each. (p1 + p2) * s + 2 vertices, diameter 2s + 1.
inline Tree double_spider(int p1, int p2, int s) {
    if (p1 < 1 || p2 < 1 || s < 1)
        throw std::invalid_argument("double_spider: need p1, p2, s >= 1");
    int n = (p1 + p2) * s + 2;
    Graph g(n);
    g.add_edge(0, 1);
    int next = 2;
    for (int hub = 0; hub <= 1; ++hub)
        for (int arm = 0; arm < (hub == 0 ? p1 : p2); ++arm) {
            int prev = hub;
            for (int i = 0; i < s; ++i) {
                g.add_edge(prev, next);
                prev = next++;
            }
        }
    return Tree(std::move(g));
}

// All double spiders splitting p arms between the hubs, one per unordered
// split: floor(p / 2) trees.
inline std::vector<Tree> double_spider_family(int p, int s) {
    if (p < 2 || s < 1) throw std::invalid_argument("double_spider_family: need p >= 2 and s >= 1");
    std::vector<Tree> out;
    for (int p1 = 1; p1 <= p / 2; ++p1) out.push_back(double_spider(p1, p - p1, s));
    return out;
}

enum class ClosureVariant { twin_free, special_free };

// All trees obtained from one of the bases by attaching r leaves without
// changing the diameter, kept when the result has no diametral k-twins
// (twin_free) or no k-special pairs (special_free). Bases must share their
// vertex count and diameter and themselves have no diametral k-twins.
// Output is deduplicated up to isomorphism, relabeled canonically and
// sorted by canonical form.
inline std::vector<Tree> add_closure(std::span<const Tree> bases, int k, int r,
                                     ClosureVariant variant) {
    if (bases.empty()) throw std::invalid_argument("add_closure: no bases");
    if (r < 0) throw std::invalid_argument("add_closure: r must be nonnegative");
    int base_diameter = diameter(bases.front());
    std::map<std::string, Tree> level;
    for (const Tree& base : bases) {
        if (base.vertex_count() != bases.front().vertex_count())
            throw std::invalid_argument("add_closure: bases differ in vertex count");
        if (diameter(base) != base_diameter)
            throw std::invalid_argument("add_closure: bases differ in diameter");
        if (!diametral_k_twins(base, k).empty())
            throw std::invalid_argument("add_closure: base has diametral k-twins");
        level.emplace(canonical_form(base).key, base);
    }

    // Any diameter-preserving supertree peels back down to a base one leaf
    // at a time without ever changing the diameter, so growing level by
    // level under the diameter filter reaches all of them.
    for (int step = 0; step < r; ++step) {
        std::map<std::string, Tree> grown;
        for (const auto& [key, t] : level)
            for (int anchor = 0; anchor < t.vertex_count(); ++anchor) {
                Tree candidate = add_leaf(t, anchor);
                if (diameter(candidate) != base_diameter) continue;
                grown.emplace(canonical_form(candidate).key, std::move(candidate));
            }
        level = std::move(grown);
    }

    std::vector<Tree> out;
    for (const auto& [key, t] : level) {
        bool admissible = variant == ClosureVariant::twin_free
                              ? diametral_k_twins(t, k).empty()
                              : k_special_pairs(t, k).empty();
        if (!admissible) continue;
        bool anchored = std::any_of(bases.begin(), bases.end(),
                                    [&](const Tree& base) { return contains_subtree(t, base); });
        if (anchored) out.push_back(canonical_tree(CanonicalForm{key}));
    }
    return out;
}

inline std::vector<Tree> add_closure(const Tree& base, int k, int r, ClosureVariant variant) {
    return add_closure(std::span<const Tree>(&base, 1), k, r, variant);
}

enum class FamilyKind {
    path,
    star,
    spider,
    spider_trimmed,
    spider_hub_leaf,
    spider_split_arm,
    double_spider,
    double_spider_family,
    closure
};

// Symbolic name of one construction, e.g. P(n=7), S(p=3,m=2),
// B(p1=2,p2=1,s=2) or Add(k=2,r=1,base=S'(3,2),variant=special_free).
struct FamilyDescriptor {
    FamilyKind kind = FamilyKind::path;
    long long a = 0;
    long long b = 0;
    long long c = 0;
    ClosureVariant variant = ClosureVariant::twin_free;
    std::shared_ptr<const FamilyDescriptor> base;

    static FamilyDescriptor make_path(long long n) { return {FamilyKind::path, n, 0, 0, {}, {}}; }
    static FamilyDescriptor make_star(long long n) { return {FamilyKind::star, n, 0, 0, {}, {}}; }
    static FamilyDescriptor make_spider(long long p, long long m) {
        return {FamilyKind::spider, p, m, 0, {}, {}};
    }
    static FamilyDescriptor make_spider_trimmed(long long p, long long m) {
        return {FamilyKind::spider_trimmed, p, m, 0, {}, {}};
    }
    static FamilyDescriptor make_spider_hub_leaf(long long p) {
        return {FamilyKind::spider_hub_leaf, p, 0, 0, {}, {}};
    }
    static FamilyDescriptor make_spider_split_arm(long long p) {
        return {FamilyKind::spider_split_arm, p, 0, 0, {}, {}};
    }
    static FamilyDescriptor make_double_spider(long long p1, long long p2, long long s) {
        return {FamilyKind::double_spider, p1, p2, s, {}, {}};
    }
    static FamilyDescriptor make_double_spider_family(long long p, long long s) {
        return {FamilyKind::double_spider_family, p, s, 0, {}, {}};
    }
    static FamilyDescriptor make_closure(long long k, long long r, FamilyDescriptor base_desc,
                                         ClosureVariant v) {
        FamilyDescriptor d{FamilyKind::closure, k, r, 0, v, {}};
        d.base = std::make_shared<const FamilyDescriptor>(std::move(base_desc));
        return d;
    }

    friend bool operator==(const FamilyDescriptor& x, const FamilyDescriptor& y) {
        if (x.kind != y.kind || x.a != y.a || x.b != y.b || x.c != y.c) return false;
        if (x.kind == FamilyKind::closure) {
            if (x.variant != y.variant) return false;
            return *x.base == *y.base;
        }
        return true;
    }
};

namespace detail {

struct DescriptorArg {
    std::string name;
    std::optional<long long> number;
    std::string word;
    std::optional<FamilyDescriptor> sub;
};

struct DescriptorCursor {
    std::string_view text;
    std::size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_space();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }
    void expect(char c) {
        if (!consume(c))
            throw std::invalid_argument(std::string("parse_family: expected '") + c + "'");
    }
    std::string identifier() {
        skip_space();
        std::size_t start = pos;
        while (pos < text.size()) {
            char c = text[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '\'' || c == '_')
                ++pos;
            else
                break;
        }
        if (start == pos) throw std::invalid_argument("parse_family: expected a name");
        return std::string(text.substr(start, pos - start));
    }
    long long number() {
        skip_space();
        std::size_t start = pos;
        if (pos < text.size() && text[pos] == '-') ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        long long value = 0;
        auto result = std::from_chars(text.data() + start, text.data() + pos, value);
        if (result.ec != std::errc() || result.ptr != text.data() + pos || start == pos)
            throw std::invalid_argument("parse_family: expected an integer");
        return value;
    }
};

FamilyDescriptor parse_descriptor(DescriptorCursor& cur);

inline DescriptorArg parse_arg(DescriptorCursor& cur) {
    DescriptorArg arg;
    char c = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') {
        arg.number = cur.number();
        return arg;
    }
    std::size_t id_start = cur.pos;
    std::string id = cur.identifier();
    if (cur.consume('=')) {
        arg.name = id;
        char v = cur.peek();
        if (std::isdigit(static_cast<unsigned char>(v)) || v == '-') {
            arg.number = cur.number();
        } else {
            std::size_t value_start = cur.pos;
            std::string value = cur.identifier();
            if (cur.peek() == '(') {
                cur.pos = value_start;
                arg.sub = parse_descriptor(cur);
            } else {
                arg.word = value;
            }
        }
        return arg;
    }
    if (cur.peek() == '(') {
        cur.pos = id_start;
        arg.sub = parse_descriptor(cur);
    } else {
        arg.word = id;
    }
    return arg;
}

inline const DescriptorArg* find_arg(const std::vector<DescriptorArg>& args,
                                     const std::string& name, std::size_t position) {
    for (const DescriptorArg& arg : args)
        if (arg.name == name) return &arg;
    if (position < args.size() && args[position].name.empty()) return &args[position];
    return nullptr;
}

inline long long arg_number(const std::vector<DescriptorArg>& args, const std::string& name,
                            std::size_t position) {
    const DescriptorArg* arg = find_arg(args, name, position);
    if (!arg || !arg->number)
        throw std::invalid_argument("parse_family: missing integer argument '" + name + "'");
    return *arg->number;
}

inline FamilyDescriptor parse_descriptor(DescriptorCursor& cur) {
    std::string head = cur.identifier();
    cur.expect('(');
    std::vector<DescriptorArg> args;
    if (cur.peek() != ')') {
        args.push_back(parse_arg(cur));
        while (cur.consume(',') || cur.consume(';')) args.push_back(parse_arg(cur));
    }
    cur.expect(')');

    if (head == "P") return FamilyDescriptor::make_path(arg_number(args, "n", 0));
    if (head == "S") {
        bool named_n = find_arg(args, "n", args.size()) != nullptr;
        if (named_n || args.size() == 1) return FamilyDescriptor::make_star(arg_number(args, "n", 0));
        return FamilyDescriptor::make_spider(arg_number(args, "p", 0), arg_number(args, "m", 1));
    }
    if (head == "S'")
        return FamilyDescriptor::make_spider_trimmed(arg_number(args, "p", 0),
                                                     arg_number(args, "m", 1));
    if (head == "S''") return FamilyDescriptor::make_spider_hub_leaf(arg_number(args, "p", 0));
    if (head == "S'''") return FamilyDescriptor::make_spider_split_arm(arg_number(args, "p", 0));
    if (head == "B")
        return FamilyDescriptor::make_double_spider(
            arg_number(args, "p1", 0), arg_number(args, "p2", 1), arg_number(args, "s", 2));
    if (head == "Bfam")
        return FamilyDescriptor::make_double_spider_family(arg_number(args, "p", 0),
                                                           arg_number(args, "s", 1));
    if (head == "Add" || head == "AddStar") {
        const DescriptorArg* base = find_arg(args, "base", 2);
        if (!base || !base->sub)
            throw std::invalid_argument("parse_family: " + head + " needs base=<descriptor>");
        // the head picks the default constraint; an explicit variant= wins
        ClosureVariant v = head == "Add" ? ClosureVariant::twin_free : ClosureVariant::special_free;
        if (const DescriptorArg* variant = find_arg(args, "variant", 3)) {
            if (variant->word == "twin_free")
                v = ClosureVariant::twin_free;
            else if (variant->word == "special_free")
                v = ClosureVariant::special_free;
            else
                throw std::invalid_argument("parse_family: unknown variant '" + variant->word +
                                            "'");
        }
        return FamilyDescriptor::make_closure(arg_number(args, "k", 0), arg_number(args, "r", 1),
                                              *base->sub, v);
    }
    throw std::invalid_argument("parse_family: unknown family '" + head + "'");
}

} // namespace detail

inline FamilyDescriptor parse_family(std::string_view text) {
    detail::DescriptorCursor cur{text};
    FamilyDescriptor d = detail::parse_descriptor(cur);
    if (cur.peek() != '\0') throw std::invalid_argument("parse_family: trailing input");
    return d;
}

namespace detail {

inline std::string descriptor_string(const FamilyDescriptor& d, bool named) {
    auto one = [&](const char* head, const char* key, long long v) {
        return named ? std::string(head) + "(" + key + "=" + std::to_string(v) + ")"
                     : std::string(head) + "(" + std::to_string(v) + ")";
    };
    auto two = [&](const char* head, const char* k1, long long v1, const char* k2, long long v2) {
        return named ? std::string(head) + "(" + k1 + "=" + std::to_string(v1) + "," + k2 + "=" +
                           std::to_string(v2) + ")"
                     : std::string(head) + "(" + std::to_string(v1) + "," + std::to_string(v2) + ")";
    };
    switch (d.kind) {
    case FamilyKind::path: return one("P", "n", d.a);
    case FamilyKind::star: return one("S", "n", d.a);
    case FamilyKind::spider: return two("S", "p", d.a, "m", d.b);
    case FamilyKind::spider_trimmed: return two("S'", "p", d.a, "m", d.b);
    case FamilyKind::spider_hub_leaf: return one("S''", "p", d.a);
    case FamilyKind::spider_split_arm: return one("S'''", "p", d.a);
    case FamilyKind::double_spider:
        if (named)
            return "B(p1=" + std::to_string(d.a) + ",p2=" + std::to_string(d.b) +
                   ",s=" + std::to_string(d.c) + ")";
        return "B(" + std::to_string(d.a) + "," + std::to_string(d.b) + "," + std::to_string(d.c) +
               ")";
    case FamilyKind::double_spider_family: return two("Bfam", "p", d.a, "s", d.b);
    case FamilyKind::closure: {
        const char* v = d.variant == ClosureVariant::twin_free ? "twin_free" : "special_free";
        std::string base = descriptor_string(*d.base, false);
        if (named)
            return "Add(k=" + std::to_string(d.a) + ",r=" + std::to_string(d.b) + ",base=" + base +
                   ",variant=" + v + ")";
        return "Add(" + std::to_string(d.a) + "," + std::to_string(d.b) + "," + base + "," + v +
               ")";
    }
    }
    throw std::logic_error("descriptor_string: bad kind");
}

} // namespace detail

inline std::string to_string(const FamilyDescriptor& d) {
    return detail::descriptor_string(d, true);
}

// Builds the trees a descriptor denotes; single-tree kinds yield one entry.
inline std::vector<Tree> make_family(const FamilyDescriptor& d) {
    auto as_int = [](long long v, const char* what) {
        if (v < 1 || v > 64) throw std::invalid_argument(std::string("make_family: bad ") + what);
        return static_cast<int>(v);
    };
    switch (d.kind) {
    case FamilyKind::path: return {Tree(path_graph(as_int(d.a, "n")))};
    case FamilyKind::star: return {Tree(star_graph(as_int(d.a, "n")))};
    case FamilyKind::spider: return {spider(as_int(d.a, "p"), as_int(d.b, "m"))};
    case FamilyKind::spider_trimmed:
        return {spider_trimmed(as_int(d.a, "p"), as_int(d.b, "m"))};
    case FamilyKind::spider_hub_leaf: return {spider_hub_leaf(as_int(d.a, "p"))};
    case FamilyKind::spider_split_arm: return {spider_split_arm(as_int(d.a, "p"))};
    case FamilyKind::double_spider:
        return {double_spider(as_int(d.a, "p1"), as_int(d.b, "p2"), as_int(d.c, "s"))};
    case FamilyKind::double_spider_family:
        return double_spider_family(as_int(d.a, "p"), as_int(d.b, "s"));
    case FamilyKind::closure: {
        if (d.a < 2 || d.a > 64) throw std::invalid_argument("make_family: bad k");
        if (d.b < 0 || d.b > 64) throw std::invalid_argument("make_family: bad r");
        std::vector<Tree> bases = make_family(*d.base);
        return add_closure(std::span<const Tree>(bases.data(), bases.size()),
                           static_cast<int>(d.a), static_cast<int>(d.b), d.variant);
    }
    }
    throw std::logic_error("make_family: bad kind");
}

} // namespace mdis

#pragma once

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "families.hpp"
#include "graph_io.hpp"
#include "mdis.hpp"
#include "subtree.hpp"
#include "tree_queries.hpp"
#include "treegen.hpp"

namespace mdis {

namespace detail {

inline std::string canonical_g6(const Tree& t) {
    return to_graph6(canonical_tree(canonical_form(t)).graph());
}

} // namespace detail

// The trees the classification names as the minimizers for a given k and n:
// every tree while n <= k + 1, and otherwise the closure families seeded by
// paths, spiders and double spiders according to the parity of k and the
// residue of n.
inline std::vector<Tree> predicted_minimizers(int k, int n) {
    if (k < 1) throw std::invalid_argument("predicted_minimizers: k must be positive");
    if (n < 1) throw std::invalid_argument("predicted_minimizers: n must be positive");
    std::map<std::string, Tree> found;
    auto put = [&](const Tree& t) {
        CanonicalForm form = canonical_form(t);
        found.emplace(form.key, canonical_tree(form));
    };
    auto put_all = [&](const std::vector<Tree>& ts) {
        for (const Tree& t : ts) put(t);
    };

    int h = k / 2 + 1;
    if (n <= k + 1) {
        for_each_tree(n, put);
    } else if (k % 2 == 0) {
        if (n == k + 2) {
            put(Tree(path_graph(n)));
        } else if (n <= 3 * k / 2 + 2) {
            put_all(add_closure(Tree(path_graph(k + 2)), k, n - k - 2,
                                ClosureVariant::special_free));
            put_all(add_closure(Tree(path_graph(k + 3)), k, n - k - 3, ClosureVariant::twin_free));
        } else {
            put_all(add_closure(spider_trimmed(n / h, h), k, n % h, ClosureVariant::twin_free));
        }
    } else {
        int p = (n - 1) / h;
        int r = (n - 1) % h;
        if (r == 0) {
            put(spider(p, h));
        } else {
            put_all(add_closure(spider(p, h), k, r, ClosureVariant::special_free));
            std::vector<Tree> hubs = double_spider_family(p, h);
            put_all(add_closure(std::span<const Tree>(hubs.data(), hubs.size()), k, r - 1,
                                ClosureVariant::twin_free));
        }
    }

    std::vector<Tree> out;
    for (const auto& [key, t] : found) out.push_back(t);
    return out;
}

struct SweepReport {
    int k = 0;
    int n = 0;
    int jobs = 1;
    long long f_value = 0;
    long long min_mdi = 0;
    long long trees_scanned = 0;
    std::vector<std::string> minimizers;
    std::vector<std::string> predicted;
    bool bound_holds = false;
    bool sharp = false;
    bool match = false;
    double seconds = 0.0;

    bool ok() const { return sharp && match; }
    std::string verdict() const { return ok() ? "match" : "mismatch"; }
};

// Scans every tree on n vertices, records the minimum number of maximal
// distance-k independent sets together with all trees attaining it, and
// compares both against the stated bound and the predicted minimizers.
// Splitting across jobs changes only the running time, not the report.
inline SweepReport sweep(int k, int n, int jobs = 1) {
    if (jobs < 1) throw std::invalid_argument("sweep: jobs must be positive");
    auto started = std::chrono::steady_clock::now();

    struct Local {
        long long scanned = 0;
        long long best = std::numeric_limits<long long>::max();
        std::vector<std::string> keys;
    };
    std::vector<Local> locals(static_cast<std::size_t>(jobs));
    auto scan = [k, n, jobs](Local& local, int shard) {
        TreeStream stream(n, shard, jobs);
        while (std::optional<Tree> t = stream.next()) {
            ++local.scanned;
            long long count = mdi(t->graph(), k);
            if (count < local.best) {
                local.best = count;
                local.keys.clear();
            }
            if (count == local.best) local.keys.push_back(canonical_form(*t).key);
        }
    };
    if (jobs == 1) {
        scan(locals[0], 0);
    } else {
        std::vector<std::thread> workers;
        for (int shard = 0; shard < jobs; ++shard)
            workers.emplace_back(scan, std::ref(locals[static_cast<std::size_t>(shard)]), shard);
        for (std::thread& w : workers) w.join();
    }

    SweepReport report;
    report.k = k;
    report.n = n;
    report.jobs = jobs;
    report.f_value = mdi_lower_bound(k, n);
    long long best = std::numeric_limits<long long>::max();
    for (const Local& local : locals) {
        report.trees_scanned += local.scanned;
        best = std::min(best, local.best);
    }
    report.min_mdi = best;
    std::vector<std::string> keys;
    for (const Local& local : locals)
        if (local.best == report.min_mdi)
            keys.insert(keys.end(), local.keys.begin(), local.keys.end());
    std::sort(keys.begin(), keys.end());
    for (const std::string& key : keys)
        report.minimizers.push_back(to_graph6(canonical_tree(CanonicalForm{key}).graph()));
    std::sort(report.minimizers.begin(), report.minimizers.end());

    for (const Tree& t : predicted_minimizers(k, n))
        report.predicted.push_back(to_graph6(t.graph()));
    std::sort(report.predicted.begin(), report.predicted.end());

    report.bound_holds = report.min_mdi >= report.f_value;
    report.sharp = report.min_mdi == report.f_value;
    report.match = report.minimizers == report.predicted;
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

struct ShardReport {
    int k = 0;
    int n = 0;
    int shard = 0;
    int total = 1;
    long long trees_scanned = 0;
    long long min_mdi = 0;
    std::vector<std::string> minimizers;
};

// Partial sweep over every total-th tree; reports carry no verdict since
// only the merge of all shards sees the true minimum.
inline ShardReport sweep_shard(int k, int n, int shard, int total) {
    ShardReport report;
    report.k = k;
    report.n = n;
    report.shard = shard;
    report.total = total;
    long long best = std::numeric_limits<long long>::max();
    std::vector<std::string> keys;
    TreeStream stream(n, shard, total);
    while (std::optional<Tree> t = stream.next()) {
        ++report.trees_scanned;
        long long count = mdi(t->graph(), k);
        if (count < best) {
            best = count;
            keys.clear();
        }
        if (count == best) keys.push_back(canonical_form(*t).key);
    }
    report.min_mdi = report.trees_scanned == 0 ? 0 : best;
    std::sort(keys.begin(), keys.end());
    for (const std::string& key : keys)
        report.minimizers.push_back(to_graph6(canonical_tree(CanonicalForm{key}).graph()));
    std::sort(report.minimizers.begin(), report.minimizers.end());
    return report;
}

inline std::string report_json(const SweepReport& r, bool with_runtime = false) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["f_value"] = r.f_value;
    j["min_mdi"] = r.min_mdi;
    j["count"] = static_cast<long long>(r.minimizers.size());
    j["verdict"] = r.verdict();
    j["minimizers"] = r.minimizers;
    j["predicted"] = r.predicted;
    if (with_runtime) {
        j["jobs"] = r.jobs;
        j["seconds"] = r.seconds;
    }
    return j.dump(2);
}

inline std::string report_json(const ShardReport& r) {
    nlohmann::ordered_json j;
    j["k"] = r.k;
    j["n"] = r.n;
    j["shard"] = r.shard;
    j["total"] = r.total;
    j["trees_scanned"] = r.trees_scanned;
    j["min_mdi"] = r.min_mdi;
    j["minimizers"] = r.minimizers;
    return j.dump(2);
}

inline std::string report_csv_header() { return "k,n,f,min,count,verdict"; }

inline std::string report_csv_row(const SweepReport& r) {
    return std::to_string(r.k) + "," + std::to_string(r.n) + "," + std::to_string(r.f_value) +
           "," + std::to_string(r.min_mdi) + "," + std::to_string(r.minimizers.size()) + "," +
           r.verdict();
}

// Consistency of the predicted minimizer count with the counting results:
// all trees are minimal up to n = k + 1, even k admits an n-free cap, k = 2
// and k = 3 have explicit counts, odd k in the non-divisible case is pinned
// between n / (k + 1) and a multiple of n, and uniqueness happens exactly
// at the divisibility condition.
inline bool check_counts(int k, int n, long long count) {
    int h = k / 2 + 1;
    bool ok = true;
    if (n <= k + 1 && n <= max_treegen_vertices) ok = ok && count == tree_count(n);
    if (k % 2 == 0 && k * k <= max_treegen_vertices) ok = ok && count <= tree_count(k * k);
    if (k == 2) {
        if (n <= 4)
            ok = ok && count == 1;
        else
            ok = ok && count == (n % 2 == 0 ? 1 : 2);
    }
    if (k == 3) {
        if (n <= 4)
            ok = ok && count == tree_count(n);
        else if (n % 2 == 1)
            ok = ok && count == 1;
        else
            ok = ok && count == (n + 6) / 4;
    }
    if (k % 2 == 1 && n >= k + 2 && (n - 1) % h != 0) {
        ok = ok && count * (k + 1) >= n;
        if (k * k <= max_treegen_vertices) ok = ok && count <= tree_count(k * k) * n;
    }
    if (n >= 4) ok = ok && (count == 1) == (n >= k + 2 && (n - k % 2) % h == 0);
    return ok;
}

inline bool check_counts(int k, int n) {
    return check_counts(k, n, static_cast<long long>(sweep(k, n).minimizers.size()));
}

struct ForestCheck {
    int k = 0;
    int n = 0;
    long long forests_checked = 0;
    long long min_mdi = std::numeric_limits<long long>::max();
    bool all_above_bound = false;
};

namespace detail {

inline void partitions_into_parts(int remaining, int max_part, std::vector<int>& parts,
                                  const std::function<void(const std::vector<int>&)>& emit) {
    if (remaining == 0) {
        if (parts.size() >= 2) emit(parts);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 2; --part) {
        parts.push_back(part);
        partitions_into_parts(remaining - part, part, parts, emit);
        parts.pop_back();
    }
}

} // namespace detail

// Every disconnected forest on n vertices without isolated vertices ought
// to exceed the tree bound strictly; checks them all by combining one tree
// per part of each partition of n into at least two parts of size >= 2.
inline ForestCheck check_forests(int k, int n) {
    if (n < 4) throw std::invalid_argument("check_forests: need n >= 4");
    ForestCheck result;
    result.k = k;
    result.n = n;
    long long bound = mdi_lower_bound(k, n);

    std::map<int, std::vector<Tree>> trees_of;
    auto trees_on = [&](int m) -> const std::vector<Tree>& {
        auto it = trees_of.find(m);
        if (it == trees_of.end()) {
            std::vector<Tree> all;
            for_each_tree(m, [&](const Tree& t) { all.push_back(t); });
            it = trees_of.emplace(m, std::move(all)).first;
        }
        return it->second;
    };

    bool violated = false;
    std::vector<int> parts;
    std::function<void(const std::vector<int>&)> handle = [&](const std::vector<int>& partition) {
        // Distinct sizes take independent choices; repeated sizes take
        // non-decreasing index tuples so each multiset appears once.
        std::vector<std::pair<int, int>> groups;
        for (int size : partition) {
            if (!groups.empty() && groups.back().first == size)
                ++groups.back().second;
            else
                groups.emplace_back(size, 1);
        }
        std::vector<std::vector<int>> choice(groups.size());
        std::function<void(std::size_t)> assemble = [&](std::size_t gi) {
            if (gi == groups.size()) {
                std::optional<Graph> forest;
                for (std::size_t g = 0; g < groups.size(); ++g)
                    for (int index : choice[g]) {
                        const Tree& part = trees_on(groups[g].first)[static_cast<std::size_t>(index)];
                        forest = forest ? disjoint_union(*forest, part.graph()) : part.graph();
                    }
                ++result.forests_checked;
                long long count = mdi(*forest, k);
                result.min_mdi = std::min(result.min_mdi, count);
                if (count <= bound) violated = true;
                return;
            }
            auto [size, mult] = groups[gi];
            int options = static_cast<int>(trees_on(size).size());
            std::vector<int>& slot = choice[gi];
            std::function<void(int, int)> pick = [&](int taken, int low) {
                if (taken == mult) {
                    assemble(gi + 1);
                    return;
                }
                for (int i = low; i < options; ++i) {
                    slot.push_back(i);
                    pick(taken + 1, i);
                    slot.pop_back();
                }
            };
            pick(0, 0);
        };
        assemble(0);
    };
    detail::partitions_into_parts(n, n - 2, parts, handle);

    result.all_above_bound = !violated && result.forests_checked > 0;
    return result;
}

struct CheckResult {
    std::string id;
    long long cases = 0;
    long long failures = 0;
    std::vector<std::string> notes;

    bool passed() const { return failures == 0; }
};

namespace detail {

inline void note_failure(CheckResult& r, const std::string& text) {
    ++r.failures;
    if (r.notes.size() < 5) r.notes.push_back(text);
}

inline std::string case_tag(int k, const Tree& t) {
    return "k=" + std::to_string(k) + " n=" + std::to_string(t.vertex_count()) +
           " tree=" + to_graph6(t.graph());
}

inline std::set<std::string> key_set(const std::vector<Tree>& trees) {
    std::set<std::string> keys;
    for (const Tree& t : trees) keys.insert(canonical_form(t).key);
    return keys;
}

inline bool has_k_twin_leaf(const Tree& t, int k) {
    for (int u : leaves(t))
        if (is_k_twin(t, u, k)) return true;
    return false;
}

// ---- named checks ----------------------------------------------------
// Each check scans k up to max_k and tree orders up to max_n (checks that
// build their own families read max_n as a vertex budget instead) and
// counts the instances where its premise applied.

inline CheckResult check_bound_steps(int max_k, int max_n) {
    CheckResult r;
    r.id = "bound-steps";
    for (int k = 2; k <= max_k; ++k)
        for (int n = k + 2; n <= max_n; ++n) {
            ++r.cases;
            if (!bound_step_identities(k, n))
                note_failure(r, "k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
    return r;
}

inline CheckResult check_family_counts(int max_k, int max_n) {
    CheckResult r;
    r.id = "family-counts";
    for (int k = 2; k <= max_k; ++k) {
        int h = k / 2 + 1;
        for (int p = 2; p * h + 2 <= std::min(max_n, 62); ++p) {
            ++r.cases;
            std::string tag = "k=" + std::to_string(k) + " p=" + std::to_string(p);
            if (mdi(spider_trimmed(p, h).graph(), k) != mdi_lower_bound(k, p * h))
                note_failure(r, tag + " trimmed spider off");
            if (mdi(spider(p, h).graph(), k) != mdi_lower_bound(k, p * h + 1))
                note_failure(r, tag + " spider off");
            long long floor2 = mdi_lower_bound(k, p * h + 2);
            for (const Tree& t : double_spider_family(p, h)) {
                long long count = mdi(t.graph(), k);
                bool ok = k % 2 == 1 ? count == floor2 : count > floor2;
                if (!ok) note_failure(r, tag + " double spider off");
            }
        }
    }
    return r;
}

inline CheckResult check_leaf_recursion(int max_k, int max_n) {
    CheckResult r;
    r.id = "leaf-recursion";
    for (int n = 2; n <= max_n; ++n)
        for_each_tree(n, [&](const Tree& t) {
            for (int k = 1; k <= max_k; ++k) {
                long long whole = mdi(t.graph(), k);
                for (int leaf : leaves(t)) {
                    ++r.cases;
                    long long without = mdi(remove_leaf(t, leaf).graph(), k);
                    if (whole != without + mdi_star(t, leaf, k))
                        note_failure(r, case_tag(k, t) + " leaf=" + std::to_string(leaf));
                }
            }
        });
    return r;
}

inline CheckResult check_remote_leaf_drop(int max_k, int max_n) {
    CheckResult r;
    r.id = "remote-leaf-drop";
    for (int n = 2; n <= max_n; ++n)
        for_each_tree(n, [&](const Tree& t) {
            VertexSet leaf_set = leaves(t);
            for (int k = 1; k <= max_k; ++k) {
                long long whole = -1;
                for (int u : leaf_set) {
                    if ((ball(t.graph(), u, k + 1) & leaf_set) != VertexSet::single(u)) continue;
                    ++r.cases;
                    if (whole < 0) whole = mdi(t.graph(), k);
                    if (mdi(remove_leaf(t, u).graph(), k) >= whole)
                        note_failure(r, case_tag(k, t) + " leaf=" + std::to_string(u));
                }
            }
        });
    return r;
}

inline CheckResult check_path_counts(int max_k, int) {
    CheckResult r;
    r.id = "path-counts";
    for (int k = 2; k <= std::min(max_k, 59); ++k) {
        ++r.cases;
        bool ok = mdi(path_graph(k + 2), k) == k + 1 && mdi(path_graph(k + 3), k) == k + 2 &&
                  mdi(path_graph(k + 4), k) == k + 4 && mdi(path_graph(k + 5), k) >= k + 6;
        if (!ok) note_failure(r, "k=" + std::to_string(k));
    }
    return r;
}

inline CheckResult check_twin_drop(int max_k, int max_n) {
    CheckResult r;
    r.id = "twin-drop";
    for (int n = 3; n <= max_n; ++n)
        for_each_tree(n, [&](const Tree& t) {
            int diam = diameter(t);
            VertexSet diametral = diametral_leaves(t);
            for (int k = 2; k <= max_k; ++k) {
                VertexSet twins = k_twins(t, k);
                long long whole = -1;
                for (int u : twins) {
                    if (t.degree(u) != 1) continue;
                    ++r.cases;
                    if (whole < 0) whole = mdi(t.graph(), k);
                    long long without = mdi(remove_leaf(t, u).graph(), k);
                    if (without > whole - 1)
                        note_failure(r, case_tag(k, t) + " leaf=" + std::to_string(u));
                    if (diametral.contains(u) && diam >= k + 2 && without > whole - 2)
                        note_failure(r, case_tag(k, t) + " diametral leaf=" + std::to_string(u));
                }
            }
        });
    return r;
}

inline CheckResult check_pendant_path_drop(int max_k, int max_n) {
    CheckResult r;
    r.id = "pendant-path-drop";
    for (int n = 4; n <= max_n; ++n)
        for_each_tree(n, [&](const Tree& t) {
            // Attachment vertex and member set of every pendant path.
            std::map<std::pair<int, std::size_t>, std::vector<VertexSet>> grouped;
            for (const std::vector<int>& path : pendant_paths(t)) {
                VertexSet members;
                for (int v : path) members.add(v);
                int attach = -1;
                for (int nb : t.neighbors(path.back()))
                    if (!members.contains(nb)) attach = nb;
                if (attach < 0 || t.degree(attach) < 3) continue;
                grouped[{attach, path.size()}].push_back(members);
            }
            for (const auto& [where, paths] : grouped) {
                if (paths.size() < 2) continue;
                int s = static_cast<int>(where.second);
                Tree trimmed(
                    induced_subgraph(t.graph(), VertexSet::full(t.vertex_count()) - paths[0]));
                for (int k = 2; k <= max_k; ++k) {
                    int gain;
                    if (k >= 2 * s)
                        gain = s;
                    else if (k == 2 * s - 1 || k == 2 * s - 2)
                        gain = s - 1;
                    else
                        continue;
                    ++r.cases;
                    if (mdi(t.graph(), k) < mdi(trimmed.graph(), k) + gain)
                        note_failure(r, case_tag(k, t) + " s=" + std::to_string(s));
                }
            }
        });
    return r;
}

inline CheckResult check_forced_twin(int max_k, int max_n) {
    CheckResult r;
    r.id = "forced-twin";
    for (int n = 4; n <= max_n; ++n)
        for_each_tree(n, [&](const Tree& t) {
            VertexSet central = center(t);
            bool outer_branching = false;
            for (int v : branching_vertices(t))
                if (!central.contains(v)) outer_branching = true;
            if (!outer_branching) return;
            int diam = diameter(t);
            for (int k = 2; k <= max_k; ++k) {
                if (diam > k + 3 - k % 2) continue;
                ++r.cases;
                if (!has_k_twin_leaf(t, k)) note_failure(r, case_tag(k, t));
            }
        });
    return r;
}

inline CheckResult check_twin_free_forms(int max_k, int max_n) {
    CheckResult r;
    r.id = "twin-free-forms";
    for (int k = 3; k <= max_k; k += 2) {
        int h = k / 2 + 1;
        std::map<int, std::set<std::string>> spiders_by_n;
        std::map<int, std::set<std::string>> hubs_by_n;
        for (int n = k + 2; n <= max_n; ++n) {
            if ((n - 1) % h == 0 && (n - 1) / h >= 2)
                spiders_by_n[n] = {canonical_form(spider((n - 1) / h, h)).key};
            if (n >= k + 3 && (n - 2) % h == 0 && (n - 2) / h >= 2)
                hubs_by_n[n] = key_set(double_spider_family((n - 2) / h, h));
            for_each_tree(n, [&](const Tree& t) {
                int diam = diameter(t);
                if (diam != k + 1 && diam != k + 2) return;
                ++r.cases;
                const std::set<std::string>& members =
                    diam == k + 1 ? spiders_by_n[n] : hubs_by_n[n];
                bool in_family = members.count(canonical_form(t).key) > 0;
                if (in_family == has_k_twin_leaf(t, k)) note_failure(r, case_tag(k, t));
            });
        }
    }
    return r;
}

inline CheckResult check_closure_peel(int max_k, int max_n) {
    CheckResult r;
    r.id = "closure-peel";
    auto central_leaf_of_largest_branch = [](const Tree& t) {
        std::vector<VertexSet> branches = main_subtree_sets(t);
        int pick = -1;
        int best = -1;
        for (int leaf : central_leaves(t))
            for (const VertexSet& branch : branches)
                if (branch.contains(leaf)) {
                    if (branch.size() > best) {
                        best = branch.size();
                        pick = leaf;
                    }
                    break;
                }
        return pick;
    };
    for (int k = 2; k <= max_k; ++k) {
        int h = k / 2 + 1;
        for (int p = 2; p * h + 2 <= max_n; ++p)
            for (int r_add = 1; r_add <= k / 2; ++r_add) {
                struct Side {
                    Tree base;
                    ClosureVariant variant;
                };
                Side sides[2] = {{spider_trimmed(p, h), ClosureVariant::twin_free},
                                 {spider(p, h), ClosureVariant::special_free}};
                for (const Side& side : sides) {
                    if (side.base.vertex_count() + r_add > max_n) continue;
                    // p = 2 makes the trimmed spider a path of diameter k when
                    // k is odd; every vertex is then a k-twin and the closure
                    // is not defined over that base.
                    if (!diametral_k_twins(side.base, k).empty()) continue;
                    std::set<std::string> smaller =
                        key_set(add_closure(side.base, k, r_add - 1, side.variant));
                    for (const Tree& t : add_closure(side.base, k, r_add, side.variant)) {
                        ++r.cases;
                        int leaf = central_leaf_of_largest_branch(t);
                        if (leaf < 0 ||
                            smaller.count(canonical_form(remove_leaf(t, leaf)).key) == 0)
                            note_failure(r, case_tag(k, t));
                    }
                }
            }
    }
    return r;
}

// Shared skeleton of the diameter-stratified checks: scan all trees with
// the premise, compare the count against the bound and, when an exact
// family is claimed, membership against equality.
template <class Premise, class Clause>
CheckResult diameter_check(const char* id, int k_start, int max_k, int max_n, Premise&& premise,
                           Clause&& clause) {
    CheckResult r;
    r.id = id;
    for (int k = k_start; k <= max_k; k += 2)
        for (int n = k + 2; n <= max_n; ++n) {
            std::map<std::string, std::set<std::string>> cache;
            for_each_tree(n, [&](const Tree& t) {
                int diam = diameter(t);
                if (!premise(k, n, diam)) return;
                ++r.cases;
                if (!clause(k, n, t, cache)) note_failure(r, case_tag(k, t));
            });
        }
    return r;
}

inline CheckResult check_diam_kp1_even(int max_k, int max_n) {
    return diameter_check(
        "diam-kp1-even", 2, max_k, max_n,
        [](int k, int, int diam) { return diam == k + 1; },
        [](int k, int n, const Tree& t, std::map<std::string, std::set<std::string>>& cache) {
            auto [it, fresh] = cache.try_emplace("family");
            if (fresh)
                it->second = key_set(add_closure(Tree(path_graph(k + 2)), k, n - k - 2,
                                                 ClosureVariant::special_free));
            long long count = mdi(t.graph(), k);
            if (count < t.vertex_count() - 1) return false;
            bool member = it->second.count(canonical_form(t).key) > 0;
            return (count == t.vertex_count() - 1) == member;
        });
}

inline CheckResult check_diam_kp2_even(int max_k, int max_n) {
    return diameter_check(
        "diam-kp2-even", 2, max_k, max_n,
        [](int k, int, int diam) { return diam <= k + 2; },
        [](int k, int n, const Tree& t, std::map<std::string, std::set<std::string>>& cache) {
            int h = k / 2 + 1;
            int p = n / h;
            int rem = n % h;
            auto [it, fresh] = cache.try_emplace("family");
            if (fresh) {
                if (rem == 0) {
                    it->second = {canonical_form(spider_trimmed(p, h)).key};
                } else if (p == 2) {
                    it->second = key_set(
                        add_closure(Tree(path_graph(k + 2)), k, rem, ClosureVariant::special_free));
                    for (const std::string& key :
                         key_set(add_closure(Tree(path_graph(k + 3)), k, rem - 1,
                                             ClosureVariant::twin_free)))
                        it->second.insert(key);
                } else {
                    it->second =
                        key_set(add_closure(spider_trimmed(p, h), k, rem, ClosureVariant::twin_free));
                }
            }
            long long count = mdi(t.graph(), k);
            long long floor_value = mdi_lower_bound(k, n);
            if (count < floor_value) return false;
            bool member = it->second.count(canonical_form(t).key) > 0;
            return (count == floor_value) == member;
        });
}

inline CheckResult check_diam_kp3_even(int max_k, int max_n) {
    return diameter_check(
        "diam-kp3-even", 2, max_k, max_n,
        [](int k, int, int diam) { return diam == k + 3; },
        [](int k, int n, const Tree& t, std::map<std::string, std::set<std::string>>&) {
            return mdi(t.graph(), k) > mdi_lower_bound(k, n);
        });
}

inline CheckResult check_diam_kp4_even(int max_k, int max_n) {
    return diameter_check(
        "diam-kp4-even", 2, max_k, max_n,
        [](int k, int, int diam) { return diam >= k + 4; },
        [](int k, int n, const Tree& t, std::map<std::string, std::set<std::string>>&) {
            return mdi(t.graph(), k) > mdi_lower_bound(k, n);
        });
}

inline CheckResult check_diam_kp1_odd(int max_k, int max_n) {
    return diameter_check(
        "diam-kp1-odd", 3, max_k, max_n,
        [](int k, int, int diam) { return diam == k + 1; },
        [](int k, int n, const Tree& t, std::map<std::string, std::set<std::string>>& cache) {
            int h = k / 2 + 1;
            int p = (n - 1) / h;
            int rem = (n - 1) % h;
            auto [it, fresh] = cache.try_emplace("family");
            if (fresh)
                it->second =
                    key_set(add_closure(spider(p, h), k, rem, ClosureVariant::special_free));
            long long count = mdi(t.graph(), k);
            long long floor_value = mdi_lower_bound(k, n);
            if (count < floor_value) return false;
            bool member = it->second.count(canonical_form(t).key) > 0;
            return (count == floor_value) == member;
        });
}

inline CheckResult check_diam_kp2_odd(int max_k, int max_n) {
    return diameter_check(
        "diam-kp2-odd", 3, max_k, max_n,
        [](int k, int, int diam) { return diam == k + 2; },
        [](int k, int n, const Tree& t, std::map<std::string, std::set<std::string>>& cache) {
            int h = k / 2 + 1;
            int p = (n - 1) / h;
            int rem = (n - 1) % h;
            long long count = mdi(t.graph(), k);
            long long floor_value = mdi_lower_bound(k, n);
            if (rem == 0) return count > floor_value;
            auto [it, fresh] = cache.try_emplace("family");
            if (fresh) {
                std::vector<Tree> hubs = double_spider_family(p, h);
                it->second = key_set(add_closure(std::span<const Tree>(hubs.data(), hubs.size()),
                                                 k, rem - 1, ClosureVariant::twin_free));
            }
            if (count < floor_value) return false;
            bool member = it->second.count(canonical_form(t).key) > 0;
            return (count == floor_value) == member;
        });
}

inline CheckResult check_diam_kp3_odd(int max_k, int max_n) {
    return diameter_check(
        "diam-kp3-odd", 3, max_k, max_n,
        [](int k, int, int diam) { return diam >= k + 3; },
        [](int k, int n, const Tree& t, std::map<std::string, std::set<std::string>>&) {
            return mdi(t.graph(), k) > mdi_lower_bound(k, n);
        });
}

} // namespace detail

inline const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids = {
        "bound-steps",    "family-counts", "leaf-recursion", "remote-leaf-drop",
        "path-counts",    "twin-drop",     "pendant-path-drop", "forced-twin",
        "twin-free-forms", "closure-peel", "diam-kp1-even",  "diam-kp2-even",
        "diam-kp3-even",  "diam-kp4-even", "diam-kp1-odd",   "diam-kp2-odd",
        "diam-kp3-odd"};
    return ids;
}

inline CheckResult run_check(std::string_view id, int max_k, int max_n) {
    using Runner = CheckResult (*)(int, int);
    static const std::map<std::string_view, Runner> table = {
        {"bound-steps", detail::check_bound_steps},
        {"family-counts", detail::check_family_counts},
        {"leaf-recursion", detail::check_leaf_recursion},
        {"remote-leaf-drop", detail::check_remote_leaf_drop},
        {"path-counts", detail::check_path_counts},
        {"twin-drop", detail::check_twin_drop},
        {"pendant-path-drop", detail::check_pendant_path_drop},
        {"forced-twin", detail::check_forced_twin},
        {"twin-free-forms", detail::check_twin_free_forms},
        {"closure-peel", detail::check_closure_peel},
        {"diam-kp1-even", detail::check_diam_kp1_even},
        {"diam-kp2-even", detail::check_diam_kp2_even},
        {"diam-kp3-even", detail::check_diam_kp3_even},
        {"diam-kp4-even", detail::check_diam_kp4_even},
        {"diam-kp1-odd", detail::check_diam_kp1_odd},
        {"diam-kp2-odd", detail::check_diam_kp2_odd},
        {"diam-kp3-odd", detail::check_diam_kp3_odd},
    };
    auto it = table.find(id);
    if (it == table.end())
        throw std::invalid_argument("run_check: unknown check '" + std::string(id) + "'");
    return it->second(max_k, max_n);
}

} // namespace mdis

#include <CLI11.hpp>
#include <json.hpp>

#include <mdis/canonical.hpp>
#include <mdis/families.hpp>
#include <mdis/graph.hpp>
#include <mdis/graph_io.hpp>
#include <mdis/mdis.hpp>
#include <mdis/treegen.hpp>
#include <mdis/verify.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace mdis;

int parse_int(const std::string& text, const char* what) {
    std::size_t used = 0;
    int value = 0;
    try {
        value = std::stoi(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string("bad ") + what + ": " + text);
    }
    if (used != text.size()) throw std::invalid_argument(std::string("bad ") + what + ": " + text);
    return value;
}

std::pair<int, int> parse_shard(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos)
        throw std::invalid_argument("--shard wants the form i/t, e.g. 0/4");
    int shard = parse_int(text.substr(0, slash), "shard index");
    int total = parse_int(text.substr(slash + 1), "shard total");
    return {shard, total};
}

// Accepted graph forms, tried in this order: the path/cycle/circulant/
// hypercube prefixes, a family descriptor, a graph6 string, and finally
// a path to an edge-list file.  Multi-member families yield several graphs.
std::vector<Graph> graphs_from_spec(const std::string& spec) {
    auto split = [](const std::string& s, char sep) {
        std::vector<std::string> parts;
        std::string piece;
        std::istringstream in(s);
        while (std::getline(in, piece, sep)) parts.push_back(piece);
        return parts;
    };

    std::vector<std::string> parts = split(spec, ':');
    if (parts.size() >= 2) {
        const std::string& head = parts[0];
        if (head == "path" && parts.size() == 2)
            return {path_graph(parse_int(parts[1], "path order"))};
        if (head == "cycle" && parts.size() == 2)
            return {cycle_graph(parse_int(parts[1], "cycle order"))};
        if (head == "hypercube" && parts.size() == 2)
            return {hypercube_graph(parse_int(parts[1], "hypercube dimension"))};
        if (head == "circulant" && parts.size() == 3) {
            int n = parse_int(parts[1], "circulant order");
            std::vector<int> offsets;
            for (const std::string& o : split(parts[2], ','))
                offsets.push_back(parse_int(o, "circulant offset"));
            return {circulant_graph(n, offsets)};
        }
        throw std::invalid_argument("unrecognized graph spec: " + spec);
    }

    std::optional<FamilyDescriptor> descriptor;
    try {
        descriptor = parse_family(spec);
    } catch (const std::invalid_argument&) {
    }
    if (descriptor) {
        std::vector<Graph> graphs;
        for (const Tree& t : make_family(*descriptor)) graphs.push_back(t.graph());
        return graphs;
    }

    try {
        return {from_graph6(spec)};
    } catch (const std::invalid_argument&) {
    }

    std::ifstream file(spec);
    if (file) {
        std::ostringstream text;
        text << file.rdbuf();
        return {parse_edge_list(text.str())};
    }
    throw std::invalid_argument("unrecognized graph spec: " + spec);
}

std::string canonical_g6(const Tree& t) {
    return to_graph6(canonical_tree(canonical_form(t)).graph());
}

struct Progress {
    bool quiet = false;

    void say(const std::string& line) const {
        if (!quiet) std::cerr << line << '\n';
    }
};

int run_count(const std::string& spec, int k, const std::string& format) {
    std::vector<Graph> graphs = graphs_from_spec(spec);
    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const Graph& g : graphs) {
            nlohmann::ordered_json row;
            row["graph"] = to_graph6(g);
            row["k"] = k;
            row["count"] = mdi(g, k);
            rows.push_back(std::move(row));
        }
        std::cout << (rows.size() == 1 ? rows[0].dump(2) : rows.dump(2)) << '\n';
    } else {
        for (const Graph& g : graphs) std::cout << mdi(g, k) << '\n';
    }
    return 0;
}

int run_list(const std::string& spec, int k, const std::string& format) {
    std::vector<Graph> graphs = graphs_from_spec(spec);
    if (format == "json") {
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const Graph& g : graphs) {
            MdisFamily family = enumerate_mdis(g, k);
            nlohmann::ordered_json sets = nlohmann::ordered_json::array();
            for (const VertexSet& set : family.sets) {
                nlohmann::ordered_json members = nlohmann::ordered_json::array();
                for (int v : set) members.push_back(v);
                sets.push_back(std::move(members));
            }
            nlohmann::ordered_json row;
            row["graph"] = to_graph6(g);
            row["k"] = k;
            row["count"] = family.count();
            row["sets"] = std::move(sets);
            rows.push_back(std::move(row));
        }
        std::cout << (rows.size() == 1 ? rows[0].dump(2) : rows.dump(2)) << '\n';
    } else {
        bool first = true;
        for (const Graph& g : graphs) {
            if (!first) std::cout << '\n';
            first = false;
            for (const VertexSet& set : enumerate_mdis(g, k).sets) {
                bool lead = true;
                for (int v : set) {
                    if (!lead) std::cout << ' ';
                    lead = false;
                    std::cout << v;
                }
                std::cout << '\n';
            }
        }
    }
    return 0;
}

int run_gen_trees(int n, const std::string& shard_spec, const Progress& progress) {
    int shard = 0, total = 1;
    if (!shard_spec.empty()) std::tie(shard, total) = parse_shard(shard_spec);
    TreeStream stream(n, shard, total);
    long long emitted = 0;
    while (std::optional<Tree> t = stream.next()) {
        std::cout << to_graph6(t->graph()) << '\n';
        ++emitted;
        if (emitted % 5000 == 0)
            progress.say("gen-trees: " + std::to_string(emitted) + " trees so far");
    }
    progress.say("gen-trees: n=" + std::to_string(n) + " done, " + std::to_string(emitted) +
                 " trees");
    return 0;
}

int run_construct(const std::string& family) {
    for (const Tree& t : make_family(parse_family(family))) std::cout << canonical_g6(t) << '\n';
    return 0;
}

int run_closure(const std::string& family, int k, int r, const std::string& variant_name) {
    ClosureVariant variant = variant_name == "special_free" ? ClosureVariant::special_free
                                                            : ClosureVariant::twin_free;
    std::vector<Tree> bases = make_family(parse_family(family));
    for (const Tree& t :
         add_closure(std::span<const Tree>(bases.data(), bases.size()), k, r, variant))
        std::cout << to_graph6(t.graph()) << '\n';
    return 0;
}

int run_sweep(std::optional<int> k_opt, std::optional<int> n_opt, int jobs, int cap,
              const std::string& format, const std::string& shard_spec, bool timing,
              const Progress& progress) {
    if (cap < 1 || cap > max_treegen_vertices)
        throw std::invalid_argument("--cap must lie in 1.." +
                                    std::to_string(max_treegen_vertices));

    if (!shard_spec.empty()) {
        if (!k_opt || !n_opt)
            throw std::invalid_argument("--shard needs explicit --k and --n");
        if (*n_opt > cap) throw std::invalid_argument("--n exceeds --cap");
        auto [shard, total] = parse_shard(shard_spec);
        ShardReport report = sweep_shard(*k_opt, *n_opt, shard, total);
        if (format == "json") {
            std::cout << report_json(report) << '\n';
        } else {
            std::cout << "k=" << report.k << " n=" << report.n << " shard=" << report.shard
                      << "/" << report.total << " trees=" << report.trees_scanned
                      << " min=" << report.min_mdi << " minimizers=" << report.minimizers.size()
                      << '\n';
        }
        return 0;
    }

    std::vector<int> ks, ns;
    if (k_opt)
        ks.push_back(*k_opt);
    else
        for (int k = 1; k <= 6; ++k) ks.push_back(k);
    if (n_opt)
        ns.push_back(*n_opt);
    else
        for (int n = 1; n <= std::min(16, cap); ++n) ns.push_back(n);
    for (int n : ns)
        if (n > cap) throw std::invalid_argument("--n exceeds --cap");

    bool all_match = true;
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    if (format == "csv") std::cout << report_csv_header() << '\n';
    for (int k : ks)
        for (int n : ns) {
            SweepReport report = sweep(k, n, jobs);
            all_match = all_match && report.ok();
            progress.say("sweep k=" + std::to_string(k) + " n=" + std::to_string(n) + ": " +
                         std::to_string(report.trees_scanned) + " trees, verdict " +
                         report.verdict());
            if (format == "csv") {
                std::cout << report_csv_row(report) << '\n';
            } else if (format == "json") {
                rows.push_back(nlohmann::ordered_json::parse(report_json(report, timing)));
            } else if (format == "g6") {
                for (const std::string& g6 : report.minimizers) std::cout << g6 << '\n';
            } else {
                std::cout << "k=" << report.k << " n=" << report.n << " trees="
                          << report.trees_scanned << " f=" << report.f_value
                          << " min=" << report.min_mdi << " count=" << report.minimizers.size()
                          << " verdict=" << report.verdict() << '\n';
            }
        }
    if (format == "json")
        std::cout << (rows.size() == 1 ? rows[0].dump(2) : rows.dump(2)) << '\n';
    return all_match ? 0 : 1;
}

int run_checks(std::vector<std::string> ids, int max_k, int max_n, const Progress& progress) {
    if (ids.empty()) ids = check_ids();
    bool all_passed = true;
    for (const std::string& id : ids) {
        CheckResult result = run_check(id, max_k, max_n);
        all_passed = all_passed && result.passed();
        std::cout << (result.passed() ? "pass" : "FAIL") << "  " << result.id
                  << "  cases=" << result.cases << " failures=" << result.failures << '\n';
        for (const std::string& note : result.notes) std::cout << "      " << note << '\n';
        progress.say("check " + id + ": done");
    }
    return all_passed ? 0 : 1;
}

int run_forests(std::optional<int> k_opt, std::optional<int> n_opt, const Progress& progress) {
    std::vector<int> ks, ns;
    if (k_opt)
        ks.push_back(*k_opt);
    else
        for (int k = 2; k <= 5; ++k) ks.push_back(k);
    if (n_opt)
        ns.push_back(*n_opt);
    else
        for (int n = 5; n <= 11; ++n) ns.push_back(n);

    bool all_above = true;
    for (int k : ks)
        for (int n : ns) {
            ForestCheck result = check_forests(k, n);
            all_above = all_above && result.all_above_bound;
            std::cout << "k=" << result.k << " n=" << result.n << " forests="
                      << result.forests_checked << " min=" << result.min_mdi << " above_bound="
                      << (result.all_above_bound ? "yes" : "NO") << '\n';
            progress.say("forests k=" + std::to_string(k) + " n=" + std::to_string(n) + ": " +
                         std::to_string(result.forests_checked) + " forests");
        }
    return all_above ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal distance-k independent sets: counting, families, verification"};
    app.require_subcommand(1);
    app.fallthrough();

    Progress progress;
    app.add_flag("--quiet", progress.quiet, "suppress progress output on stderr");

    std::string graph_spec, family, format = "text", variant = "twin_free", shard_spec;
    std::vector<std::string> ids;
    int k = 0, n = 0, r = 0, jobs = 1, cap = 16;
    int grid_k = 0, grid_n = 0;

    CLI::App* count = app.add_subcommand("count", "count the maximal distance-k independent sets");
    count->add_option("--graph", graph_spec, "graph to count on")->required();
    count->add_option("--k", k, "distance bound")->required();
    count->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* list = app.add_subcommand("list", "list the maximal distance-k independent sets");
    list->add_option("--graph", graph_spec, "graph to enumerate on")->required();
    list->add_option("--k", k, "distance bound")->required();
    list->add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    CLI::App* gen = app.add_subcommand("gen-trees", "stream every tree on n vertices as graph6");
    gen->add_option("--n", n, "number of vertices")->required();
    gen->add_option("--shard", shard_spec, "emit only shard i of t, as i/t");
    gen->add_option("--format", format, "output format")->check(CLI::IsMember({"g6", "text"}));

    CLI::App* construct = app.add_subcommand("construct", "build a named tree family");
    construct->add_option("--family", family, "family descriptor")->required();
    construct->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"g6", "text"}));

    CLI::App* closure = app.add_subcommand("closure", "grow a base family by leaf additions");
    closure->add_option("--family", family, "base family descriptor")->required();
    closure->add_option("--k", k, "distance bound")->required();
    closure->add_option("--r", r, "number of added leaves")->required();
    closure->add_option("--variant", variant, "constraint on the grown trees")
        ->check(CLI::IsMember({"twin_free", "special_free"}));
    closure->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"g6", "text"}));

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "scan all trees and compare the minimum "
                                                      "against bound and prediction");
    sweep_cmd->add_option("--k", grid_k, "distance bound (default: 1..6)");
    sweep_cmd->add_option("--n", grid_n, "number of vertices (default: 1..16)");
    sweep_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 64));
    sweep_cmd->add_option("--cap", cap, "largest allowed n");
    sweep_cmd->add_option("--shard", shard_spec, "scan only shard i of t, as i/t");
    bool timing = false;
    sweep_cmd->add_flag("--timing", timing, "include jobs and seconds in JSON output");
    sweep_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json", "g6"}));

    CLI::App* check = app.add_subcommand("check", "run the structural consistency checks");
    check->add_option("--id", ids, "check id, repeatable (default: all)");
    int max_k = 5, max_n = 9;
    check->add_option("--k", max_k, "largest distance bound");
    check->add_option("--n", max_n, "largest tree order");

    CLI::App* forests = app.add_subcommand("forests",
                                           "verify disconnected forests exceed the tree bound");
    forests->add_option("--k", grid_k, "distance bound (default: 2..5)");
    forests->add_option("--n", grid_n, "number of vertices (default: 5..11)");

    try {
        app.parse(argc, argv);
        if (count->parsed()) return run_count(graph_spec, k, format);
        if (list->parsed()) return run_list(graph_spec, k, format);
        if (gen->parsed()) return run_gen_trees(n, shard_spec, progress);
        if (construct->parsed()) return run_construct(family);
        if (closure->parsed()) return run_closure(family, k, r, variant);
        if (sweep_cmd->parsed() || forests->parsed()) {
            std::optional<int> k_opt, n_opt;
            CLI::App* active = sweep_cmd->parsed() ? sweep_cmd : forests;
            if (active->count("--k")) k_opt = grid_k;
            if (active->count("--n")) n_opt = grid_n;
            if (sweep_cmd->parsed())
                return run_sweep(k_opt, n_opt, jobs, cap, format, shard_spec, timing, progress);
            return run_forests(k_opt, n_opt, progress);
        }
        if (check->parsed()) return run_checks(ids, max_k, max_n, progress);
        return 2;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

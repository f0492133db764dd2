#include <catch2/catch_amalgamated.hpp>

#include <mdis/canonical.hpp>
#include <mdis/families.hpp>
#include <mdis/graph_io.hpp>
#include <mdis/treegen.hpp>
#include <mdis/verify.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

const std::string& binary() {
    static const std::string path = [] {
        const char* env = std::getenv("MDIS_CLI");
        REQUIRE(env != nullptr);
        return std::string(env);
    }();
    return path;
}

// Runs the tool with the given arguments and captures one stream; by
// default stdout, with stderr dropped.
RunResult run_cli(const std::string& args, bool capture_stderr = false) {
    std::string cmd = binary() + " " + args;
    cmd += capture_stderr ? " 2>&1 1>/dev/null" : " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string::size_type start = 0;
    while (start < text.size()) {
        std::string::size_type end = text.find('\n', start);
        if (end == std::string::npos) end = text.size();
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

} // namespace

TEST_CASE("count handles every graph input form") {
    CHECK(run_cli("count --graph path:4 --k 2").out == "3\n");
    CHECK(run_cli("count --graph cycle:8 --k 3").out == "4\n");
    CHECK(run_cli("count --graph circulant:24:2,3,9,12 --k 2").out == "8\n");
    CHECK(run_cli("count --graph hypercube:4 --k 3").out == "8\n");
    CHECK(run_cli("count --graph 'S(3,2)' --k 2").out == "5\n");
    CHECK(run_cli("count --graph 'P(4)' --k 2").out == "3\n");
    CHECK(run_cli("count --graph 'FkE?G' --k 2").out == "5\n");

    const char* path = "/tmp/mdis_cli_edges.txt";
    std::ofstream(path) << "4\n0 1\n1 2\n2 3\n";
    RunResult from_file = run_cli(std::string("count --graph ") + path + " --k 2");
    CHECK(from_file.status == 0);
    CHECK(from_file.out == "3\n");
}

TEST_CASE("list prints the sets themselves") {
    RunResult text = run_cli("list --graph path:4 --k 2");
    CHECK(text.status == 0);
    CHECK(text.out == "1\n2\n0 3\n");

    RunResult json = run_cli("list --graph path:4 --k 2 --format json");
    REQUIRE(json.status == 0);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["k"] == 2);
    CHECK(doc["count"] == 3);
    CHECK(doc["sets"] == nlohmann::json::parse("[[1],[2],[0,3]]"));
    CHECK(doc["graph"] == "Ch");
}

TEST_CASE("gen-trees streams the whole catalogue") {
    RunResult all = run_cli("gen-trees --n 8 --quiet");
    REQUIRE(all.status == 0);
    std::vector<std::string> trees = lines_of(all.out);
    CHECK(trees.size() == static_cast<std::size_t>(mdis::tree_count(8)));
    CHECK(mdis::Tree(mdis::from_graph6(trees.front())).vertex_count() == 8);

    SECTION("shards partition the stream") {
        std::vector<std::string> merged;
        for (int shard = 0; shard < 3; ++shard) {
            RunResult part = run_cli("gen-trees --n 9 --shard " + std::to_string(shard) +
                                     "/3 --quiet");
            REQUIRE(part.status == 0);
            for (const std::string& line : lines_of(part.out)) merged.push_back(line);
        }
        std::vector<std::string> whole = lines_of(run_cli("gen-trees --n 9 --quiet").out);
        std::sort(merged.begin(), merged.end());
        std::sort(whole.begin(), whole.end());
        CHECK(merged == whole);
    }

    SECTION("progress goes to stderr and quiet silences it") {
        CHECK_FALSE(run_cli("gen-trees --n 8", true).out.empty());
        CHECK(run_cli("gen-trees --n 8 --quiet", true).out.empty());
    }
}

TEST_CASE("construct emits canonical graph6") {
    RunResult one = run_cli("construct --family 'B(3,2;s=2)'");
    REQUIRE(one.status == 0);
    std::vector<std::string> lines = lines_of(one.out);
    REQUIRE(lines.size() == 1);
    mdis::Tree built(mdis::from_graph6(lines[0]));
    CHECK(built.vertex_count() == 12);
    CHECK(mdis::is_isomorphic(built, mdis::double_spider(3, 2, 2)));

    CHECK(lines_of(run_cli("construct --family 'Bfam(4,2)'").out).size() == 2);

    SECTION("construct output feeds count") {
        std::string g6 = lines_of(run_cli("construct --family \"S'(5,3)\"").out).at(0);
        RunResult counted = run_cli("count --graph '" + g6 + "' --k 5");
        CHECK(counted.out == "12\n");
    }
}

TEST_CASE("closure expands a base family") {
    RunResult twin = run_cli("closure --family \"S'(3,2)\" --k 2 --r 1");
    REQUIRE(twin.status == 0);
    CHECK(lines_of(twin.out) == std::vector<std::string>{"FkE?G", "FkEC?"});

    RunResult special = run_cli("closure --family \"S'(3,2)\" --k 2 --r 1 "
                                "--variant special_free");
    CHECK(lines_of(special.out) == std::vector<std::string>{"Fi_K?", "FkE?G", "FkEC?"});
}

TEST_CASE("sweep reports verdicts and honours the cap") {
    RunResult csv = run_cli("sweep --k 3 --n 8 --format csv --quiet");
    CHECK(csv.status == 0);
    CHECK(lines_of(csv.out) ==
          std::vector<std::string>{"k,n,f,min,count,verdict", "3,8,6,6,3,match"});

    SECTION("json carries the full report") {
        RunResult json = run_cli("sweep --k 2 --n 8 --format json --quiet");
        REQUIRE(json.status == 0);
        auto doc = nlohmann::json::parse(json.out);
        CHECK(doc["f_value"] == 5);
        CHECK(doc["min_mdi"] == 5);
        CHECK(doc["verdict"] == "match");
        CHECK_FALSE(doc.contains("jobs"));
        auto timed = nlohmann::json::parse(
            run_cli("sweep --k 2 --n 8 --format json --timing --jobs 2 --quiet").out);
        CHECK(timed["jobs"] == 2);
        CHECK(timed.contains("seconds"));
    }

    SECTION("shard mode reports its slice") {
        RunResult part = run_cli("sweep --k 2 --n 7 --shard 0/3 --format json --quiet");
        REQUIRE(part.status == 0);
        auto doc = nlohmann::json::parse(part.out);
        CHECK(doc["shard"] == 0);
        CHECK(doc["total"] == 3);
        CHECK(doc["trees_scanned"] == 4);
        CHECK(doc["min_mdi"] == 6);
    }

    SECTION("orders past the cap are refused") {
        CHECK(run_cli("sweep --k 2 --n 17 --quiet").status == 2);
        CHECK(run_cli("sweep --k 2 --n 12 --cap 12 --quiet").status == 0);
        CHECK(run_cli("sweep --k 5 --n 21 --cap 21 --quiet").status == 2);
    }
}

TEST_CASE("check runs named consistency checks") {
    RunResult one = run_cli("check --id path-counts --quiet");
    CHECK(one.status == 0);
    CHECK(one.out.find("pass  path-counts") == 0);

    RunResult all = run_cli("check --k 3 --n 6 --quiet");
    CHECK(all.status == 0);
    CHECK(lines_of(all.out).size() == mdis::check_ids().size());

    CHECK(run_cli("check --id no-such-check --quiet").status == 2);
}

TEST_CASE("forests compares disconnected graphs against the tree bound") {
    RunResult fine = run_cli("forests --k 2 --n 6 --quiet");
    CHECK(fine.status == 0);
    CHECK(fine.out == "k=2 n=6 forests=4 min=6 above_bound=yes\n");

    // 2P_2 meets the bound exactly at k = 3, so strict excess fails there
    RunResult tight = run_cli("forests --k 3 --n 4 --quiet");
    CHECK(tight.status == 1);
    CHECK(tight.out.find("above_bound=NO") != std::string::npos);
}

TEST_CASE("usage errors exit with code two") {
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("count --graph path:4").status == 2);
    CHECK(run_cli("count --k 2").status == 2);
    CHECK(run_cli("count --graph nonsense:5 --k 2").status == 2);
    CHECK(run_cli("count --graph path:4 --k 2 --format yaml").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    CHECK(run_cli("closure --family 'P(6)' --k 5 --r 1").status == 2);
}

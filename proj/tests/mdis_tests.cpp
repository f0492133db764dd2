#include <catch2/catch_amalgamated.hpp>

#include <mdis/families.hpp>
#include <mdis/graph.hpp>
#include <mdis/mdis.hpp>
#include <mdis/treegen.hpp>

#include "support/oracles.hpp"

#include <cstdint>
#include <vector>

using namespace mdis;

namespace {

VertexSet set_of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
}

std::uint64_t mask_of(VertexSet s) {
    std::uint64_t m = 0;
    for (int v : s) m |= std::uint64_t{1} << v;
    return m;
}

}  // namespace

TEST_CASE("power graphs connect everything within distance k") {
    Tree p4 = path_graph(4);
    Graph sq = power_graph(p4, 2);
    CHECK(sq.edge_count() == 5);
    CHECK(sq.has_edge(0, 2));
    CHECK_FALSE(sq.has_edge(0, 3));
    CHECK(power_graph(p4, 3).edge_count() == 6);
    CHECK(power_graph(p4, 1) == p4.graph());
    CHECK_THROWS_AS(power_graph(p4, 0), std::invalid_argument);

    // separate components never join
    Graph two = disjoint_union(path_graph(2), path_graph(2));
    CHECK(power_graph(two, 5).edge_count() == 2);
}

TEST_CASE("membership predicates") {
    Tree p4 = path_graph(4);
    CHECK(is_k_independent(p4, 2, set_of({0, 3})));
    CHECK(is_k_independent(p4, 2, set_of({0})));
    CHECK_FALSE(is_k_independent(p4, 2, set_of({0, 2})));
    CHECK(is_k_independent(p4, 2, VertexSet{}));

    CHECK(is_k_mdis(p4, 2, set_of({0, 3})));
    CHECK(is_k_mdis(p4, 2, set_of({1})));
    CHECK_FALSE(is_k_mdis(p4, 2, set_of({0})));  // 3 is still free to join
    CHECK_FALSE(is_k_mdis(p4, 2, set_of({0, 2})));
    CHECK_FALSE(is_k_mdis(p4, 2, VertexSet{}));
}

TEST_CASE("the four-vertex path has exactly three families at radius two") {
    MdisFamily family = enumerate_mdis(path_graph(4), 2);
    CHECK(family.vertex_count == 4);
    CHECK(family.k == 2);
    REQUIRE(family.count() == 3);
    CHECK(family.sets[0] == set_of({1}));
    CHECK(family.sets[1] == set_of({2}));
    CHECK(family.sets[2] == set_of({0, 3}));
}

TEST_CASE("counts on cycles") {
    CHECK(mdi(cycle_graph(6), 2) == 3);
    CHECK(mdi(cycle_graph(8), 3) == 4);
    CHECK(mdi(cycle_graph(10), 4) == 5);
    CHECK(mdi(cycle_graph(12), 5) == 6);

    SECTION("the sets on the eight-cycle are the antipodal pairs") {
        MdisFamily family = enumerate_mdis(cycle_graph(8), 3);
        REQUIRE(family.count() == 4);
        for (int i = 0; i < 4; ++i) CHECK(family.sets[static_cast<std::size_t>(i)] == set_of({i, i + 4}));
    }
}

TEST_CASE("counts on hypercubes") {
    CHECK(mdi(hypercube_graph(2), 1) == 2);
    CHECK(mdi(hypercube_graph(3), 2) == 4);
    CHECK(mdi(hypercube_graph(4), 3) == 8);
    CHECK(mdi(hypercube_graph(5), 4) == 16);
}

TEST_CASE("a seven-regular circulant on 24 vertices") {
    std::vector<int> offsets{2, 3, 9, 12};
    Graph g = circulant_graph(24, offsets);
    MdisFamily family = enumerate_mdis(g, 2);
    CHECK(family.count() == 8);
    for (const VertexSet& s : family.sets) CHECK(s.size() == 3);
}

TEST_CASE("two disjoint edges") {
    Graph g = disjoint_union(path_graph(2), path_graph(2));
    CHECK(mdi(g, 2) == 4);
    CHECK(mdi(g, 2) == mdi_lower_bound(2, 4) + 1);
    for (int k = 3; k <= 5; ++k) {
        CHECK(mdi(g, k) == 4);
        CHECK(mdi(g, k) == mdi_lower_bound(k, 4));
    }
}

TEST_CASE("an edgeless graph has one family: everything") {
    Graph g(3);
    MdisFamily family = enumerate_mdis(g, 2);
    REQUIRE(family.count() == 1);
    CHECK(family.sets[0] == VertexSet::full(3));
}

TEST_CASE("leaf contribution counts") {
    CHECK(mdi_star(path_graph(3), 0, 2) == 1);
    CHECK(mdi_star(path_graph(4), 3, 2) == 0);
    CHECK(mdi_star(path_graph(2), 1, 5) == 1);
    CHECK(mdi_star(spider(5, 2), 2, 5) == 1);

    CHECK_THROWS_AS(mdi_star(path_graph(4), 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(mdi_star(path_graph(1), 0, 2), std::invalid_argument);

    SECTION("deleting a leaf splits the count") {
        std::vector<Tree> samples = {path_graph(7), spider(3, 2), double_spider(2, 1, 2),
                                     spider_split_arm(4), star_graph(6)};
        oracle::Rng rng(4242);
        for (int i = 0; i < 6; ++i) samples.push_back(oracle::random_tree(5 + rng.below(6), rng));
        for (const Tree& t : samples)
            for (int leaf : leaves(t))
                for (int k = 1; k <= 5; ++k)
                    CHECK(mdi(t, k) == mdi(remove_leaf(t, leaf), k) + mdi_star(t, leaf, k));
    }
}

TEST_CASE("enumeration agrees with the subset-scan oracle") {
    oracle::Rng rng(31337);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + rng.below(9);
        Graph g = trial % 2 == 0 ? oracle::random_tree(n, rng).graph()
                                 : oracle::random_graph(n, 20 + rng.below(60), rng);
        for (int k = 1; k <= 4; ++k) {
            MdisFamily family = enumerate_mdis(g, k);
            std::vector<std::uint64_t> expected = oracle::mdis_masks(g, k);
            REQUIRE(family.sets.size() == expected.size());
            for (std::size_t i = 0; i < expected.size(); ++i)
                CHECK(mask_of(family.sets[i]) == expected[i]);
        }
    }
}

TEST_CASE("every enumerated set is independent and dominating") {
    oracle::Rng rng(808);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 3 + rng.below(8);
        Graph g = oracle::random_graph(n, 35, rng);
        for (int k = 1; k <= 3; ++k) {
            DistanceTable table = distances(g);
            for (const VertexSet& s : enumerate_mdis(g, k).sets) {
                for (int u : s)
                    for (int v : s)
                        if (u < v)
                            CHECK((!table.reachable(u, v) || int{table.at(u, v)} > k));
                for (int w = 0; w < n; ++w) {
                    bool covered = false;
                    for (int u : s)
                        if (table.reachable(w, u) && int{table.at(w, u)} <= k) covered = true;
                    CHECK(covered);
                }
            }
        }
    }
}

TEST_CASE("trees whose diameter fits inside the radius") {
    // the power graph is complete, so the families are the single vertices
    for (const Tree& t : {star_graph(6), spider(3, 2), path_graph(4)}) {
        const int k = diameter(t);
        if (k < 1) continue;
        MdisFamily family = enumerate_mdis(t, k);
        CHECK(family.count() == t.vertex_count());
        for (const VertexSet& s : family.sets) CHECK(s.size() == 1);
        for (int leaf : leaves(t)) CHECK(mdi_star(t, leaf, k) == 1);
    }
}

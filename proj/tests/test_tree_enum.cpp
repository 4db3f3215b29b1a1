#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "spectral/connectivity.hpp"
#include "spectral/instances.hpp"
#include "spectral/rng.hpp"
#include "spectral/tree_enum.hpp"

#include "oracles.hpp"

using namespace spectral;

namespace {

WeightedGraph complete_weighted(int n, SplitMix64 &rng) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j, 0.1 + 10.0 * rng.uniform01()});
    return WeightedGraph(n, es);
}

WeightedGraph complete_unit(int n) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j, 1.0});
    return WeightedGraph(n, es);
}

} // namespace

TEST_CASE("max spanning tree of a weighted triangle") {
    WeightedGraph g(3, {{0, 1, 3.0}, {0, 2, 2.0}, {1, 2, 1.0}});
    EdgeSelection t = max_spanning_tree(g);
    CHECK(t.chosen(0));
    CHECK(t.chosen(1));
    CHECK_FALSE(t.chosen(2));
    CHECK(t.total_weight() == Catch::Approx(5.0));
}

TEST_CASE("max spanning tree under equal weights is deterministic and lex-first") {
    WeightedGraph g = complete_unit(5);
    EdgeSelection t1 = max_spanning_tree(g);
    EdgeSelection t2 = max_spanning_tree(g);
    CHECK(t1 == t2);
    // Kruskal over (weight desc, index asc) picks the first acyclic edges.
    std::vector<int> expect = {0, 1, 2, 3}; // star at node 0 in complete-graph edge order
    CHECK(t1.chosen_indices() == expect);
}

TEST_CASE("max spanning tree rejects disconnected graphs") {
    WeightedGraph g(4, {{0, 1, 1.0}, {2, 3, 1.0}});
    CHECK_THROWS_AS(max_spanning_tree(g), std::invalid_argument);
}

TEST_CASE("dual-weight spanning tree value bounds the instance optimum") {
    // weightFn(e) = w_e (v_i - v_j)^2 for unit v orthogonal to ones makes the
    // greedy tree value an upper bound on lambda2 of any spanning tree.
    InstanceFixture f = load_fixture(8, 1);
    WeightedGraph g = f.graph();
    auto [opt_tree, l2_star] = brute_force_optimum(g);
    Vector v = fiedler_vector(opt_tree);
    EdgeSelection dual = max_spanning_tree(
        g, [&](const Edge &e, int) { return edge_quadratic(e, v); });
    double dual_value = 0.0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (dual.chosen(e)) dual_value += edge_quadratic(g.edge(e), v);
    CHECK(dual_value >= l2_star - 1e-9);
}

TEST_CASE("spanning tree counts match Cayley on complete graphs") {
    CHECK(count_spanning_trees(complete_unit(3)) == 3);
    CHECK(count_spanning_trees(complete_unit(4)) == 16);
    CHECK(count_spanning_trees(complete_unit(5)) == 125);
    CHECK(count_spanning_trees(complete_unit(8)) == 262144);
}

TEST_CASE("spanning tree counts match the Kirchhoff oracle on random graphs") {
    SplitMix64 rng(19);
    for (int rep = 0; rep < 20; ++rep) {
        const int n = 4 + static_cast<int>(rng.below(4)); // 4..7
        std::vector<Edge> es;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (i + 1 == j || rng.uniform01() < 0.6) es.push_back({i, j, 1.0});
        WeightedGraph g(n, es);
        CHECK(count_spanning_trees(g) == oracles::kirchhoff_tree_count(g));
    }
}

TEST_CASE("every enumerated selection is a spanning tree") {
    SplitMix64 rng(29);
    WeightedGraph g = complete_weighted(6, rng);
    long long count = 0;
    for_each_spanning_tree(g, [&](const std::vector<int> &t) {
        ++count;
        EdgeSelection sel(g, t);
        REQUIRE(sel.popcount() == g.n() - 1);
        REQUIRE(is_connected(sel));
    });
    CHECK(count == 1296);
}

TEST_CASE("all_spanning_trees yields distinct trees") {
    WeightedGraph g = complete_unit(5);
    auto trees = all_spanning_trees(g);
    std::set<std::vector<int>> seen;
    for (const auto &t : trees) seen.insert(t.chosen_indices());
    CHECK(seen.size() == trees.size());
}

TEST_CASE("enumeration guard refuses n > 9") {
    WeightedGraph g = complete_unit(10);
    CHECK_THROWS_AS(count_spanning_trees(g), std::invalid_argument);
}

TEST_CASE("enumerate_decreasing is a sorted prefix of the full tree list") {
    SplitMix64 rng(31);
    for (int rep = 0; rep < 6; ++rep) {
        const int n = 4 + static_cast<int>(rng.below(3)); // 4..6
        WeightedGraph g = complete_weighted(n, rng);
        auto full = all_spanning_trees(g);
        std::vector<std::pair<double, std::vector<int>>> sorted;
        for (const auto &t : full) sorted.push_back({t.total_weight(), t.chosen_indices()});
        std::sort(sorted.begin(), sorted.end(), [](const auto &a, const auto &b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        const int K = std::min<int>(40, static_cast<int>(sorted.size()));
        auto got = enumerate_decreasing(g, K);
        REQUIRE(static_cast<int>(got.size()) == K);
        for (int k = 0; k < K; ++k) CHECK(got[k].chosen_indices() == sorted[k].second);
    }
}

TEST_CASE("enumerate_decreasing weights are non-increasing and start at the MST") {
    SplitMix64 rng(37);
    WeightedGraph g = complete_weighted(7, rng);
    auto trees = enumerate_decreasing(g, 200);
    REQUIRE(!trees.empty());
    CHECK(trees.front().chosen_indices() == max_spanning_tree(g).chosen_indices());
    for (size_t k = 1; k < trees.size(); ++k)
        CHECK(trees[k].total_weight() <= trees[k - 1].total_weight() + 1e-12);
    for (const auto &t : trees) {
        CHECK(t.popcount() == g.n() - 1);
        CHECK(is_connected(t));
    }
}

TEST_CASE("enumerate_decreasing stops early when fewer trees exist") {
    WeightedGraph g = complete_unit(4);
    auto trees = enumerate_decreasing(g, 1000);
    CHECK(trees.size() == 16);
}

TEST_CASE("K4 with unit weights has 16 enumerated trees and deterministic order") {
    WeightedGraph g = complete_unit(4);
    auto a = enumerate_decreasing(g, 16);
    auto b = enumerate_decreasing(g, 16);
    REQUIRE(a.size() == b.size());
    for (size_t k = 0; k < a.size(); ++k) CHECK(a[k].chosen_indices() == b[k].chosen_indices());
}

TEST_CASE("brute force optimum matches fixtures against the paper tables") {
    auto check = [](int idx, double expect) {
        WeightedGraph g = load_fixture(8, idx).graph();
        auto [tree, l2] = brute_force_optimum(g);
        CHECK(l2 == Catch::Approx(expect).margin(1e-3));
        CHECK(is_spanning_tree(tree));
    };
    check(1, 22.8042);
    check(4, 28.6912);
}

TEST_CASE("the optimal tree of fixture (8,1) ranks within the first 15000 by weight") {
    WeightedGraph g = load_fixture(8, 1).graph();
    auto [opt_tree, l2] = brute_force_optimum(g);
    auto ranked = enumerate_decreasing(g, 15000);
    bool found = false;
    for (const auto &t : ranked)
        if (t == opt_tree) {
            found = true;
            break;
        }
    CHECK(found);
}

TEST_CASE("brute force on a single edge graph") {
    WeightedGraph g(2, {{0, 1, 2.5}});
    auto [tree, l2] = brute_force_optimum(g);
    CHECK(tree.popcount() == 1);
    CHECK(l2 == Catch::Approx(5.0));
}

TEST_CASE("brute force respects filters and reports infeasibility") {
    SplitMix64 rng(41);
    WeightedGraph g = complete_weighted(5, rng);
    auto [tree, l2] = brute_force_optimum(g, [](const EdgeSelection &s) {
        return oracles::hop_diameter_oracle(s) <= 2;
    });
    CHECK(oracles::hop_diameter_oracle(tree) <= 2);
    CHECK_THROWS_AS(brute_force_optimum(g, [](const EdgeSelection &) { return false; }),
                    std::runtime_error);
}

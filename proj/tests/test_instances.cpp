#include <catch2/catch_amalgamated.hpp>

#include "spectral/instances.hpp"
#include "spectral/magic.hpp"

using namespace spectral;

TEST_CASE("magic squares satisfy the defining sums") {
    for (int n : {3, 4, 5, 6, 8, 9, 10, 12, 16, 21}) {
        Matrix m = magic_square(n);
        const long target = static_cast<long>(n) * (static_cast<long>(n) * n + 1) / 2;
        std::vector<bool> seen(static_cast<size_t>(n) * n + 1, false);
        long d1 = 0, d2 = 0;
        for (int i = 0; i < n; ++i) {
            long rs = 0, cs = 0;
            for (int j = 0; j < n; ++j) {
                const long v = static_cast<long>(m.at(i, j));
                REQUIRE(v >= 1);
                REQUIRE(v <= static_cast<long>(n) * n);
                REQUIRE_FALSE(seen[v]);
                seen[v] = true;
                rs += v;
                cs += static_cast<long>(m.at(j, i));
            }
            CHECK(rs == target);
            CHECK(cs == target);
            d1 += static_cast<long>(m.at(i, i));
            d2 += static_cast<long>(m.at(i, n - 1 - i));
        }
        CHECK(d1 == target);
        CHECK(d2 == target);
    }
}

TEST_CASE("generate_random is deterministic in (n, seed)") {
    WeightedGraph a = generate_random(7, 42);
    WeightedGraph b = generate_random(7, 42);
    REQUIRE(a.edge_count() == b.edge_count());
    for (int e = 0; e < a.edge_count(); ++e) {
        CHECK(a.edge(e).i == b.edge(e).i);
        CHECK(a.edge(e).j == b.edge(e).j);
        CHECK(a.edge(e).w == b.edge(e).w);
    }
    WeightedGraph c = generate_random(7, 43);
    bool differs = false;
    for (int e = 0; e < a.edge_count() && !differs; ++e) differs = a.edge(e).w != c.edge(e).w;
    CHECK(differs);
}

TEST_CASE("generated instances are complete with positive weights") {
    for (uint64_t seed : {1ULL, 9ULL, 100ULL}) {
        WeightedGraph g = generate_random(8, seed);
        CHECK(g.edge_count() == 28);
        for (const Edge &e : g.edges()) CHECK(e.w > 0.0);
    }
}

TEST_CASE("accepted instances put the maximum spanning tree above every star") {
    for (uint64_t seed : {2ULL, 5ULL, 77ULL}) {
        WeightedGraph g = generate_random(8, seed);
        const double mst_l2 = algebraic_connectivity(max_spanning_tree(g));
        for (int c = 0; c < g.n(); ++c) {
            EdgeSelection star(g);
            for (int e = 0; e < g.edge_count(); ++e)
                if (g.edge(e).i == c || g.edge(e).j == c) star.set(e, true);
            CHECK(mst_l2 > algebraic_connectivity(star));
        }
    }
}

TEST_CASE("generate_random rejects out-of-range n") {
    CHECK_THROWS_AS(generate_random(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(generate_random(65, 1), std::invalid_argument);
}

TEST_CASE("fixtures load with exact printed values") {
    InstanceFixture f81 = load_fixture(8, 1);
    CHECK(f81.adjacency.at(0, 1) == 4.561);
    CHECK(f81.adjacency.at(4, 0) == 82.393);
    REQUIRE(f81.known_optimum.has_value());
    CHECK(*f81.known_optimum == Catch::Approx(22.8042));

    InstanceFixture f910 = load_fixture(9, 10);
    CHECK(f910.adjacency.at(0, 1) == 73.479);
    CHECK(*f910.known_optimum == Catch::Approx(31.7445));

    CHECK(*load_fixture(9, 1).known_optimum == Catch::Approx(28.2168));
    CHECK(*load_fixture(8, 10).known_optimum == Catch::Approx(27.4913));
}

TEST_CASE("fixture matrices are symmetric with zero diagonal") {
    for (int n : {8, 9})
        for (int idx = 1; idx <= 10; ++idx) {
            InstanceFixture f = load_fixture(n, idx);
            REQUIRE(f.adjacency.n() == n);
            for (int i = 0; i < n; ++i) {
                CHECK(f.adjacency.at(i, i) == 0.0);
                for (int j = 0; j < n; ++j) CHECK(f.adjacency.at(i, j) == f.adjacency.at(j, i));
            }
        }
}

TEST_CASE("unknown fixture ids are rejected") {
    CHECK_THROWS_AS(load_fixture(7, 1), std::invalid_argument);
    CHECK_THROWS_AS(load_fixture(8, 0), std::invalid_argument);
    CHECK_THROWS_AS(load_fixture(9, 11), std::invalid_argument);
}

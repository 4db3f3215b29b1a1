#pragma once

#include <optional>
#include <stdexcept>

#include "spectral/connectivity.hpp"
#include "spectral/fixture_data.hpp"
#include "spectral/graph.hpp"
#include "spectral/magic.hpp"
#include "spectral/rng.hpp"
#include "spectral/tree_enum.hpp"

namespace spectral {

struct InstanceFixture {
    int n = 0;
    int idx = 0;
    Matrix adjacency;
    std::optional<double> known_optimum;

    WeightedGraph graph() const { return WeightedGraph::complete(adjacency); }
};

// Embedded benchmark instance (n in {8,9}, idx in 1..10) with its known
// optimal spanning-tree algebraic connectivity.
inline InstanceFixture load_fixture(int n, int idx) {
    if ((n != 8 && n != 9) || idx < 1 || idx > fixture_data::kCount)
        throw std::invalid_argument("load_fixture: unknown fixture id");
    InstanceFixture f;
    f.n = n;
    f.idx = idx;
    f.adjacency = Matrix(n);
    const double *upper = (n == 8) ? fixture_data::kUpper8[idx - 1] : fixture_data::kUpper9[idx - 1];
    int k = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++k) {
            f.adjacency.at(i, j) = upper[k];
            f.adjacency.at(j, i) = upper[k];
        }
    f.known_optimum = (n == 8) ? fixture_data::kOptimum8[idx - 1] : fixture_data::kOptimum9[idx - 1];
    return f;
}

namespace detail {

// The n candidate stars; star c has edges {c,j} for all j != c.
inline EdgeSelection star_selection(const WeightedGraph &g, int center) {
    EdgeSelection s(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        const Edge &ed = g.edge(e);
        if (ed.i == center || ed.j == center) s.set(e, true);
    }
    return s;
}

inline bool passes_instance_filter(const WeightedGraph &g) {
    // Accept when the maximum spanning tree beats every star on lambda2.
    // On 3 nodes every tree is a star, so the filter is vacuous.
    if (g.n() <= 3) return true;
    const double mst_l2 = algebraic_connectivity(max_spanning_tree(g));
    for (int c = 0; c < g.n(); ++c) {
        EdgeSelection star = detail::star_selection(g, c);
        if (star.popcount() != g.n() - 1) continue; // incomplete candidate set
        if (algebraic_connectivity(star) >= mst_l2) return false;
    }
    return true;
}

} // namespace detail

// Random complete instance: A = (M o R) + (M o R)' with M the order-n
// magic square and R uniform(0,1), both with zero diagonal. R is filled
// row-major from SplitMix64(seed). Instances whose maximum spanning tree
// does not beat every star on algebraic connectivity are rejected and
// regenerated with the incremented seed.
inline WeightedGraph generate_random(int n, uint64_t seed) {
    if (n < 3 || n > 64) throw std::invalid_argument("generate_random: 3 <= n <= 64 required");
    const Matrix m = magic_square(n);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        SplitMix64 rng(seed + attempt);
        Matrix r(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) r.at(i, j) = rng.uniform01();
        Matrix a(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) a.at(i, j) = m.at(i, j) * r.at(i, j) + m.at(j, i) * r.at(j, i);
        WeightedGraph g = WeightedGraph::complete(a);
        if (detail::passes_instance_filter(g)) return g;
    }
    throw std::runtime_error("generate_random: no acceptable instance found");
}

} // namespace spectral

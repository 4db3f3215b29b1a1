#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "spectral/matrix.hpp"

namespace spectral {

struct Edge {
    int i;
    int j;
    double w;
};

// Candidate edge set with positive weights; the universe from which
// selections are drawn. Nodes are 0..n-1, edges stored with i < j.
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        validate();
    }

    static WeightedGraph complete(const Matrix &adjacency) {
        const int n = adjacency.n();
        std::vector<Edge> es;
        es.reserve(static_cast<size_t>(n) * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (adjacency.at(i, j) > 0.0) es.push_back({i, j, adjacency.at(i, j)});
        return WeightedGraph(n, std::move(es));
    }

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge> &edges() const { return edges_; }
    const Edge &edge(int e) const { return edges_[e]; }

    // Index of edge {i,j}, or -1 when absent.
    int find_edge(int i, int j) const {
        if (i > j) std::swap(i, j);
        for (int e = 0; e < edge_count(); ++e)
            if (edges_[e].i == i && edges_[e].j == j) return e;
        return -1;
    }

    double max_weight() const {
        double m = 0.0;
        for (const Edge &e : edges_) m = std::max(m, e.w);
        return m;
    }

    // Sum of incident weights per node (weighted degree of the candidate set).
    Vector weighted_degrees() const {
        Vector d(n_, 0.0);
        for (const Edge &e : edges_) {
            d[e.i] += e.w;
            d[e.j] += e.w;
        }
        return d;
    }

private:
    void validate() const {
        if (n_ < 2) throw std::invalid_argument("WeightedGraph: need at least 2 nodes");
        std::vector<std::pair<int, int>> seen;
        for (const Edge &e : edges_) {
            if (e.i < 0 || e.j >= n_ || e.i >= e.j)
                throw std::invalid_argument("WeightedGraph: edge endpoints must satisfy 0 <= i < j < n");
            if (e.w <= 0.0) throw std::invalid_argument("WeightedGraph: edge weights must be positive");
            seen.push_back({e.i, e.j});
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw std::invalid_argument("WeightedGraph: duplicate edge");
    }

    int n_ = 2;
    std::vector<Edge> edges_;
};

// Binary incidence vector over the candidate edges of a graph.
class EdgeSelection {
public:
    EdgeSelection() = default;
    explicit EdgeSelection(const WeightedGraph &g)
        : graph_(&g), chosen_(static_cast<size_t>(g.edge_count()), 0) {}

    EdgeSelection(const WeightedGraph &g, const std::vector<int> &edge_indices)
        : EdgeSelection(g) {
        for (int e : edge_indices) set(e, true);
    }

    const WeightedGraph &graph() const { return *graph_; }
    bool chosen(int e) const { return chosen_[e] != 0; }
    void set(int e, bool v) { chosen_[e] = v ? 1 : 0; }
    int size() const { return static_cast<int>(chosen_.size()); }

    int popcount() const {
        int c = 0;
        for (uint8_t b : chosen_) c += b;
        return c;
    }

    std::vector<int> chosen_indices() const {
        std::vector<int> idx;
        for (int e = 0; e < size(); ++e)
            if (chosen_[e]) idx.push_back(e);
        return idx;
    }

    double total_weight() const {
        double s = 0.0;
        for (int e = 0; e < size(); ++e)
            if (chosen_[e]) s += graph_->edge(e).w;
        return s;
    }

    bool operator==(const EdgeSelection &o) const { return chosen_ == o.chosen_; }

    // Lexicographic order on the sorted chosen edge-index sequences.
    bool lex_less(const EdgeSelection &o) const {
        return chosen_indices() < o.chosen_indices();
    }

private:
    const WeightedGraph *graph_ = nullptr;
    std::vector<uint8_t> chosen_;
};

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    // Returns false if x and y were already joined.
    bool unite(int x, int y) {
        int rx = find(x), ry = find(y);
        if (rx == ry) return false;
        parent_[rx] = ry;
        return true;
    }

private:
    std::vector<int> parent_;
};

inline bool is_connected(const EdgeSelection &sel) {
    const WeightedGraph &g = sel.graph();
    UnionFind uf(g.n());
    int components = g.n();
    for (int e = 0; e < sel.size(); ++e)
        if (sel.chosen(e) && uf.unite(g.edge(e).i, g.edge(e).j)) --components;
    return components == 1;
}

inline bool is_spanning_tree(const EdgeSelection &sel) {
    return sel.popcount() == sel.graph().n() - 1 && is_connected(sel);
}

// L(x) = sum over chosen edges of w_e (e_i - e_j)(e_i - e_j)'.
inline Matrix laplacian(const EdgeSelection &sel) {
    const WeightedGraph &g = sel.graph();
    Matrix L(g.n());
    for (int e = 0; e < sel.size(); ++e) {
        if (!sel.chosen(e)) continue;
        const Edge &ed = g.edge(e);
        L.at(ed.i, ed.i) += ed.w;
        L.at(ed.j, ed.j) += ed.w;
        L.at(ed.i, ed.j) -= ed.w;
        L.at(ed.j, ed.i) -= ed.w;
    }
    return L;
}

// Rayleigh term of a single edge: w_e (v_i - v_j)^2.
inline double edge_quadratic(const Edge &e, const Vector &v) {
    const double d = v[e.i] - v[e.j];
    return e.w * d * d;
}

} // namespace spectral

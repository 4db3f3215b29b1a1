#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <thread>
#include <vector>

#include "spectral/eigen.hpp"
#include "spectral/graph.hpp"

namespace spectral {

using EdgeWeightFn = std::function<double(const Edge &, int)>; // (edge, index)

inline EdgeWeightFn graph_weights() {
    return [](const Edge &e, int) { return e.w; };
}

namespace detail {

// Kruskal over (weight desc, index asc) with forced and forbidden edges.
// Returns sorted edge indices, or nullopt when no spanning tree exists.
// Among maximum-weight trees of the restricted family this yields the
// lexicographically smallest edge set (greedy basis of the matroid).
inline std::optional<std::vector<int>> kruskal_max(
    const WeightedGraph &g, const EdgeWeightFn &wf,
    const std::vector<int> &included, const std::vector<uint8_t> &excluded,
    const std::vector<int> &order) {
    UnionFind uf(g.n());
    std::vector<int> tree;
    tree.reserve(g.n() - 1);
    for (int e : included) {
        if (!uf.unite(g.edge(e).i, g.edge(e).j)) return std::nullopt;
        tree.push_back(e);
    }
    for (int e : order) {
        if (excluded[e]) continue;
        if (uf.unite(g.edge(e).i, g.edge(e).j)) tree.push_back(e);
        (void)wf;
    }
    if (static_cast<int>(tree.size()) != g.n() - 1) return std::nullopt;
    std::sort(tree.begin(), tree.end());
    return tree;
}

inline std::vector<int> weight_order(const WeightedGraph &g, const EdgeWeightFn &wf) {
    std::vector<int> order(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) order[e] = e;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const double wa = wf(g.edge(a), a), wb = wf(g.edge(b), b);
        if (wa != wb) return wa > wb;
        return a < b;
    });
    return order;
}

} // namespace detail

// Spanning tree maximizing the total of weightFn over its edges.
// Ties are resolved toward the lexicographically smallest edge set.
inline EdgeSelection max_spanning_tree(const WeightedGraph &g,
                                       const EdgeWeightFn &weightFn = graph_weights()) {
    const std::vector<int> order = detail::weight_order(g, weightFn);
    auto tree = detail::kruskal_max(g, weightFn, {}, std::vector<uint8_t>(g.edge_count(), 0), order);
    if (!tree) throw std::invalid_argument("max_spanning_tree: graph is disconnected");
    return EdgeSelection(g, *tree);
}

inline EdgeSelection min_spanning_tree(const WeightedGraph &g) {
    return max_spanning_tree(g, [](const Edge &e, int) { return -e.w; });
}

// First K spanning trees in non-increasing total-weight order, ties by
// lexicographic edge set; stops early when fewer trees exist. Lawler
// partitioning: each subproblem fixes some edges in and some out, and
// carries its own maximum spanning tree.
inline std::vector<EdgeSelection> enumerate_decreasing(
    const WeightedGraph &g, int K, const EdgeWeightFn &weightFn = graph_weights()) {
    if (K < 1) throw std::invalid_argument("enumerate_decreasing: K >= 1 required");

    struct Part {
        std::vector<int> included;
        std::vector<uint8_t> excluded;
        std::vector<int> tree;
        double weight;
    };
    const std::vector<int> order = detail::weight_order(g, weightFn);
    auto tree_weight = [&](const std::vector<int> &t) {
        double s = 0.0;
        for (int e : t) s += weightFn(g.edge(e), e);
        return s;
    };
    auto cmp = [](const Part &a, const Part &b) {
        if (a.weight != b.weight) return a.weight < b.weight; // max-heap on weight
        return a.tree > b.tree;                               // then lex-smallest tree first
    };
    std::priority_queue<Part, std::vector<Part>, decltype(cmp)> pq(cmp);

    Part root{{}, std::vector<uint8_t>(g.edge_count(), 0), {}, 0.0};
    auto t0 = detail::kruskal_max(g, weightFn, root.included, root.excluded, order);
    if (!t0) throw std::invalid_argument("enumerate_decreasing: graph is disconnected");
    root.tree = *t0;
    root.weight = tree_weight(root.tree);
    pq.push(std::move(root));

    std::vector<EdgeSelection> out;
    out.reserve(K);
    while (!pq.empty() && static_cast<int>(out.size()) < K) {
        Part p = pq.top();
        pq.pop();
        out.push_back(EdgeSelection(g, p.tree));

        std::vector<int> free_edges;
        for (int e : p.tree)
            if (std::find(p.included.begin(), p.included.end(), e) == p.included.end())
                free_edges.push_back(e);
        Part child = p;
        for (int fe : free_edges) {
            Part c = child;
            c.excluded[fe] = 1;
            auto t = detail::kruskal_max(g, weightFn, c.included, c.excluded, order);
            if (t) {
                c.tree = *t;
                c.weight = tree_weight(c.tree);
                pq.push(std::move(c));
            }
            child.included.push_back(fe); // later children force this edge in
        }
    }
    return out;
}

namespace detail {

// Contraction/deletion enumeration with a connectivity prune; visits every
// spanning tree exactly once, edge indices ascending within each tree.
template <typename Fn>
void enumerate_trees_rec(const WeightedGraph &g, int idx, UnionFind uf, int components,
                         std::vector<int> &picked, Fn &&emit) {
    const int n = g.n();
    if (components == 1) {
        emit(const_cast<const std::vector<int> &>(picked));
        return;
    }
    if (idx >= g.edge_count()) return;
    {
        UnionFind probe = uf;
        int c = components;
        for (int e = idx; e < g.edge_count() && c > 1; ++e)
            if (probe.unite(g.edge(e).i, g.edge(e).j)) --c;
        if (c > 1) return; // remaining edges cannot reconnect
    }
    const Edge &ed = g.edge(idx);
    UnionFind with = uf;
    if (with.unite(ed.i, ed.j)) {
        picked.push_back(idx);
        enumerate_trees_rec(g, idx + 1, with, components - 1, picked, emit);
        picked.pop_back();
    }
    enumerate_trees_rec(g, idx + 1, uf, components, picked, emit);
    (void)n;
}

} // namespace detail

// Visits every spanning tree exactly once as a sorted edge-index list.
// Guarded to n <= 9 (9^7 = 4,782,969 trees on the complete graph).
template <typename Fn>
void for_each_spanning_tree(const WeightedGraph &g, Fn &&emit) {
    if (g.n() > 9) throw std::invalid_argument("for_each_spanning_tree: n <= 9 required");
    std::vector<int> picked;
    picked.reserve(g.n() - 1);
    detail::enumerate_trees_rec(g, 0, UnionFind(g.n()), g.n(), picked, emit);
}

inline std::vector<EdgeSelection> all_spanning_trees(const WeightedGraph &g) {
    std::vector<EdgeSelection> out;
    for_each_spanning_tree(g, [&](const std::vector<int> &t) { out.push_back(EdgeSelection(g, t)); });
    return out;
}

inline long long count_spanning_trees(const WeightedGraph &g) {
    long long c = 0;
    for_each_spanning_tree(g, [&](const std::vector<int> &) { ++c; });
    return c;
}

using TreeFilter = std::function<bool(const EdgeSelection &)>;

namespace detail {

struct BruteState {
    double best = -std::numeric_limits<double>::infinity();
    std::vector<int> best_tree;
    long long considered = 0;
};

inline void brute_force_scan(const WeightedGraph &g, const TreeFilter &filter, BruteState &st) {
    Matrix scratch(g.n());
    EdgeSelection scratch_sel(g);
    for_each_spanning_tree(g, [&](const std::vector<int> &tree) {
        ++st.considered;
        if (filter) {
            for (int e = 0; e < scratch_sel.size(); ++e) scratch_sel.set(e, false);
            for (int e : tree) scratch_sel.set(e, true);
            if (!filter(scratch_sel)) return;
        }
        for (int i = 0; i < g.n(); ++i)
            for (int j = 0; j < g.n(); ++j) scratch.at(i, j) = 0.0;
        for (int e : tree) {
            const Edge &ed = g.edge(e);
            scratch.at(ed.i, ed.i) += ed.w;
            scratch.at(ed.j, ed.j) += ed.w;
            scratch.at(ed.i, ed.j) -= ed.w;
            scratch.at(ed.j, ed.i) -= ed.w;
        }
        const double l2 = eigenvalues(scratch)[1];
        if (l2 > st.best || (l2 == st.best && tree < st.best_tree)) {
            st.best = l2;
            st.best_tree = tree;
        }
    });
}

} // namespace detail

// Argmax of lambda2 over all spanning trees passing the filter, ties to
// the lexicographically smallest edge set. Exhaustive oracle, n <= 9.
inline std::pair<EdgeSelection, double> brute_force_optimum(
    const WeightedGraph &g, const TreeFilter &filter = nullptr) {
    detail::BruteState st;
    detail::brute_force_scan(g, filter, st);
    if (st.best_tree.empty())
        throw std::runtime_error("brute_force_optimum: no feasible spanning tree under filter");
    return {EdgeSelection(g, st.best_tree), st.best};
}

} // namespace spectral

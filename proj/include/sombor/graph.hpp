#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sombor/error.hpp"

namespace sombor {

using Edge = std::pair<int, int>;

/// Simple undirected graph over dense 0-based vertex ids.
/// Edges are stored normalized (u < v) and sorted; degrees are cached at
/// construction. The type is an immutable value: every operation that
/// "modifies" a graph returns a new one.
class Graph {
public:
    Graph() = default;

    Graph(int vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
        if (vertex_count < 0)
            fail(errc::bad_parameter, "vertex count must be nonnegative");
        edges_.reserve(edges.size());
        for (auto [u, v] : edges) {
            if (u < 0 || u >= vertex_count_ || v < 0 || v >= vertex_count_)
                fail(errc::vertex_out_of_range,
                     "edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") exceeds vertex count " + std::to_string(vertex_count_));
            if (u == v)
                fail(errc::self_loop, "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
            edges_.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges_.begin(), edges_.end());
        auto dup = std::adjacent_find(edges_.begin(), edges_.end());
        if (dup != edges_.end())
            fail(errc::duplicate_edge,
                 "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) +
                     ") listed more than once");
        degrees_.assign(static_cast<std::size_t>(vertex_count_), 0);
        for (auto [u, v] : edges_) {
            ++degrees_[static_cast<std::size_t>(u)];
            ++degrees_[static_cast<std::size_t>(v)];
        }
    }

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }

    int degree(int v) const {
        if (v < 0 || v >= vertex_count_)
            fail(errc::vertex_out_of_range, "vertex " + std::to_string(v));
        return degrees_[static_cast<std::size_t>(v)];
    }

    bool has_edge(int u, int v) const {
        if (u == v) return false;
        Edge e{std::min(u, v), std::max(u, v)};
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
    }

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;   // normalized, sorted, unique
    std::vector<int> degrees_;  // cached
};

inline Graph make_graph(int vertex_count, const std::vector<Edge>& edges) {
    return Graph(vertex_count, edges);
}

/// Unordered endpoint-degree pair (a <= b).
using DegreePair = std::pair<int, int>;

/// Multiset of endpoint-degree pairs over all edges. This is the sufficient
/// statistic for every edge-sum degree-based invariant.
using DegreePairProfile = std::map<DegreePair, std::int64_t>;

inline DegreePairProfile degree_pair_profile(const Graph& g) {
    if (g.edge_count() == 0)
        fail(errc::no_edges, "degree pair profile requires at least one edge");
    DegreePairProfile profile;
    for (auto [u, v] : g.edges()) {
        int a = g.degree(u), b = g.degree(v);
        if (a > b) std::swap(a, b);
        ++profile[{a, b}];
    }
    return profile;
}

inline std::int64_t profile_total(const DegreePairProfile& p) {
    std::int64_t total = 0;
    for (const auto& [pair, count] : p) total += count;
    return total;
}

struct DegreeExtremes {
    int min_degree = 0;  // delta
    int max_degree = 0;  // Delta
};

inline DegreeExtremes degree_extremes(const Graph& g) {
    if (g.vertex_count() == 0)
        fail(errc::empty_graph, "degree extremes of an empty graph");
    auto [lo, hi] = std::minmax_element(g.degrees().begin(), g.degrees().end());
    if (*lo == 0)
        fail(errc::isolated_vertex, "graph has an isolated vertex");
    return DegreeExtremes{*lo, *hi};
}

inline bool is_regular(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    auto [lo, hi] = std::minmax_element(g.degrees().begin(), g.degrees().end());
    return *lo == *hi;
}

/// Connectivity helper for CLI validation and samplers; the graph type
/// itself does not require connectivity.
inline bool is_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<std::size_t>(v)]) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

inline Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        fail(errc::non_edge, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    Edge target{std::min(u, v), std::max(u, v)};
    std::vector<Edge> edges;
    edges.reserve(g.edges().size() - 1);
    for (auto e : g.edges())
        if (e != target) edges.push_back(e);
    return Graph(g.vertex_count(), std::move(edges));
}

/// Relabels vertices through a permutation of [0, vertex_count).
inline Graph relabel(const Graph& g, const std::vector<int>& permutation) {
    int n = g.vertex_count();
    if (static_cast<int>(permutation.size()) != n)
        fail(errc::bad_permutation, "permutation size " + std::to_string(permutation.size()) +
                                        " does not match vertex count " + std::to_string(n));
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (int img : permutation) {
        if (img < 0 || img >= n || hit[static_cast<std::size_t>(img)])
            fail(errc::bad_permutation, "not a bijection on [0," + std::to_string(n) + ")");
        hit[static_cast<std::size_t>(img)] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (auto [u, v] : g.edges())
        edges.emplace_back(permutation[static_cast<std::size_t>(u)],
                           permutation[static_cast<std::size_t>(v)]);
    return Graph(n, std::move(edges));
}

} // namespace sombor

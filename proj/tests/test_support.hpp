// Test-side oracles, kept independent of the library's cached degrees and
// profile path: degrees are recounted from raw edge lists, the grid is
// rebuilt from coordinates, and blocks come from a separate DFS.
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "sombor/sombor.hpp"

namespace test_support {

/// Degree-pair profile recomputed from scratch (no cached degrees).
inline sombor::DegreePairProfile brute_profile(const sombor::Graph& g) {
    std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [u, v] : g.edges()) {
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    sombor::DegreePairProfile profile;
    for (auto [u, v] : g.edges()) {
        int a = degree[static_cast<std::size_t>(u)];
        int b = degree[static_cast<std::size_t>(v)];
        if (a > b) std::swap(a, b);
        ++profile[{a, b}];
    }
    return profile;
}

/// Direct edge-by-edge sum with recounted degrees.
inline double brute_sum(const sombor::Graph& g, const std::function<double(int, int)>& f) {
    std::vector<int> degree(static_cast<std::size_t>(g.vertex_count()), 0);
    for (auto [u, v] : g.edges()) {
        ++degree[static_cast<std::size_t>(u)];
        ++degree[static_cast<std::size_t>(v)];
    }
    double total = 0.0;
    for (auto [u, v] : g.edges())
        total += f(degree[static_cast<std::size_t>(u)], degree[static_cast<std::size_t>(v)]);
    return total;
}

/// m-by-n grid built directly from coordinates.
inline sombor::Graph coordinate_grid(int m, int n) {
    std::vector<sombor::Edge> edges;
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c) {
            if (c + 1 < n) edges.emplace_back(r * n + c, r * n + c + 1);
            if (r + 1 < m) edges.emplace_back(r * n + c, (r + 1) * n + c);
        }
    return sombor::Graph(m * n, std::move(edges));
}

inline sombor::Graph complete_graph(int r) {
    std::vector<sombor::Edge> edges;
    for (int u = 0; u < r; ++u)
        for (int v = u + 1; v < r; ++v) edges.emplace_back(u, v);
    return sombor::Graph(r, std::move(edges));
}

/// Biconnected components as edge sets (recursive lowpoint DFS).
inline std::vector<std::vector<sombor::Edge>> biconnected_blocks(const sombor::Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<sombor::Edge> stack;
    std::vector<std::vector<sombor::Edge>> blocks;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        bool skipped_parent_edge = false;
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (v == parent && !skipped_parent_edge) {
                skipped_parent_edge = true;
                continue;
            }
            if (disc[static_cast<std::size_t>(v)] == -1) {
                stack.emplace_back(u, v);
                dfs(v, u);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) {
                    std::vector<sombor::Edge> block;
                    while (!stack.empty()) {
                        sombor::Edge e = stack.back();
                        stack.pop_back();
                        block.push_back(e);
                        if (e == sombor::Edge{u, v}) break;
                    }
                    blocks.push_back(std::move(block));
                }
            } else if (disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
                stack.emplace_back(u, v);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[static_cast<std::size_t>(v)] == -1 && !adj[static_cast<std::size_t>(v)].empty())
            dfs(v, -1);
    return blocks;
}

/// True iff every edge lies on exactly one cycle, i.e. every block is a
/// cycle (|edges| == |vertices| within the block, no bridge blocks).
inline bool every_edge_on_exactly_one_cycle(const sombor::Graph& g) {
    for (const auto& block : biconnected_blocks(g)) {
        if (block.size() < 3) return false;  // bridge or multi-edge block
        std::map<int, int> in_block_degree;
        for (auto [u, v] : block) {
            ++in_block_degree[u];
            ++in_block_degree[v];
        }
        if (in_block_degree.size() != block.size()) return false;
        for (const auto& [vertex, d] : in_block_degree)
            if (d != 2) return false;
    }
    return true;
}

inline std::vector<int> random_permutation(int n, sombor::Rng& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[static_cast<std::size_t>(i)],
                  perm[static_cast<std::size_t>(rng.uniform_int(0, i))]);
    return perm;
}

/// Random connected graph for property tests (rejection sampling).
inline sombor::Graph random_connected_graph(sombor::Rng& rng, int max_vertices) {
    const int n = rng.uniform_int(2, max_vertices);
    const double p = 0.15 + 0.8 * rng.uniform01();
    while (true) {
        std::vector<sombor::Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.bernoulli(p)) edges.emplace_back(u, v);
        sombor::Graph g(n, std::move(edges));
        if (sombor::is_connected(g)) return g;
    }
}

} // namespace test_support

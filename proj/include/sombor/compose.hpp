#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

inline Graph disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    std::vector<Edge> edges;
    for (const Graph& g : parts) {
        for (auto [u, v] : g.edges()) edges.emplace_back(u + total, v + total);
        total += g.vertex_count();
    }
    return Graph(total, std::move(edges));
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    return disjoint_union(std::vector<Graph>{a, b});
}

/// Cartesian product g x h. Vertex (a, x) maps to a * |V(h)| + x;
/// (a,x) ~ (b,y) iff (a = b and x ~ y) or (x = y and a ~ b).
inline Graph cartesian_product(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        fail(errc::empty_graph, "cartesian product of an empty graph");
    const int hn = h.vertex_count();
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(g.vertex_count()) * h.edges().size() +
                  static_cast<std::size_t>(hn) * g.edges().size());
    for (int a = 0; a < g.vertex_count(); ++a)
        for (auto [x, y] : h.edges()) edges.emplace_back(a * hn + x, a * hn + y);
    for (auto [a, b] : g.edges())
        for (int x = 0; x < hn; ++x) edges.emplace_back(a * hn + x, b * hn + x);
    return Graph(g.vertex_count() * hn, std::move(edges));
}

/// Join g v h: disjoint union plus every cross edge. g keeps its ids,
/// h is shifted by |V(g)|.
inline Graph join(const Graph& g, const Graph& h) {
    if (g.vertex_count() == 0 || h.vertex_count() == 0)
        fail(errc::empty_graph, "join of an empty graph");
    Graph base = disjoint_union(g, h);
    std::vector<Edge> edges = base.edges();
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int x = 0; x < h.vertex_count(); ++x)
            edges.emplace_back(a, g.vertex_count() + x);
    return Graph(base.vertex_count(), std::move(edges));
}

/// Ordered monomers joined by bridge edges: the out-anchor y_i of monomer i
/// is bridged to the in-anchor x_{i+1} of monomer i+1.
struct LinkSpec {
    std::vector<Graph> monomers;
    std::vector<std::pair<int, int>> anchors;  // (x_i, y_i) per monomer
};

inline void validate(const LinkSpec& spec) {
    if (spec.monomers.size() < 2)
        fail(errc::bad_link_spec, "link requires at least 2 monomers");
    if (spec.anchors.size() != spec.monomers.size())
        fail(errc::bad_link_spec, "one (x, y) anchor pair required per monomer");
    for (std::size_t i = 0; i < spec.monomers.size(); ++i) {
        const Graph& g = spec.monomers[i];
        auto [x, y] = spec.anchors[i];
        if (g.vertex_count() < 2)
            fail(errc::bad_link_spec, "monomer " + std::to_string(i) + " is degenerate (one vertex)");
        if (x < 0 || x >= g.vertex_count() || y < 0 || y >= g.vertex_count())
            fail(errc::bad_link_spec, "anchor out of range in monomer " + std::to_string(i));
        if (x == y)
            fail(errc::bad_link_spec, "anchors coincide in monomer " + std::to_string(i));
    }
}

inline Graph link(const LinkSpec& spec) {
    validate(spec);
    std::vector<int> offset(spec.monomers.size(), 0);
    for (std::size_t i = 1; i < spec.monomers.size(); ++i)
        offset[i] = offset[i - 1] + spec.monomers[i - 1].vertex_count();
    Graph base = disjoint_union(spec.monomers);
    std::vector<Edge> edges = base.edges();
    for (std::size_t i = 0; i + 1 < spec.monomers.size(); ++i)
        edges.emplace_back(offset[i] + spec.anchors[i].second,
                           offset[i + 1] + spec.anchors[i + 1].first);
    return Graph(base.vertex_count(), std::move(edges));
}

/// One vertex identification between two monomers.
struct Identification {
    int monomer_a = 0;
    int vertex_a = 0;
    int monomer_b = 0;
    int vertex_b = 0;
};

namespace detail {

// Union-find where the smaller root id wins, so merged classes keep a
// deterministic representative.
struct MinUnionFind {
    std::vector<int> parent;

    explicit MinUnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    }

    // Returns false if already joined.
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (a > b) std::swap(a, b);
        parent[static_cast<std::size_t>(b)] = a;
        return true;
    }
};

} // namespace detail

/// Polymer construction by point-attaching: the identification list must
/// form a tree over monomer indices (k-1 identifications, no cycle). Each
/// identification merges one vertex of each monomer; the merged vertex
/// keeps the position of its smallest member in the (monomer, local id)
/// ordering, and ids are compacted to stay dense.
inline Graph point_attach(const std::vector<Graph>& monomers,
                          const std::vector<Identification>& identifications) {
    const int k = static_cast<int>(monomers.size());
    if (k == 0) fail(errc::bad_parameter, "point_attach requires at least one monomer");
    if (static_cast<int>(identifications.size()) != k - 1)
        fail(errc::identification_cycle,
             "a tree over " + std::to_string(k) + " monomers needs exactly " +
                 std::to_string(k - 1) + " identifications, got " +
                 std::to_string(identifications.size()));

    std::vector<int> offset(static_cast<std::size_t>(k), 0);
    for (int i = 1; i < k; ++i)
        offset[static_cast<std::size_t>(i)] =
            offset[static_cast<std::size_t>(i - 1)] + monomers[static_cast<std::size_t>(i - 1)].vertex_count();
    const int total = offset[static_cast<std::size_t>(k - 1)] +
                      monomers[static_cast<std::size_t>(k - 1)].vertex_count();

    detail::MinUnionFind monomer_tree(k);
    detail::MinUnionFind classes(total);
    for (const Identification& id : identifications) {
        if (id.monomer_a < 0 || id.monomer_a >= k || id.monomer_b < 0 || id.monomer_b >= k)
            fail(errc::bad_parameter, "identification names a monomer out of range");
        if (id.monomer_a == id.monomer_b)
            fail(errc::identification_cycle, "identification within a single monomer");
        const Graph& ga = monomers[static_cast<std::size_t>(id.monomer_a)];
        const Graph& gb = monomers[static_cast<std::size_t>(id.monomer_b)];
        if (id.vertex_a < 0 || id.vertex_a >= ga.vertex_count() || id.vertex_b < 0 ||
            id.vertex_b >= gb.vertex_count())
            fail(errc::vertex_out_of_range, "identification names a vertex out of range");
        if (!monomer_tree.unite(id.monomer_a, id.monomer_b))
            fail(errc::identification_cycle, "identifications do not form a tree over monomers");
        classes.unite(offset[static_cast<std::size_t>(id.monomer_a)] + id.vertex_a,
                      offset[static_cast<std::size_t>(id.monomer_b)] + id.vertex_b);
    }

    std::vector<int> label(static_cast<std::size_t>(total), -1);
    int next = 0;
    for (int v = 0; v < total; ++v)
        if (classes.find(v) == v) label[static_cast<std::size_t>(v)] = next++;

    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (auto [u, v] : monomers[static_cast<std::size_t>(i)].edges())
            edges.emplace_back(
                label[static_cast<std::size_t>(classes.find(offset[static_cast<std::size_t>(i)] + u))],
                label[static_cast<std::size_t>(classes.find(offset[static_cast<std::size_t>(i)] + v))]);
    return Graph(next, std::move(edges));
}

} // namespace sombor

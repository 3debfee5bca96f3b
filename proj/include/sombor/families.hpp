#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/compose.hpp"
#include "sombor/graph.hpp"

namespace sombor {

/// Named graph families. The six *_chain entries are chain cacti:
/// polygons glued at cut vertices, distinguished by where consecutive
/// polygons attach (ortho = adjacent, meta = one apart, para = opposite).
enum class Family {
    path,
    cycle,
    star,
    complete_bipartite,
    wheel,
    ladder,
    friendship,
    book,
    dutch_windmill,
    grid,
    tri_chain,
    square_para_chain,
    square_ortho_chain,
    hex_ortho_chain,
    hex_para_chain,
    hex_meta_chain,
};

inline constexpr std::array<Family, 16> all_families = {
    Family::path,       Family::cycle,           Family::star,
    Family::complete_bipartite, Family::wheel,   Family::ladder,
    Family::friendship, Family::book,            Family::dutch_windmill,
    Family::grid,       Family::tri_chain,       Family::square_para_chain,
    Family::square_ortho_chain, Family::hex_ortho_chain,
    Family::hex_para_chain,     Family::hex_meta_chain,
};

inline const char* family_cli_name(Family f) {
    switch (f) {
        case Family::path:               return "path";
        case Family::cycle:              return "cycle";
        case Family::star:               return "star";
        case Family::complete_bipartite: return "kmn";
        case Family::wheel:              return "wheel";
        case Family::ladder:             return "ladder";
        case Family::friendship:         return "friendship";
        case Family::book:               return "book";
        case Family::dutch_windmill:     return "windmill";
        case Family::grid:               return "grid";
        case Family::tri_chain:          return "tri-chain";
        case Family::square_para_chain:  return "sq-para";
        case Family::square_ortho_chain: return "sq-ortho";
        case Family::hex_ortho_chain:    return "hex-ortho";
        case Family::hex_para_chain:     return "hex-para";
        case Family::hex_meta_chain:     return "hex-meta";
    }
    return "?";
}

inline std::optional<Family> family_from_cli_name(std::string_view name) {
    for (Family f : all_families)
        if (name == family_cli_name(f)) return f;
    return std::nullopt;
}

/// True for families taking a second integer parameter m.
inline bool family_uses_m(Family f) {
    return f == Family::complete_bipartite || f == Family::dutch_windmill || f == Family::grid;
}

struct FamilySpec {
    Family family = Family::path;
    int n = 0;
    int m = 0;  // kmn (larger side), windmill (copies), grid (rows)
};

inline void validate(const FamilySpec& s) {
    const auto need = [&](bool ok, const std::string& constraint) {
        if (!ok)
            fail(errc::bad_parameter,
                 std::string(family_cli_name(s.family)) + " requires " + constraint);
    };
    switch (s.family) {
        case Family::path:               need(s.n >= 1, "n >= 1"); break;
        case Family::cycle:              need(s.n >= 3, "n >= 3"); break;
        case Family::star:               need(s.n >= 1, "n >= 1"); break;
        case Family::complete_bipartite: need(s.m >= s.n && s.n >= 1, "m >= n >= 1"); break;
        case Family::wheel:              need(s.n >= 3, "rim length n >= 3"); break;
        case Family::ladder:             need(s.n >= 2, "n >= 2"); break;
        case Family::friendship:         need(s.n >= 1, "n >= 1"); break;
        case Family::book:               need(s.n >= 1, "n >= 1"); break;
        case Family::dutch_windmill:
            need(s.n >= 3, "cycle length n >= 3");
            need(s.m >= 2, "m >= 2 cycles");
            break;
        case Family::grid:               need(s.n >= 2 && s.m >= 2, "m >= 2 and n >= 2"); break;
        default:                         need(s.n >= 2, "chain length n >= 2"); break;
    }
}

namespace detail {

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

inline Graph single_vertex() { return Graph(1, {}); }

/// Chain of n copies of a polygon glued at cut vertices: local vertex
/// `attach` of polygon i is identified with local vertex 0 of polygon i+1.
inline Graph polygon_chain(int polygon_size, int attach, int n) {
    std::vector<Graph> monomers(static_cast<std::size_t>(n), cycle_graph(polygon_size));
    std::vector<Identification> ids;
    for (int i = 0; i + 1 < n; ++i) ids.push_back({i, attach, i + 1, 0});
    return point_attach(monomers, ids);
}

} // namespace detail

/// Generates the canonical labeling of a family. Deterministic: the same
/// spec always produces the identical edge list.
inline Graph generate(const FamilySpec& s) {
    validate(s);
    switch (s.family) {
        case Family::path:  return detail::path_graph(s.n);
        case Family::cycle: return detail::cycle_graph(s.n);
        case Family::star: {
            // center is vertex 0, leaves 1..n
            std::vector<Edge> edges;
            for (int i = 1; i <= s.n; ++i) edges.emplace_back(0, i);
            return Graph(s.n + 1, std::move(edges));
        }
        case Family::complete_bipartite: {
            // side of size m first (ids 0..m-1), then side of size n
            std::vector<Edge> edges;
            for (int a = 0; a < s.m; ++a)
                for (int b = 0; b < s.n; ++b) edges.emplace_back(a, s.m + b);
            return Graph(s.m + s.n, std::move(edges));
        }
        case Family::wheel:
            // rim 0..n-1, hub n
            return join(detail::cycle_graph(s.n), detail::single_vertex());
        case Family::ladder:
            return cartesian_product(detail::path_graph(s.n), detail::path_graph(2));
        case Family::friendship: {
            // blades (2i, 2i+1), hub 2n
            std::vector<Graph> blades(static_cast<std::size_t>(s.n), detail::path_graph(2));
            return join(disjoint_union(blades), detail::single_vertex());
        }
        case Family::book:
            return cartesian_product(generate({Family::star, s.n, 0}), detail::path_graph(2));
        case Family::dutch_windmill: {
            // m cycles of length n sharing vertex 0
            std::vector<Graph> cycles(static_cast<std::size_t>(s.m), detail::cycle_graph(s.n));
            std::vector<Identification> ids;
            for (int i = 1; i < s.m; ++i) ids.push_back({0, 0, i, 0});
            return point_attach(cycles, ids);
        }
        case Family::grid:
            // m rows by n columns; vertex (r, c) is r*n + c
            return cartesian_product(detail::path_graph(s.m), detail::path_graph(s.n));
        case Family::tri_chain:          return detail::polygon_chain(3, 1, s.n);
        case Family::square_para_chain:  return detail::polygon_chain(4, 2, s.n);
        case Family::square_ortho_chain: return detail::polygon_chain(4, 1, s.n);
        case Family::hex_ortho_chain:    return detail::polygon_chain(6, 1, s.n);
        case Family::hex_para_chain:     return detail::polygon_chain(6, 3, s.n);
        case Family::hex_meta_chain:     return detail::polygon_chain(6, 2, s.n);
    }
    fail(errc::bad_parameter, "unknown family");
}

} // namespace sombor

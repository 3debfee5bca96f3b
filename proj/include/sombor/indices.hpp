#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

#include "sombor/graph.hpp"

namespace sombor {

/// The built-in edge-sum invariants. "so" is the plain radical index;
/// so1..so6 are the related family built from |a^2-b^2|, (a^2+b^2)/(a+b)
/// and radical denominators, some carrying pi factors.
enum class IndexId { so, so1, so2, so3, so4, so5, so6 };

inline constexpr std::array<IndexId, 7> all_index_ids = {
    IndexId::so,  IndexId::so1, IndexId::so2, IndexId::so3,
    IndexId::so4, IndexId::so5, IndexId::so6,
};

inline const char* index_name(IndexId id) {
    switch (id) {
        case IndexId::so:  return "so";
        case IndexId::so1: return "so1";
        case IndexId::so2: return "so2";
        case IndexId::so3: return "so3";
        case IndexId::so4: return "so4";
        case IndexId::so5: return "so5";
        case IndexId::so6: return "so6";
    }
    return "?";
}

inline std::optional<IndexId> index_from_name(std::string_view name) {
    for (IndexId id : all_index_ids)
        if (name == index_name(id)) return id;
    return std::nullopt;
}

/// Per-edge weight of each built-in, as a function of the endpoint degrees.
/// The 1/2 of so1 and so4 (and the squared forms of so4/so6) live inside
/// the per-edge weight so the edge-sum and profile paths share one table.
inline double edge_weight(IndexId id, int da, int db) {
    const double a = da, b = db;
    const double sq = a * a + b * b;
    constexpr double pi = std::numbers::pi;
    constexpr double rt2 = std::numbers::sqrt2;
    switch (id) {
        case IndexId::so:  return std::sqrt(sq);
        case IndexId::so1: return 0.5 * std::abs(a * a - b * b);
        case IndexId::so2: return std::abs(a * a - b * b) / sq;
        case IndexId::so3: return rt2 * pi * sq / (a + b);
        case IndexId::so4: {
            const double q = sq / (a + b);
            return 0.5 * pi * q * q;
        }
        case IndexId::so5: return 2.0 * pi * std::abs(a * a - b * b) / (rt2 + 2.0 * std::sqrt(sq));
        case IndexId::so6: {
            const double t = (a * a - b * b) / (rt2 + 2.0 * std::sqrt(sq));
            return pi * t * t;
        }
    }
    fail(errc::bad_parameter, "unknown index id");
}

/// A caller-supplied symmetric weight F(a, b). Unless the caller asserts
/// symmetry, the engine spot-checks F(a,b) = F(b,a) on every degree pair
/// present and rejects violations.
struct EdgeWeightFunction {
    std::function<double(int, int)> eval;
    bool symmetry_asserted = false;
};

namespace detail {

inline void require_no_isolated(const Graph& g) {
    for (int d : g.degrees())
        if (d == 0) fail(errc::isolated_vertex, "index is undefined on graphs with isolated vertices");
}

} // namespace detail

/// Edge-sum invariant with a custom weight: sum over edges of f(d_u, d_v).
inline double edge_sum_index(const Graph& g, const EdgeWeightFunction& f) {
    detail::require_no_isolated(g);
    if (!f.symmetry_asserted && g.edge_count() > 0) {
        for (const auto& [pair, count] : degree_pair_profile(g)) {
            const double ab = f.eval(pair.first, pair.second);
            const double ba = f.eval(pair.second, pair.first);
            const double scale = std::max({1.0, std::abs(ab), std::abs(ba)});
            if (std::abs(ab - ba) > 1e-12 * scale)
                fail(errc::asymmetric_weight,
                     "F(" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                         ") != F(" + std::to_string(pair.second) + "," + std::to_string(pair.first) + ")");
        }
    }
    double total = 0.0;
    for (auto [u, v] : g.edges()) {
        const double w = f.eval(g.degree(u), g.degree(v));
        if (!std::isfinite(w))
            fail(errc::non_finite_weight, "weight is not finite on degree pair (" +
                                              std::to_string(g.degree(u)) + "," +
                                              std::to_string(g.degree(v)) + ")");
        total += w;
    }
    return total;
}

/// Built-in invariant, accumulated edge by edge.
inline double compute(const Graph& g, IndexId id) {
    detail::require_no_isolated(g);
    double total = 0.0;
    for (auto [u, v] : g.edges()) total += edge_weight(id, g.degree(u), g.degree(v));
    return total;
}

/// Built-in invariant from a degree-pair profile: sum of count * F(a, b).
/// Agrees with compute() whenever the profile came from the same graph.
inline double index_from_profile(const DegreePairProfile& p, IndexId id) {
    if (p.empty()) fail(errc::empty_profile, "index of an empty profile");
    double total = 0.0;
    for (const auto& [pair, count] : p)
        total += static_cast<double>(count) * edge_weight(id, pair.first, pair.second);
    return total;
}

/// All seven built-ins in one pass over the profile.
inline std::map<IndexId, double> all_indices(const Graph& g) {
    detail::require_no_isolated(g);
    const DegreePairProfile profile = degree_pair_profile(g);
    std::map<IndexId, double> out;
    for (IndexId id : all_index_ids) out[id] = index_from_profile(profile, id);
    return out;
}

} // namespace sombor

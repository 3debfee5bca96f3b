#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/compose.hpp"
#include "sombor/families.hpp"
#include "sombor/graph.hpp"
#include "sombor/indices.hpp"
#include "sombor/rng.hpp"

namespace sombor {

/// One checkable published inequality.
enum class BoundId {
    edge_del_so1,
    link_so1,
    link_so1_uniform,
    sandwich_so2,
    del_so2,
    sandwich_so3,
    del_so3,
    sandwich_so4,
    del_so4,
    sandwich_so5,
    del_so5,
    upper_so6,
};

inline constexpr std::array<BoundId, 12> all_bound_ids = {
    BoundId::edge_del_so1, BoundId::link_so1,     BoundId::link_so1_uniform,
    BoundId::sandwich_so2, BoundId::del_so2,      BoundId::sandwich_so3,
    BoundId::del_so3,      BoundId::sandwich_so4, BoundId::del_so4,
    BoundId::sandwich_so5, BoundId::del_so5,      BoundId::upper_so6,
};

inline const char* bound_cli_name(BoundId b) {
    switch (b) {
        case BoundId::edge_del_so1:     return "edge-del-so1";
        case BoundId::link_so1:         return "link-so1";
        case BoundId::link_so1_uniform: return "link-so1-uniform";
        case BoundId::sandwich_so2:     return "sandwich-so2";
        case BoundId::del_so2:          return "del-so2";
        case BoundId::sandwich_so3:     return "sandwich-so3";
        case BoundId::del_so3:          return "del-so3";
        case BoundId::sandwich_so4:     return "sandwich-so4";
        case BoundId::del_so4:          return "del-so4";
        case BoundId::sandwich_so5:     return "sandwich-so5";
        case BoundId::del_so5:          return "del-so5";
        case BoundId::upper_so6:        return "upper-so6";
    }
    return "?";
}

inline std::optional<BoundId> bound_from_cli_name(std::string_view name) {
    for (BoundId b : all_bound_ids)
        if (name == bound_cli_name(b)) return b;
    return std::nullopt;
}

enum class BoundVerdict { holds, tight, violated };

inline const char* bound_verdict_name(BoundVerdict v) {
    switch (v) {
        case BoundVerdict::holds:    return "holds";
        case BoundVerdict::tight:    return "tight";
        case BoundVerdict::violated: return "violated";
    }
    return "?";
}

/// Verdict policy: a slack within 1e-9 of equality is reported as "tight"
/// rather than holds/violated, so float noise never decides a verdict;
/// beyond that band, strict claims use a 1e-12 epsilon.
inline constexpr double kTightTolerance = 1e-9;
inline constexpr double kStrictEpsilon = 1e-12;

inline BoundVerdict bound_verdict(double slack) {
    if (std::abs(slack) <= kTightTolerance) return BoundVerdict::tight;
    return slack > kStrictEpsilon ? BoundVerdict::holds : BoundVerdict::violated;
}

/// Result of one inequality evaluation. For strict claims "lhs > rhs",
/// slack = lhs - rhs. For sandwiches, lhs is the sandwiched value, rhs the
/// lower bound, rhs_upper the upper bound, and slack the smaller margin.
/// For the one upper-only claim, rhs holds the upper bound and
/// slack = rhs - lhs. The instance string is a full replayable encoding.
struct BoundReport {
    BoundId bound = BoundId::edge_del_so1;
    std::string instance;
    double lhs = 0.0;
    double rhs = 0.0;
    std::optional<double> rhs_upper;
    double slack = 0.0;
    bool strict = false;
    BoundVerdict verdict = BoundVerdict::holds;
    bool preconditions_met = true;
};

// ---------------------------------------------------------------------------
// Replayable instance encoding: g{n=7;e=0-1,0-3}, optionally ";del=u-v",
// and link{g{..};a=x-y|g{..};a=x-y}.
// ---------------------------------------------------------------------------

inline std::string encode_graph(const Graph& g) {
    std::string out = "g{n=" + std::to_string(g.vertex_count()) + ";e=";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) out += ',';
        out += std::to_string(u) + "-" + std::to_string(v);
        first = false;
    }
    out += '}';
    return out;
}

inline std::string encode_deletion(const Graph& g, int u, int v) {
    return encode_graph(g) + ";del=" + std::to_string(u) + "-" + std::to_string(v);
}

inline std::string encode_link(const LinkSpec& spec) {
    std::string out = "link{";
    for (std::size_t i = 0; i < spec.monomers.size(); ++i) {
        if (i) out += '|';
        out += encode_graph(spec.monomers[i]);
        out += ";a=" + std::to_string(spec.anchors[i].first) + "-" +
               std::to_string(spec.anchors[i].second);
    }
    out += '}';
    return out;
}

namespace detail {

struct Cursor {
    std::string_view text;
    std::size_t pos = 0;

    bool eat(std::string_view token) {
        if (text.substr(pos, token.size()) == token) {
            pos += token.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view token) {
        if (!eat(token))
            fail(errc::parse_error, "expected '" + std::string(token) + "' at offset " +
                                        std::to_string(pos) + " in instance encoding");
    }

    bool at(char c) const { return pos < text.size() && text[pos] == c; }

    int integer() {
        std::size_t start = pos;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
        if (pos == start) fail(errc::parse_error, "expected integer in instance encoding");
        return std::stoi(std::string(text.substr(start, pos - start)));
    }
};

inline Graph parse_graph_at(Cursor& c) {
    c.expect("g{n=");
    const int n = c.integer();
    c.expect(";e=");
    std::vector<Edge> edges;
    while (!c.at('}')) {
        const int u = c.integer();
        c.expect("-");
        const int v = c.integer();
        edges.emplace_back(u, v);
        if (!c.eat(",")) break;
    }
    c.expect("}");
    return Graph(n, std::move(edges));
}

} // namespace detail

inline Graph decode_graph(std::string_view text) {
    detail::Cursor c{text};
    Graph g = detail::parse_graph_at(c);
    if (c.pos != text.size()) fail(errc::parse_error, "trailing input after graph encoding");
    return g;
}

inline std::pair<Graph, Edge> decode_deletion(std::string_view text) {
    detail::Cursor c{text};
    Graph g = detail::parse_graph_at(c);
    c.expect(";del=");
    const int u = c.integer();
    c.expect("-");
    const int v = c.integer();
    if (c.pos != text.size()) fail(errc::parse_error, "trailing input after deletion encoding");
    return {std::move(g), Edge{u, v}};
}

inline LinkSpec decode_link(std::string_view text) {
    detail::Cursor c{text};
    c.expect("link{");
    LinkSpec spec;
    while (true) {
        spec.monomers.push_back(detail::parse_graph_at(c));
        c.expect(";a=");
        const int x = c.integer();
        c.expect("-");
        const int y = c.integer();
        spec.anchors.emplace_back(x, y);
        if (!c.eat("|")) break;
    }
    c.expect("}");
    if (c.pos != text.size()) fail(errc::parse_error, "trailing input after link encoding");
    return spec;
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

/// Index of a graph computed over its edge multiset only: isolated vertices
/// (which edge deletion can create) contribute nothing, and an empty edge
/// set gives 0. Deleted and partial graphs are evaluated through this.
inline double index_on_edges(const Graph& g, IndexId id) {
    if (g.edge_count() == 0) return 0.0;
    return index_from_profile(degree_pair_profile(g), id);
}

namespace detail {

inline BoundReport strict_report(BoundId id, std::string instance, double lhs, double rhs,
                                 bool preconditions_met) {
    BoundReport r;
    r.bound = id;
    r.instance = std::move(instance);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = lhs - rhs;
    r.strict = true;
    r.verdict = bound_verdict(r.slack);
    r.preconditions_met = preconditions_met;
    return r;
}

} // namespace detail

/// Claim: for non-regular G and e in E, with extremes taken in G,
///   so1(G) > so1(G - e) + (min^2 - max^2) / 2.
inline BoundReport check_edge_deletion_so1(const Graph& g, int u, int v) {
    if (is_regular(g))
        fail(errc::precondition, "the so1 edge-deletion claim requires a non-regular graph");
    if (!g.has_edge(u, v))
        fail(errc::non_edge, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    const DegreeExtremes ext = degree_extremes(g);
    const double lhs = compute(g, IndexId::so1);
    const double rhs = index_on_edges(delete_edge(g, u, v), IndexId::so1) +
                       0.5 * (static_cast<double>(ext.min_degree) * ext.min_degree -
                              static_cast<double>(ext.max_degree) * ext.max_degree);
    return detail::strict_report(BoundId::edge_del_so1, encode_deletion(g, u, v), lhs, rhs, true);
}

namespace detail {

// The stated hypothesis for the link claims: the full link and every
// partial link over the first i >= 2 monomers are non-regular.
inline bool link_preconditions_hold(const LinkSpec& spec, const Graph& whole) {
    if (is_regular(whole)) return false;
    for (std::size_t i = 2; i < spec.monomers.size(); ++i) {
        LinkSpec partial;
        partial.monomers.assign(spec.monomers.begin(), spec.monomers.begin() + static_cast<long>(i));
        partial.anchors.assign(spec.anchors.begin(), spec.anchors.begin() + static_cast<long>(i));
        if (is_regular(link(partial))) return false;
    }
    return true;
}

} // namespace detail

/// Claim: so1(link) > sum so1(G_i) + (1/2) sum_{i<k} min_i^2
///                  - (1/2) sum_{i>1} max_i^2, extremes per monomer.
inline BoundReport check_link_so1(const LinkSpec& spec) {
    validate(spec);
    const Graph whole = link(spec);
    const std::size_t k = spec.monomers.size();
    double rhs = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        const Graph& monomer = spec.monomers[i];
        const DegreeExtremes ext = degree_extremes(monomer);
        rhs += compute(monomer, IndexId::so1);
        if (i + 1 < k) rhs += 0.5 * static_cast<double>(ext.min_degree) * ext.min_degree;
        if (i > 0) rhs -= 0.5 * static_cast<double>(ext.max_degree) * ext.max_degree;
    }
    const double lhs = compute(whole, IndexId::so1);
    return detail::strict_report(BoundId::link_so1, encode_link(spec), lhs, rhs,
                                 detail::link_preconditions_hold(spec, whole));
}

/// Same claim with extremes taken in the assembled link:
///   so1(link) > ((k-1)/2)(min^2 - max^2) + sum so1(G_i).
inline BoundReport check_link_so1_uniform(const LinkSpec& spec) {
    validate(spec);
    const Graph whole = link(spec);
    const std::size_t k = spec.monomers.size();
    const DegreeExtremes ext = degree_extremes(whole);
    double rhs = (static_cast<double>(k) - 1.0) / 2.0 *
                 (static_cast<double>(ext.min_degree) * ext.min_degree -
                  static_cast<double>(ext.max_degree) * ext.max_degree);
    for (const Graph& monomer : spec.monomers) rhs += compute(monomer, IndexId::so1);
    const double lhs = compute(whole, IndexId::so1);
    return detail::strict_report(BoundId::link_so1_uniform, encode_link(spec), lhs, rhs,
                                 detail::link_preconditions_hold(spec, whole));
}

/// Two-sided (or upper-only for so6) bounds of so2..so6 in terms of so1,
/// the edge count and the degree extremes. Non-strict.
inline BoundReport check_sandwich(const Graph& g, BoundId id) {
    constexpr double pi = std::numbers::pi;
    constexpr double rt2 = std::numbers::sqrt2;
    const DegreeExtremes ext = degree_extremes(g);
    const double lo = ext.min_degree, hi = ext.max_degree;
    const double m = g.edge_count();
    const double so1 = compute(g, IndexId::so1);

    BoundReport r;
    r.bound = id;
    r.instance = encode_graph(g);
    r.strict = false;
    switch (id) {
        case BoundId::sandwich_so2:
            r.lhs = compute(g, IndexId::so2);
            r.rhs = so1 / (hi * hi);
            r.rhs_upper = so1 / (lo * lo);
            break;
        case BoundId::sandwich_so3:
            r.lhs = compute(g, IndexId::so3);
            r.rhs = rt2 * pi * ((so1 + m * lo * lo) / hi);
            r.rhs_upper = rt2 * pi * ((so1 + m * hi * hi) / lo);
            break;
        case BoundId::sandwich_so4:
            r.lhs = compute(g, IndexId::so4);
            r.rhs = pi * lo * lo / (2.0 * hi * hi) * (m * lo * lo + so1);
            r.rhs_upper = pi * hi * hi / (2.0 * lo * lo) * (m * hi * hi + so1);
            break;
        case BoundId::sandwich_so5:
            r.lhs = compute(g, IndexId::so5);
            r.rhs = 2.0 * rt2 * pi * so1 / (2.0 * hi + 1.0);
            r.rhs_upper = 2.0 * rt2 * pi * so1 / (2.0 * lo + 1.0);
            break;
        case BoundId::upper_so6:
            r.lhs = compute(g, IndexId::so6);
            r.rhs = 2.0 * pi * (hi * hi - lo * lo) * so1 / ((rt2 + 2.0 * lo * rt2) * (rt2 + 2.0 * lo * rt2));
            break;
        default:
            fail(errc::bad_parameter, "not a sandwich bound id");
    }
    if (id == BoundId::upper_so6)
        r.slack = r.rhs - r.lhs;
    else
        r.slack = std::min(r.lhs - r.rhs, *r.rhs_upper - r.lhs);
    r.verdict = bound_verdict(r.slack);
    return r;
}

/// Strict edge-deletion claims for so2..so5. The so2 and so5 statements
/// hypothesize a non-regular graph; violations of that hypothesis are
/// flagged, not rejected, and the check still evaluates.
inline BoundReport check_deletion(const Graph& g, int u, int v, BoundId id) {
    constexpr double pi = std::numbers::pi;
    constexpr double rt2 = std::numbers::sqrt2;
    if (!g.has_edge(u, v))
        fail(errc::non_edge, "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
    const DegreeExtremes ext = degree_extremes(g);
    const double lo = ext.min_degree, hi = ext.max_degree;
    const double m = g.edge_count();
    const Graph deleted = delete_edge(g, u, v);
    bool preconditions = true;
    double lhs = 0.0, rhs = 0.0;
    switch (id) {
        case BoundId::del_so2:
            preconditions = !is_regular(g);
            lhs = compute(g, IndexId::so2);
            rhs = (lo * lo) / (hi * hi) *
                  (index_on_edges(deleted, IndexId::so2) + 0.5 - (hi * hi) / (2.0 * lo * lo));
            break;
        case BoundId::del_so3:
            lhs = compute(g, IndexId::so3);
            rhs = (lo / hi) * index_on_edges(deleted, IndexId::so3) +
                  (2.0 * m + 1.0) * pi / (rt2 * hi) * (lo * lo - hi * hi);
            break;
        case BoundId::del_so4:
            lhs = compute(g, IndexId::so4);
            rhs = index_on_edges(deleted, IndexId::so4) +
                  (2.0 * m + 1.0) * pi * lo * lo * (lo * lo - hi * hi) / (2.0 * hi * hi);
            break;
        case BoundId::del_so5:
            preconditions = !is_regular(g);
            lhs = compute(g, IndexId::so5);
            rhs = index_on_edges(deleted, IndexId::so5) +
                  rt2 * pi / (2.0 * hi + 1.0) * (lo * lo - hi * hi);
            break;
        default:
            fail(errc::bad_parameter, "not an edge-deletion bound id");
    }
    return detail::strict_report(id, encode_deletion(g, u, v), lhs, rhs, preconditions);
}

/// Re-evaluates a bound from its embedded instance encoding.
inline BoundReport replay(BoundId id, const std::string& instance) {
    switch (id) {
        case BoundId::link_so1:         return check_link_so1(decode_link(instance));
        case BoundId::link_so1_uniform: return check_link_so1_uniform(decode_link(instance));
        case BoundId::sandwich_so2:
        case BoundId::sandwich_so3:
        case BoundId::sandwich_so4:
        case BoundId::sandwich_so5:
        case BoundId::upper_so6:        return check_sandwich(decode_graph(instance), id);
        case BoundId::edge_del_so1: {
            auto [g, e] = decode_deletion(instance);
            return check_edge_deletion_so1(g, e.first, e.second);
        }
        default: {
            auto [g, e] = decode_deletion(instance);
            return check_deletion(g, e.first, e.second, id);
        }
    }
}

inline BoundReport replay(const BoundReport& r) { return replay(r.bound, r.instance); }

// ---------------------------------------------------------------------------
// Fuzzing
// ---------------------------------------------------------------------------

struct FuzzOptions {
    std::uint64_t seed = 1;
    int count = 500;
    int min_vertices = 4;
    int max_vertices = 40;
};

struct BoundCounter {
    int checked = 0;
    int holds = 0;
    int tight = 0;
    int violated = 0;
    int skipped = 0;  // stated preconditions failed
};

struct FuzzSummary {
    FuzzOptions options;
    int instance_count = 0;
    std::map<BoundId, BoundCounter> counters;
    std::vector<BoundReport> findings;  // violated reports, in stream order
};

namespace detail {

inline Graph random_connected_graph(Rng& rng, int min_vertices, int max_vertices) {
    const int n = rng.uniform_int(std::max(2, min_vertices), std::max(2, max_vertices));
    const double p = 0.15 + 0.8 * rng.uniform01();
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.bernoulli(p)) edges.emplace_back(u, v);
        Graph g(n, std::move(edges));
        if (is_connected(g)) return g;
    }
    fail(errc::bad_parameter, "random graph sampler failed to produce a connected sample");
}

inline Graph random_chain_cactus(Rng& rng) {
    static constexpr std::array<Family, 6> chains = {
        Family::tri_chain,      Family::square_para_chain, Family::square_ortho_chain,
        Family::hex_ortho_chain, Family::hex_para_chain,   Family::hex_meta_chain,
    };
    const Family f = chains[static_cast<std::size_t>(rng.uniform_int(0, 5))];
    return generate({f, rng.uniform_int(2, 12), 0});
}

inline LinkSpec random_link_spec(Rng& rng) {
    LinkSpec spec;
    const int k = rng.uniform_int(2, 4);
    for (int i = 0; i < k; ++i) {
        Graph monomer;
        switch (rng.uniform_int(0, 2)) {
            case 0:  monomer = generate({Family::path, rng.uniform_int(2, 5), 0}); break;
            case 1:  monomer = generate({Family::cycle, rng.uniform_int(3, 6), 0}); break;
            default: monomer = generate({Family::star, rng.uniform_int(2, 4), 0}); break;
        }
        const int x = rng.uniform_int(0, monomer.vertex_count() - 1);
        int y = rng.uniform_int(0, monomer.vertex_count() - 2);
        if (y >= x) ++y;
        spec.monomers.push_back(std::move(monomer));
        spec.anchors.emplace_back(x, y);
    }
    return spec;
}

} // namespace detail

/// Deterministic bound fuzzing: instance i draws from a counter-derived
/// stream, so runs with the same options produce identical reports. Each
/// instance (a connected random graph, a chain cactus, or a link of small
/// monomers) is run through every applicable bound in enum order; checks
/// whose stated preconditions fail are counted as skipped. Only violated
/// reports are returned, alongside per-bound counters.
inline FuzzSummary fuzz_bounds(const FuzzOptions& options) {
    if (options.count < 1) fail(errc::bad_parameter, "fuzz count must be at least 1");
    if (options.max_vertices < options.min_vertices || options.min_vertices < 2)
        fail(errc::bad_parameter, "fuzz vertex range must satisfy 2 <= min <= max");

    FuzzSummary summary;
    summary.options = options;
    summary.instance_count = options.count;
    for (BoundId id : all_bound_ids) summary.counters[id] = BoundCounter{};

    for (int i = 0; i < options.count; ++i) {
        Rng rng(mix_seed(options.seed, static_cast<std::uint64_t>(i)));
        const int kind = i % 3;

        std::optional<LinkSpec> link_spec;
        Graph g;
        if (kind == 0) {
            g = detail::random_connected_graph(rng, options.min_vertices, options.max_vertices);
        } else if (kind == 1) {
            g = detail::random_chain_cactus(rng);
        } else {
            link_spec = detail::random_link_spec(rng);
            g = link(*link_spec);
        }
        const Edge e = g.edges()[static_cast<std::size_t>(
            rng.uniform_int(0, g.edge_count() - 1))];
        const bool regular = is_regular(g);
        const bool link_ok =
            link_spec && detail::link_preconditions_hold(*link_spec, g);

        const auto record = [&summary](const BoundReport& report) {
            BoundCounter& c = summary.counters[report.bound];
            ++c.checked;
            switch (report.verdict) {
                case BoundVerdict::holds:    ++c.holds; break;
                case BoundVerdict::tight:    ++c.tight; break;
                case BoundVerdict::violated: ++c.violated; break;
            }
            if (report.verdict == BoundVerdict::violated) summary.findings.push_back(report);
        };
        const auto skip = [&summary](BoundId id) { ++summary.counters[id].skipped; };

        for (BoundId id : all_bound_ids) {
            switch (id) {
                case BoundId::edge_del_so1:
                    if (regular) skip(id);
                    else record(check_edge_deletion_so1(g, e.first, e.second));
                    break;
                case BoundId::link_so1:
                    if (!link_spec) break;
                    if (!link_ok) skip(id);
                    else record(check_link_so1(*link_spec));
                    break;
                case BoundId::link_so1_uniform:
                    if (!link_spec) break;
                    if (!link_ok) skip(id);
                    else record(check_link_so1_uniform(*link_spec));
                    break;
                case BoundId::sandwich_so2:
                case BoundId::sandwich_so3:
                case BoundId::sandwich_so4:
                case BoundId::sandwich_so5:
                case BoundId::upper_so6:
                    record(check_sandwich(g, id));
                    break;
                case BoundId::del_so2:
                case BoundId::del_so5:
                    if (regular) skip(id);
                    else record(check_deletion(g, e.first, e.second, id));
                    break;
                case BoundId::del_so3:
                case BoundId::del_so4:
                    record(check_deletion(g, e.first, e.second, id));
                    break;
            }
        }
    }
    return summary;
}

} // namespace sombor

// Command-line surface: generate families, compute indices, verify the
// published closed-form tables, and check the published inequalities.
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sombor/sombor.hpp"

namespace {

using namespace sombor;

struct IntRange {
    int lo = 0;
    int hi = 0;
};

IntRange parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (hi < lo) fail(errc::bad_parameter, "range '" + text + "' is empty");
        return {lo, hi};
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::bad_parameter, "cannot parse range '" + text + "' (use N or A..B)");
    }
}

Family family_or_fail(const std::string& name) {
    const auto f = family_from_cli_name(name);
    if (!f)
        fail(errc::bad_parameter, "unknown family '" + name +
                                      "' (known: path cycle star kmn wheel ladder friendship "
                                      "book windmill grid tri-chain sq-para sq-ortho hex-ortho "
                                      "hex-para hex-meta)");
    return *f;
}

FamilySpec spec_from_flags(const std::string& family, int n, int m) {
    const Family f = family_or_fail(family);
    FamilySpec spec{f, n, m};
    if (family_uses_m(f) && m == 0)
        fail(errc::bad_parameter, std::string(family_cli_name(f)) + " needs --m");
    validate(spec);
    return spec;
}

// Monomer tokens for link specs: "<family>:<n>" or "<family>:<n>:<m>".
Graph parse_monomer(const std::string& token) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const auto colon = token.find(':', start);
        parts.push_back(token.substr(start, colon - start));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (parts.size() < 2 || parts.size() > 3)
        fail(errc::bad_parameter, "monomer token '" + token + "' (use family:n or family:n:m)");
    try {
        const int n = std::stoi(parts[1]);
        const int m = parts.size() == 3 ? std::stoi(parts[2]) : 0;
        FamilySpec spec{family_or_fail(parts[0]), n, m};
        validate(spec);
        return generate(spec);
    } catch (const error&) {
        throw;
    } catch (const std::exception&) {
        fail(errc::bad_parameter, "monomer token '" + token + "' has a non-integer parameter");
    }
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto at = text.find(sep, start);
        out.push_back(text.substr(start, at - start));
        if (at == std::string::npos) break;
        start = at + 1;
    }
    return out;
}

LinkSpec parse_link_spec(const std::string& monomers, const std::string& anchors) {
    LinkSpec spec;
    for (const std::string& token : split(monomers, ','))
        spec.monomers.push_back(parse_monomer(token));
    if (anchors.empty()) {
        for (const Graph& g : spec.monomers)
            spec.anchors.emplace_back(0, g.vertex_count() - 1);
    } else {
        for (const std::string& token : split(anchors, ',')) {
            const auto colon = token.find(':');
            if (colon == std::string::npos)
                fail(errc::bad_parameter, "anchor token '" + token + "' (use x:y)");
            try {
                spec.anchors.emplace_back(std::stoi(token.substr(0, colon)),
                                          std::stoi(token.substr(colon + 1)));
            } catch (const std::exception&) {
                fail(errc::bad_parameter, "anchor token '" + token + "' has a non-integer id");
            }
        }
    }
    validate(spec);
    return spec;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty() || out_path == "-")
        std::fputs(content.c_str(), stdout);
    else
        write_file(out_path, content);
}

// ---- generate ----

int cmd_generate(const std::string& family, int n, int m, const std::string& out,
                 const std::string& format) {
    const FamilySpec spec = spec_from_flags(family, n, m);
    const Graph g = generate(spec);
    const std::string counts =
        "vertices=" + std::to_string(g.vertex_count()) + " edges=" + std::to_string(g.edge_count());
    std::string doc;
    if (format == "edgelist")
        doc = serialize_edge_list(g);
    else if (format == "json")
        doc = graph_json(g) + "\n";
    else
        fail(errc::bad_parameter, "unknown format '" + format + "' (edgelist or json)");
    if (out.empty()) {
        std::printf("# %s\n", counts.c_str());
        std::fputs(doc.c_str(), stdout);
    } else if (out == "-") {
        // pure document on stdout, counts out of band
        std::fputs(doc.c_str(), stdout);
        std::fprintf(stderr, "%s\n", counts.c_str());
    } else {
        write_file(out, doc);
        std::printf("%s\n", counts.c_str());
    }
    return 0;
}

// ---- compute ----

int cmd_compute(const std::string& family, int n, int m, const std::string& in,
                const std::string& indices, bool profile) {
    Graph g;
    if (!in.empty()) {
        if (!family.empty())
            fail(errc::bad_parameter, "--in and --family are mutually exclusive");
        g = load_edge_list(in);
    } else if (!family.empty()) {
        g = generate(spec_from_flags(family, n, m));
    } else {
        fail(errc::bad_parameter, "compute needs --family or --in");
    }
    std::vector<IndexId> wanted;
    for (const std::string& token : split(indices, ',')) {
        if (token == "all") {
            wanted.assign(all_index_ids.begin(), all_index_ids.end());
            break;
        }
        const auto id = index_from_name(token);
        if (!id) fail(errc::bad_parameter, "unknown index '" + token + "' (so, so1..so6, all)");
        wanted.push_back(*id);
    }
    if (profile) {
        std::string line = "profile";
        for (const auto& [pair, count] : degree_pair_profile(g))
            line += " (" + std::to_string(pair.first) + "," + std::to_string(pair.second) +
                    "):" + std::to_string(count);
        std::printf("%s\n", line.c_str());
    }
    for (IndexId id : wanted)
        std::printf("%s %s\n", index_name(id), float17(compute(g, id)).c_str());
    return 0;
}

// ---- verify ----

std::vector<Family> families_from_selector(const std::string& selector) {
    static const std::vector<Family> cacti = {
        Family::tri_chain,       Family::square_para_chain, Family::square_ortho_chain,
        Family::hex_ortho_chain, Family::hex_para_chain,    Family::hex_meta_chain,
    };
    static const std::vector<Family> classic = {
        Family::path, Family::star,  Family::complete_bipartite, Family::wheel,
        Family::ladder, Family::friendship, Family::book, Family::dutch_windmill,
    };
    std::vector<Family> out;
    for (const std::string& token : split(selector, ',')) {
        if (token == "all") {
            out.assign(classic.begin(), classic.end());
            out.push_back(Family::grid);
            out.insert(out.end(), cacti.begin(), cacti.end());
        } else if (token == "cactus") {
            out.insert(out.end(), cacti.begin(), cacti.end());
        } else if (token == "classic") {
            out.insert(out.end(), classic.begin(), classic.end());
        } else {
            out.push_back(family_or_fail(token));
        }
    }
    return out;
}

int cmd_verify(const std::string& selector, const std::string& n_range,
               const std::string& m_range, double tol, const std::string& out,
               const std::string& format, bool fail_on_mismatch) {
    const IntRange nr = parse_range(n_range);
    const IntRange mr = parse_range(m_range);
    const std::vector<Family> families = families_from_selector(selector);
    const std::vector<VerifyCell> cells =
        sweep_verify(families, {nr.lo, nr.hi, mr.lo, mr.hi}, {tol, tol});

    std::string doc;
    if (format == "csv")
        doc = verify_cells_csv(cells);
    else if (format == "json")
        doc = verify_cells_json(cells);
    else
        fail(errc::bad_parameter, "unknown format '" + format + "' (csv or json)");
    emit(out, doc);

    std::FILE* log = (out.empty() || out == "-") ? stderr : stdout;
    int mismatches = 0;
    bool confirmed_row_mismatched = false;
    for (const RowSummary& row : summarize_rows(cells)) {
        std::fprintf(log, "%s %s: %s (%d match, %d mismatch)\n", family_cli_name(row.family),
                     index_name(row.index), row_outcome_name(row.outcome), row.match_count,
                     row.mismatch_count);
        mismatches += row.mismatch_count;
        if (row.mismatch_count > 0 &&
            row_expectation(row.family, row.index) == RowExpectation::confirmed)
            confirmed_row_mismatched = true;
    }
    std::fprintf(log, "mismatches: %d\n", mismatches);
    return fail_on_mismatch && confirmed_row_mismatched ? 1 : 0;
}

// ---- bounds ----

int cmd_bounds(const std::string& check, const std::string& family, int n, int m,
               const std::string& in, const std::vector<int>& edge, const std::string& link_str,
               const std::string& anchors, std::uint64_t seed, int count, int max_vertices,
               const std::string& out) {
    if (check == "fuzz") {
        const FuzzSummary summary = fuzz_bounds({seed, count, 4, max_vertices});
        emit(out, fuzz_report_text(summary));
        return summary.findings.empty() ? 0 : 1;
    }
    const auto id = bound_from_cli_name(check);
    if (!id) fail(errc::bad_parameter, "unknown bound '" + check + "'");

    BoundReport report;
    if (*id == BoundId::link_so1 || *id == BoundId::link_so1_uniform) {
        if (link_str.empty()) fail(errc::bad_parameter, "link checks need --link");
        const LinkSpec spec = parse_link_spec(link_str, anchors);
        report = *id == BoundId::link_so1 ? check_link_so1(spec) : check_link_so1_uniform(spec);
    } else {
        Graph g;
        if (!in.empty())
            g = load_edge_list(in);
        else
            g = generate(spec_from_flags(family, n, m));
        const bool needs_edge = *id == BoundId::edge_del_so1 || *id == BoundId::del_so2 ||
                                *id == BoundId::del_so3 || *id == BoundId::del_so4 ||
                                *id == BoundId::del_so5;
        if (needs_edge) {
            if (edge.size() != 2) fail(errc::bad_parameter, "deletion checks need --edge u v");
            report = *id == BoundId::edge_del_so1
                         ? check_edge_deletion_so1(g, edge[0], edge[1])
                         : check_deletion(g, edge[0], edge[1], *id);
        } else {
            report = check_sandwich(g, *id);
        }
    }
    const std::string line = bound_report_json(report) + "\n";
    std::fputs(line.c_str(), stdout);
    if (!out.empty() && out != "-") write_file(out, line);
    return report.verdict == BoundVerdict::violated && report.preconditions_met ? 1 : 0;
}

// ---- table ----

int cmd_table(const std::string& which, const std::string& n_range, const std::string& m_range,
              double tol, const std::string& out, const std::string& format) {
    const auto table = published_table_from_name(which);
    if (!table)
        fail(errc::bad_parameter,
             "unknown table '" + which + "' (t1, t2, t3, thm21, grid, cactus-so1)");
    const IntRange nr = parse_range(n_range);
    IntRange mr = parse_range(m_range.empty() ? n_range : m_range);
    const auto rows = build_table(*table, nr.lo, nr.hi, mr.lo, mr.hi, {tol, tol});
    std::string doc;
    if (format == "csv")
        doc = table_csv(*table, rows);
    else if (format == "json")
        doc = table_json(rows);
    else
        fail(errc::bad_parameter, "unknown format '" + format + "' (csv or json)");
    emit(out, doc);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sombor-like degree-based graph invariants: compute, generate, verify, bound-check"};
    app.require_subcommand(1);

    // one set of option variables per subcommand: defaults are applied at
    // option definition time, so sharing them would cross-contaminate
    std::string family, in_path, out_path;
    int n = 0, m = 0;

    std::string gen_format = "edgelist";
    auto* gen = app.add_subcommand("generate", "generate a named family as an edge list");
    gen->add_option("--family", family, "family name")->required();
    gen->add_option("--n", n, "primary parameter");
    gen->add_option("--m", m, "secondary parameter (kmn, windmill, grid)");
    gen->add_option("--out", out_path, "output path ('-' for stdout)");
    gen->add_option("--format", gen_format, "edgelist or json");

    std::string indices = "all";
    bool profile = false;
    auto* comp = app.add_subcommand("compute", "compute indices of a family or edge-list file");
    comp->add_option("--family", family, "family name");
    comp->add_option("--n", n, "primary parameter");
    comp->add_option("--m", m, "secondary parameter");
    comp->add_option("--in", in_path, "edge-list file");
    comp->add_option("--indices", indices, "comma list of so, so1..so6, or all");
    comp->add_flag("--profile", profile, "also print the degree-pair profile");

    std::string selector = "all", ver_n = "2..30", ver_m = "2..30", ver_format = "csv";
    double ver_tol = 1e-9;
    bool fail_on_mismatch = false;
    auto* ver = app.add_subcommand("verify", "verify published closed forms against the engine");
    ver->add_option("--families", selector, "all, classic, cactus, or comma list");
    ver->add_option("--n", ver_n, "n range (N or A..B)");
    ver->add_option("--m", ver_m, "m range (N or A..B)");
    ver->add_option("--tol", ver_tol, "relative tolerance");
    ver->add_option("--out", out_path, "report path ('-' for stdout)");
    ver->add_option("--format", ver_format, "csv or json");
    ver->add_flag("--fail-on-mismatch", fail_on_mismatch,
                  "exit nonzero if an engine-confirmed row mismatches");

    std::string check, link_str, anchors;
    std::vector<int> edge;
    std::uint64_t seed = 1;
    int count = 500, max_vertices = 40;
    auto* bnd = app.add_subcommand("bounds", "check one published inequality or fuzz them all");
    bnd->add_option("--check", check, "bound name or 'fuzz'")->required();
    bnd->add_option("--family", family, "instance family");
    bnd->add_option("--n", n, "primary parameter");
    bnd->add_option("--m", m, "secondary parameter");
    bnd->add_option("--in", in_path, "instance edge-list file");
    bnd->add_option("--edge", edge, "edge endpoints for deletion checks")->expected(2);
    bnd->add_option("--link", link_str, "monomer list, e.g. cycle:3,cycle:3");
    bnd->add_option("--anchors", anchors, "anchor pairs x:y per monomer");
    bnd->add_option("--seed", seed, "fuzz seed");
    bnd->add_option("--count", count, "fuzz instance count");
    bnd->add_option("--max-vertices", max_vertices, "fuzz size cap");
    bnd->add_option("--out", out_path, "report path ('-' for stdout)");

    std::string which, tab_n, tab_m, tab_format = "csv";
    double tab_tol = 1e-9;
    auto* tab = app.add_subcommand("table", "reproduce a published table with verdicts");
    tab->add_option("--which", which, "t1, t2, t3, thm21, grid, cactus-so1")->required();
    tab->add_option("--n", tab_n, "n range (N or A..B)")->required();
    tab->add_option("--m", tab_m, "m range (defaults to the n range)");
    tab->add_option("--tol", tab_tol, "relative tolerance");
    tab->add_option("--out", out_path, "output path ('-' for stdout)");
    tab->add_option("--format", tab_format, "csv or json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed()) return cmd_generate(family, n, m, out_path, gen_format);
        if (comp->parsed()) return cmd_compute(family, n, m, in_path, indices, profile);
        if (ver->parsed())
            return cmd_verify(selector, ver_n, ver_m, ver_tol, out_path, ver_format,
                              fail_on_mismatch);
        if (bnd->parsed())
            return cmd_bounds(check, family, n, m, in_path, edge, link_str, anchors, seed, count,
                              max_vertices, out_path);
        if (tab->parsed()) return cmd_table(which, tab_n, tab_m, tab_tol, out_path, tab_format);
    } catch (const sombor::error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: internal: %s\n", e.what());
        return 2;
    }
    return 0;
}

#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/bounds.hpp"
#include "sombor/closed_forms.hpp"
#include "sombor/families.hpp"
#include "sombor/graph.hpp"
#include "sombor/indices.hpp"

namespace sombor {

/// 17 significant digits: enough to round-trip any double exactly.
inline std::string float17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

// ---------------------------------------------------------------------------
// Edge-list documents: '#' comment lines, an optional "n <count>" line, then
// one "u v" edge per line. Whitespace-tolerant; when the "n" line is absent
// the vertex count is max id + 1.
// ---------------------------------------------------------------------------

inline std::string serialize_edge_list(const Graph& g) {
    std::string out = "n " + std::to_string(g.vertex_count()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

inline Graph parse_edge_list(std::istream& in) {
    std::optional<int> vertex_count;
    std::vector<Edge> edges;
    std::string line;
    int line_no = 0;
    bool saw_content = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream row(line);
        std::string first;
        if (!(row >> first) || first[0] == '#') continue;
        if (first == "n") {
            if (saw_content || vertex_count)
                fail(errc::parse_error, "line " + std::to_string(line_no) +
                                            ": 'n' line must come first and appear once");
            int n;
            if (!(row >> n) || n < 0)
                fail(errc::parse_error, "line " + std::to_string(line_no) + ": bad vertex count");
            std::string extra;
            if (row >> extra)
                fail(errc::parse_error, "line " + std::to_string(line_no) + ": trailing tokens");
            vertex_count = n;
            continue;
        }
        saw_content = true;
        int u, v;
        std::string extra;
        try {
            u = std::stoi(first);
        } catch (const std::exception&) {
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected integer id");
        }
        if (!(row >> v) || (row >> extra))
            fail(errc::parse_error, "line " + std::to_string(line_no) + ": expected 'u v'");
        edges.emplace_back(u, v);
    }
    if (!vertex_count) {
        int max_id = -1;
        for (auto [u, v] : edges) max_id = std::max({max_id, u, v});
        vertex_count = max_id + 1;
    }
    return Graph(*vertex_count, std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline Graph load_edge_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail(errc::io_error, "cannot open " + path.string());
    return parse_edge_list(in);
}

inline void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io_error, "cannot write " + path.string());
    out << content;
}

// ---------------------------------------------------------------------------
// JSON helpers (reports are flat, so a tiny emitter keeps the float
// formatting under our control).
// ---------------------------------------------------------------------------

inline std::string json_escape(std::string_view s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"':  out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:   out += c;
        }
    }
    return out;
}

inline std::string graph_json(const Graph& g) {
    std::string out = "{\"vertex_count\": " + std::to_string(g.vertex_count()) + ", \"edges\": [";
    bool first = true;
    for (auto [u, v] : g.edges()) {
        if (!first) out += ", ";
        out += "[" + std::to_string(u) + ", " + std::to_string(v) + "]";
        first = false;
    }
    out += "]}";
    return out;
}

// ---------------------------------------------------------------------------
// Verification reports
// ---------------------------------------------------------------------------

inline std::string verify_cells_csv_header() {
    return "family,index,n,m,engine,formula,rel_diff,verdict\n";
}

inline std::string verify_cell_csv_row(const VerifyCell& cell) {
    std::string m = family_uses_m(cell.family) ? std::to_string(cell.params.m) : "";
    return std::string(family_cli_name(cell.family)) + "," + index_name(cell.index) + "," +
           std::to_string(cell.params.n) + "," + m + "," + float17(cell.engine_value) + "," +
           float17(cell.formula_value) + "," + float17(cell.rel_diff) + "," +
           cell_verdict_name(cell.verdict) + "\n";
}

inline std::string verify_cells_csv(const std::vector<VerifyCell>& cells) {
    std::string out = verify_cells_csv_header();
    for (const VerifyCell& cell : cells) out += verify_cell_csv_row(cell);
    return out;
}

inline std::string verify_cell_json(const VerifyCell& cell) {
    std::string out = "{\"family\": \"" + std::string(family_cli_name(cell.family)) +
                      "\", \"index\": \"" + index_name(cell.index) +
                      "\", \"n\": " + std::to_string(cell.params.n);
    if (family_uses_m(cell.family)) out += ", \"m\": " + std::to_string(cell.params.m);
    out += ", \"engine\": " + float17(cell.engine_value) +
           ", \"formula\": " + float17(cell.formula_value) +
           ", \"rel_diff\": " + float17(cell.rel_diff) + ", \"verdict\": \"" +
           cell_verdict_name(cell.verdict) + "\", \"source\": \"" + json_escape(cell.source) +
           "\"}";
    return out;
}

inline std::string verify_cells_json(const std::vector<VerifyCell>& cells) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out += "  " + verify_cell_json(cells[i]);
        if (i + 1 < cells.size()) out += ",";
        out += "\n";
    }
    out += "]\n";
    return out;
}

// ---------------------------------------------------------------------------
// Bound reports: JSON lines for full reports, CSV for summaries.
// ---------------------------------------------------------------------------

inline std::string bound_report_json(const BoundReport& r) {
    std::string out = "{\"bound\": \"" + std::string(bound_cli_name(r.bound)) +
                      "\", \"instance\": \"" + json_escape(r.instance) +
                      "\", \"lhs\": " + float17(r.lhs) + ", \"rhs\": " + float17(r.rhs);
    if (r.rhs_upper) out += ", \"rhs_upper\": " + float17(*r.rhs_upper);
    out += ", \"slack\": " + float17(r.slack) +
           std::string(", \"strict\": ") + (r.strict ? "true" : "false") + ", \"verdict\": \"" +
           bound_verdict_name(r.verdict) + "\", \"preconditions_met\": " +
           (r.preconditions_met ? "true" : "false") + "}";
    return out;
}

inline std::string bound_reports_jsonl(const std::vector<BoundReport>& reports) {
    std::string out;
    for (const BoundReport& r : reports) out += bound_report_json(r) + "\n";
    return out;
}

inline std::string bound_reports_csv_header() {
    return "bound,instance,lhs,rhs,slack,verdict,preconditions_met\n";
}

inline std::string bound_report_csv_row(const BoundReport& r) {
    return std::string(bound_cli_name(r.bound)) + ",\"" + r.instance + "\"," + float17(r.lhs) +
           "," + float17(r.rhs) + "," + float17(r.slack) + "," + bound_verdict_name(r.verdict) +
           "," + (r.preconditions_met ? "true" : "false") + "\n";
}

inline std::string bound_reports_csv(const std::vector<BoundReport>& reports) {
    std::string out = bound_reports_csv_header();
    for (const BoundReport& r : reports) out += bound_report_csv_row(r);
    return out;
}

inline std::string fuzz_summary_csv(const FuzzSummary& summary) {
    std::string out = "bound,checked,holds,tight,violated,skipped\n";
    for (BoundId id : all_bound_ids) {
        const BoundCounter& c = summary.counters.at(id);
        out += std::string(bound_cli_name(id)) + "," + std::to_string(c.checked) + "," +
               std::to_string(c.holds) + "," + std::to_string(c.tight) + "," +
               std::to_string(c.violated) + "," + std::to_string(c.skipped) + "\n";
    }
    return out;
}

/// Full fuzz report: one header line with the options, the per-bound
/// summary, then every violated report as a JSON line.
inline std::string fuzz_report_text(const FuzzSummary& summary) {
    std::string out = "# fuzz seed=" + std::to_string(summary.options.seed) +
                      " count=" + std::to_string(summary.options.count) +
                      " vertices=" + std::to_string(summary.options.min_vertices) + ".." +
                      std::to_string(summary.options.max_vertices) + "\n";
    out += fuzz_summary_csv(summary);
    out += "# findings (violated reports), one JSON object per line\n";
    out += bound_reports_jsonl(summary.findings);
    return out;
}

// ---------------------------------------------------------------------------
// Published-table reproduction
// ---------------------------------------------------------------------------

enum class PublishedTable { t1, t2, t3, thm21, grid, cactus_so1 };

inline std::optional<PublishedTable> published_table_from_name(std::string_view name) {
    if (name == "t1") return PublishedTable::t1;
    if (name == "t2") return PublishedTable::t2;
    if (name == "t3") return PublishedTable::t3;
    if (name == "thm21") return PublishedTable::thm21;
    if (name == "grid") return PublishedTable::grid;
    if (name == "cactus-so1") return PublishedTable::cactus_so1;
    return std::nullopt;
}

inline std::vector<Family> published_table_families(PublishedTable t) {
    static const std::vector<Family> classic = {
        Family::path, Family::star,  Family::complete_bipartite, Family::wheel,
        Family::ladder, Family::friendship, Family::book, Family::dutch_windmill,
    };
    static const std::vector<Family> cacti = {
        Family::tri_chain,       Family::square_para_chain, Family::square_ortho_chain,
        Family::hex_ortho_chain, Family::hex_para_chain,    Family::hex_meta_chain,
    };
    switch (t) {
        case PublishedTable::t1:
        case PublishedTable::t2:
        case PublishedTable::thm21: return classic;
        case PublishedTable::t3:
        case PublishedTable::cactus_so1: return cacti;
        case PublishedTable::grid: return {Family::grid};
    }
    return {};
}

inline std::vector<IndexId> published_table_indices(PublishedTable t) {
    switch (t) {
        case PublishedTable::t1:    return {IndexId::so2, IndexId::so3, IndexId::so4};
        case PublishedTable::t2:    return {IndexId::so5, IndexId::so6};
        case PublishedTable::t3:    return {IndexId::so2, IndexId::so3, IndexId::so4, IndexId::so5, IndexId::so6};
        case PublishedTable::thm21:
        case PublishedTable::cactus_so1: return {IndexId::so1};
        case PublishedTable::grid:  return {IndexId::so1, IndexId::so2, IndexId::so3,
                                        IndexId::so4, IndexId::so5, IndexId::so6};
    }
    return {};
}

struct TableRow {
    Family family;
    FamilySpec params;
    std::vector<VerifyCell> cells;  // one per table index, in table order
};

/// Engine-computed analogue of a published table over parameter ranges,
/// one row per (family, params), skipping parameter points outside a
/// cell's stated validity.
inline std::vector<TableRow> build_table(PublishedTable table, int n_lo, int n_hi, int m_lo, int m_hi,
                                         VerifyTolerance tol = {}) {
    std::vector<TableRow> rows;
    for (Family family : published_table_families(table)) {
        for (int n = n_lo; n <= n_hi; ++n) {
            const int row_m_lo = family_uses_m(family) ? m_lo : 0;
            const int row_m_hi = family_uses_m(family) ? m_hi : 0;
            for (int m = row_m_lo; m <= row_m_hi; ++m) {
                FamilySpec params{family, n, m};
                TableRow row{family, params, {}};
                for (IndexId idx : published_table_indices(table)) {
                    const FormulaCell* cell = find_cell(family, idx);
                    if (cell && cell->in_range(params))
                        row.cells.push_back(verify_cell(*cell, params, tol));
                }
                if (!row.cells.empty()) rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

inline std::string table_csv(PublishedTable table, const std::vector<TableRow>& rows) {
    std::string out = "family,n,m";
    for (IndexId idx : published_table_indices(table)) {
        const std::string name = index_name(idx);
        out += ",engine_" + name + ",formula_" + name + ",verdict_" + name;
    }
    out += "\n";
    for (const TableRow& row : rows) {
        out += std::string(family_cli_name(row.family)) + "," + std::to_string(row.params.n) +
               "," + (family_uses_m(row.family) ? std::to_string(row.params.m) : "");
        std::size_t cell_at = 0;
        for (IndexId idx : published_table_indices(table)) {
            if (cell_at < row.cells.size() && row.cells[cell_at].index == idx) {
                const VerifyCell& cell = row.cells[cell_at++];
                out += "," + float17(cell.engine_value) + "," + float17(cell.formula_value) +
                       "," + cell_verdict_name(cell.verdict);
            } else {
                out += ",,,";
            }
        }
        out += "\n";
    }
    return out;
}

inline std::string table_json(const std::vector<TableRow>& rows) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const TableRow& row = rows[i];
        out += "  {\"family\": \"" + std::string(family_cli_name(row.family)) +
               "\", \"n\": " + std::to_string(row.params.n);
        if (family_uses_m(row.family)) out += ", \"m\": " + std::to_string(row.params.m);
        out += ", \"cells\": [";
        for (std::size_t j = 0; j < row.cells.size(); ++j) {
            if (j) out += ", ";
            out += verify_cell_json(row.cells[j]);
        }
        out += "]}";
        if (i + 1 < rows.size()) out += ",";
        out += "\n";
    }
    out += "]\n";
    return out;
}

} // namespace sombor

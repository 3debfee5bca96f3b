#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "sombor/families.hpp"
#include "sombor/indices.hpp"

namespace sombor {

/// One published closed-form value: a family, an index, the parameter range
/// the statement claims, and the printed expression transcribed verbatim
/// (overall constants included, even where they look suspect). The engine
/// is ground truth; these are hypotheses to verify.
struct FormulaCell {
    Family family;
    IndexId index;
    std::string source;    // which published statement the cell transcribes
    std::string validity;  // human-readable parameter range
    std::function<bool(const FamilySpec&)> in_range;
    std::function<double(const FamilySpec&)> printed;
};

enum class CellVerdict { match, mismatch };

inline const char* cell_verdict_name(CellVerdict v) {
    return v == CellVerdict::match ? "match" : "mismatch";
}

struct VerifyCell {
    Family family;
    IndexId index;
    FamilySpec params;
    double engine_value = 0.0;
    double formula_value = 0.0;
    double rel_diff = 0.0;
    CellVerdict verdict = CellVerdict::match;
    std::string source;
};

struct VerifyTolerance {
    double rel = 1e-9;
    double abs_at_zero = 1e-9;
};

namespace detail {

constexpr double kPi = std::numbers::pi;
constexpr double kRt2 = std::numbers::sqrt2;

inline double sq(double x) { return x * x; }

// The published wheel rows index by total vertex count; the generator's
// parameter is the rim length k, so table rows evaluate at k + 1.
inline double wheel_table_n(const FamilySpec& s) { return static_cast<double>(s.n) + 1.0; }

} // namespace detail

/// Every published cell, in report order: the eight classic families
/// (so1 statement, then tables 1 and 2), the six grid cells, and the six
/// cactus chains (so1 statement, then table 3). 90 cells total.
inline const std::vector<FormulaCell>& catalogue() {
    using detail::kPi;
    using detail::kRt2;
    using detail::sq;
    static const std::vector<FormulaCell> cells = [] {
        std::vector<FormulaCell> out;
        const auto add = [&out](Family f, IndexId idx, std::string source, std::string validity,
                                std::function<bool(const FamilySpec&)> in_range,
                                std::function<double(const FamilySpec&)> printed) {
            out.push_back({f, idx, std::move(source), std::move(validity), std::move(in_range),
                           std::move(printed)});
        };
        const auto n_at_least = [](int lo) {
            return [lo](const FamilySpec& s) { return s.n >= lo; };
        };

        // ---- so1 statement, parts (i)..(vii) ----
        add(Family::path, IndexId::so1, "thm21(i)", "n >= 3", n_at_least(3),
            [](const FamilySpec&) { return 3.0; });
        add(Family::star, IndexId::so1, "thm21(ii)", "n >= 1", n_at_least(1),
            [](const FamilySpec& s) { double n = s.n; return n * (n - 1.0) * (n + 1.0) / 2.0; });
        add(Family::complete_bipartite, IndexId::so1, "thm21(ii)", "m >= n >= 1",
            [](const FamilySpec& s) { return s.m >= s.n && s.n >= 1; },
            [](const FamilySpec& s) {
                double m = s.m, n = s.n;
                return m * n * (m - n) * (m + n) / 2.0;
            });
        add(Family::wheel, IndexId::so1, "thm21(iii)", "rim n >= 3", n_at_least(3),
            [](const FamilySpec& s) { double n = s.n; return n * (n - 3.0) * (n + 3.0) / 2.0; });
        add(Family::ladder, IndexId::so1, "thm21(iv)", "n >= 3", n_at_least(3),
            [](const FamilySpec&) { return 10.0; });
        add(Family::friendship, IndexId::so1, "thm21(v)", "n >= 1", n_at_least(1),
            [](const FamilySpec& s) { double n = s.n; return 4.0 * n * (n - 1.0) * (n + 1.0); });
        add(Family::book, IndexId::so1, "thm21(vi)", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) { double n = s.n; return n * (n + 3.0) * (n - 1.0); });
        add(Family::dutch_windmill, IndexId::so1, "thm21(vii)", "n >= 3, m >= 2",
            [](const FamilySpec& s) { return s.n >= 3 && s.m >= 2; },
            [](const FamilySpec& s) { double m = s.m; return 4.0 * m * (m - 1.0) * (m + 1.0); });

        // ---- table 1: so2..so4 for the same families ----
        const auto kmn_range = [](const FamilySpec& s) { return s.m >= s.n && s.n >= 3; };
        const auto windmill_range = [](const FamilySpec& s) { return s.n >= 3 && s.m >= 2; };

        add(Family::path, IndexId::so2, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec&) { return 6.0 / 5.0; });
        add(Family::path, IndexId::so3, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                return 10.0 * kRt2 * kPi / 3.0 + (s.n - 3.0) * kRt2 * (2.0 * kPi);
            });
        add(Family::path, IndexId::so4, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) { return 25.0 * kPi / 9.0 + (s.n - 3.0) * (2.0 * kPi); });

        add(Family::star, IndexId::so2, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) { double n = s.n; return n * (n * n - 1.0) / (n * n + 1.0); });
        add(Family::star, IndexId::so3, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return kRt2 * n * kPi * (n * n + 1.0) / (n + 1.0);
            });
        add(Family::star, IndexId::so4, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return n * kPi / 2.0 * sq((n * n + 1.0) / (n + 1.0));
            });

        add(Family::complete_bipartite, IndexId::so2, "table1", "m >= n >= 3", kmn_range,
            [](const FamilySpec& s) {
                double m = s.m, n = s.n;
                return m * n * (m * m - n * n) / (m * m + n * n);
            });
        add(Family::complete_bipartite, IndexId::so3, "table1", "m >= n >= 3", kmn_range,
            [](const FamilySpec& s) {
                double m = s.m, n = s.n;
                return kRt2 * n * m * kPi * (m * m + n * n) / (m + n);
            });
        add(Family::complete_bipartite, IndexId::so4, "table1", "m >= n >= 3", kmn_range,
            [](const FamilySpec& s) {
                double m = s.m, n = s.n;
                return n * m * kPi / 2.0 * sq((n * n + m * m) / (n + m));
            });

        add(Family::wheel, IndexId::so2, "table1", "rim n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = detail::wheel_table_n(s);
                return (n - 1.0) * (n * n - 2.0 * n - 8.0) / (n * n - 2.0 * n + 10.0);
            });
        add(Family::wheel, IndexId::so3, "table1", "rim n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = detail::wheel_table_n(s);
                return kRt2 * kPi *
                       ((n - 1.0) * (n * n - 2.0 * n + 10.0) / (n + 2.0) + 3.0 * n - 3.0);
            });
        add(Family::wheel, IndexId::so4, "table1", "rim n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = detail::wheel_table_n(s);
                return kPi / 2.0 *
                       ((n - 1.0) * sq((n * n - 2.0 * n + 10.0) / (n + 2.0)) + 9.0 * n - 9.0);
            });

        add(Family::ladder, IndexId::so2, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec&) { return 20.0 / 13.0; });
        add(Family::ladder, IndexId::so3, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) { return kRt2 * kPi / 5.0 * (45.0 * s.n - 48.0); });
        add(Family::ladder, IndexId::so4, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) { return kPi / 50.0 * (675.0 * s.n - 924.0); });

        add(Family::friendship, IndexId::so2, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return (2.0 * n * n * n - 2.0 * n) / (n * n + 1.0);
            });
        add(Family::friendship, IndexId::so3, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return kRt2 * kPi * ((4.0 * n * n * n + 2.0 * n * n + 6.0 * n) / (n + 1.0));
            });
        add(Family::friendship, IndexId::so4, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return 2.0 * n * kPi *
                       ((2.0 * n * n * n * n + 5.0 * n * n + 2.0 * n + 3.0) /
                        (n * n + 2.0 * n + 1.0));
            });

        add(Family::book, IndexId::so2, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return (2.0 * n * n * n + 4.0 * n * n - 6.0 * n) / (n * n + 2.0 * n + 5.0);
            });
        add(Family::book, IndexId::so3, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return kRt2 * kPi *
                       (3.0 * n + 1.0 + 2.0 * n * ((n * n + 2.0 * n + 5.0) / (n + 3.0)));
            });
        add(Family::book, IndexId::so4, "table1", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return kPi / 2.0 *
                       (4.0 * n + sq(n + 1.0) + 2.0 * n * sq((n * n + 2.0 * n + 5.0) / (n + 3.0)));
            });

        add(Family::dutch_windmill, IndexId::so2, "table1", "n >= 3, m >= 2", windmill_range,
            [](const FamilySpec& s) {
                double m = s.m;
                return 2.0 * m * (m * m - 1.0) / (m * m + 1.0);
            });
        add(Family::dutch_windmill, IndexId::so3, "table1", "n >= 3, m >= 2", windmill_range,
            [](const FamilySpec& s) {
                double m = s.m, n = s.n;
                return kRt2 * kPi * (2.0 * m * (n - 2.0) + 4.0 * m * ((m * m + 1.0) / (m + 1.0)));
            });
        add(Family::dutch_windmill, IndexId::so4, "table1", "n >= 3, m >= 2", windmill_range,
            [](const FamilySpec& s) {
                double m = s.m, n = s.n;
                return kPi / 2.0 *
                       (4.0 * m * (n - 2.0) + 8.0 * m * sq((m * m + 1.0) / (m + 1.0)));
            });

        // ---- table 2: so5, so6 ----
        add(Family::path, IndexId::so5, "table2", "n >= 3", n_at_least(3),
            [](const FamilySpec&) { return 12.0 * kPi / (kRt2 + 2.0 * std::sqrt(5.0)); });
        add(Family::path, IndexId::so6, "table2", "n >= 3", n_at_least(3),
            [](const FamilySpec&) { return 18.0 * kPi / sq(kRt2 + 2.0 * std::sqrt(5.0)); });

        add(Family::star, IndexId::so5, "table2", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return 2.0 * n * kPi * (n * n - 1.0) / (kRt2 + 2.0 * std::sqrt(n * n + 1.0));
            });
        add(Family::star, IndexId::so6, "table2", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return n * kPi * sq((n * n - 1.0) / (kRt2 + 2.0 * std::sqrt(n * n + 1.0)));
            });

        add(Family::complete_bipartite, IndexId::so5, "table2", "m >= n >= 3", kmn_range,
            [](const FamilySpec& s) {
                double m = s.m, n = s.n;
                return 2.0 * n * m * kPi * (m * m - n * n) /
                       (kRt2 + 2.0 * std::sqrt(n * n + m * m));
            });
        add(Family::complete_bipartite, IndexId::so6, "table2", "m >= n >= 3", kmn_range,
            [](const FamilySpec& s) {
                double m = s.m, n = s.n;
                return n * m * kPi * sq((m * m - n * n) / (kRt2 + 2.0 * std::sqrt(n * n + m * m)));
            });

        add(Family::wheel, IndexId::so5, "table2", "rim n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = detail::wheel_table_n(s);
                return 2.0 * (n - 1.0) * kPi *
                       ((n * n - 2.0 * n - 8.0) /
                        (kRt2 + 2.0 * std::sqrt(n * n - 2.0 * n + 10.0)));
            });
        add(Family::wheel, IndexId::so6, "table2", "rim n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = detail::wheel_table_n(s);
                return kPi * (n - 1.0) *
                       sq((n * n - 2.0 * n - 8.0) /
                          (kRt2 + 2.0 * std::sqrt(n * n - 2.0 * n + 10.0)));
            });

        add(Family::ladder, IndexId::so5, "table2", "n >= 3", n_at_least(3),
            [](const FamilySpec&) { return 40.0 * kPi / (kRt2 + 2.0 * std::sqrt(13.0)); });
        add(Family::ladder, IndexId::so6, "table2", "n >= 3", n_at_least(3),
            [](const FamilySpec&) { return 100.0 * kPi / sq(kRt2 + 2.0 * std::sqrt(13.0)); });

        add(Family::friendship, IndexId::so5, "table2", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return 4.0 * n * kPi *
                       ((4.0 * n * n - 4.0) / (kRt2 + 2.0 * std::sqrt(4.0 * n * n + 4.0)));
            });
        add(Family::friendship, IndexId::so6, "table2", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return 2.0 * n * kPi *
                       sq((4.0 * n * n - 4.0) / (kRt2 + 2.0 * std::sqrt(4.0 * n * n + 4.0)));
            });

        add(Family::book, IndexId::so5, "table2", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return 4.0 * n * kPi *
                       ((n * n + 2.0 * n - 3.0) /
                        (kRt2 + 2.0 * std::sqrt(n * n + 2.0 * n + 5.0)));
            });
        add(Family::book, IndexId::so6, "table2", "n >= 3", n_at_least(3),
            [](const FamilySpec& s) {
                double n = s.n;
                return 2.0 * n * kPi *
                       sq((n * n + 2.0 * n - 3.0) /
                          (kRt2 + 2.0 * std::sqrt(n * n + 2.0 * n + 5.0)));
            });

        add(Family::dutch_windmill, IndexId::so5, "table2", "n >= 3, m >= 2", windmill_range,
            [](const FamilySpec& s) {
                double m = s.m;
                return 16.0 * m * kPi *
                       ((m * m - 1.0) / (kRt2 + 2.0 * std::sqrt(4.0 * m * m + 4.0)));
            });
        add(Family::dutch_windmill, IndexId::so6, "table2", "n >= 3, m >= 2", windmill_range,
            [](const FamilySpec& s) {
                double m = s.m;
                return 32.0 * m * kPi *
                       sq((m * m - 1.0) / (kRt2 + 2.0 * std::sqrt(4.0 * m * m + 4.0)));
            });

        // ---- grid statement: so1..so6 for m, n >= 6 ----
        const auto grid_range = [](const FamilySpec& s) { return s.m >= 6 && s.n >= 6; };
        add(Family::grid, IndexId::so1, "grid", "m, n >= 6", grid_range,
            [](const FamilySpec& s) { return 14.0 * s.m + 14.0 * s.n - 16.0; });
        add(Family::grid, IndexId::so2, "grid", "m, n >= 6", grid_range,
            [](const FamilySpec& s) {
                return 40.0 / 13.0 + (14.0 * s.m + 14.0 * s.n - 56.0) / 25.0;
            });
        add(Family::grid, IndexId::so3, "grid", "m, n >= 6", grid_range,
            [](const FamilySpec& s) {
                return kRt2 * kPi * (104.0 / 5.0 + (50.0 * s.n + 50.0 * s.m - 200.0) / 7.0);
            });
        add(Family::grid, IndexId::so4, "grid", "m, n >= 6", grid_range,
            [](const FamilySpec& s) {
                return kPi / 2.0 *
                       (1352.0 / 25.0 + (1250.0 * s.m + 1250.0 * s.n - 5000.0) / 49.0);
            });
        add(Family::grid, IndexId::so5, "grid", "m, n >= 6", grid_range,
            [](const FamilySpec& s) {
                return 2.0 * kPi *
                       (40.0 / (kRt2 + 2.0 * std::sqrt(13.0)) +
                        (14.0 * s.m + 14.0 * s.n - 56.0) / (kRt2 + 10.0));
            });
        add(Family::grid, IndexId::so6, "grid", "m, n >= 6", grid_range,
            [](const FamilySpec& s) {
                return kPi * (200.0 / sq(kRt2 + 2.0 * std::sqrt(13.0)) +
                              (98.0 * s.m + 98.0 * s.n - 392.0) / sq(kRt2 + 10.0));
            });

        // ---- cactus chains: so1 statement, then table 3 ----
        const auto cactus = n_at_least(2);
        const double s20 = kRt2 + 2.0 * std::sqrt(20.0);

        add(Family::tri_chain, IndexId::so1, "cactus-so1(i)", "n >= 2", cactus,
            [](const FamilySpec& s) { return 12.0 * s.n; });
        add(Family::tri_chain, IndexId::so2, "table3", "n >= 2", cactus,
            [](const FamilySpec& s) { return 6.0 * s.n / 5.0; });
        add(Family::tri_chain, IndexId::so3, "table3", "n >= 2", cactus,
            [](const FamilySpec& s) { return 3.0 * kRt2 * kPi * ((44.0 * s.n - 36.0) / 3.0); });
        add(Family::tri_chain, IndexId::so4, "table3", "n >= 2", cactus,
            [](const FamilySpec& s) { return kPi / 2.0 * ((776.0 * s.n - 1080.0) / 9.0); });
        add(Family::tri_chain, IndexId::so5, "table3", "n >= 2", cactus,
            [s20](const FamilySpec& s) { return 48.0 * s.n * kPi / s20; });
        add(Family::tri_chain, IndexId::so6, "table3", "n >= 2", cactus,
            [s20](const FamilySpec& s) { return 288.0 * s.n * kPi / sq(s20); });

        add(Family::square_para_chain, IndexId::so1, "cactus-so1(ii)", "n >= 2", cactus,
            [](const FamilySpec& s) { return 24.0 * s.n - 24.0; });
        add(Family::square_para_chain, IndexId::so2, "table3", "n >= 2", cactus,
            [](const FamilySpec& s) { return (12.0 * s.n - 12.0) / 5.0; });
        add(Family::square_para_chain, IndexId::so3, "table3", "n >= 2", cactus,
            [](const FamilySpec& s) { return kRt2 * kPi * ((40.0 * s.n - 16.0) / 3.0); });
        add(Family::square_para_chain, IndexId::so4, "table3", "n >= 2", cactus,
            [](const FamilySpec& s) { return kPi / 2.0 * ((400.0 * s.n - 256.0) / 9.0); });
        add(Family::square_para_chain, IndexId::so5, "table3", "n >= 2", cactus,
            [s20](const FamilySpec& s) { return 24.0 * kPi * (4.0 * s.n - 4.0) / s20; });
        add(Family::square_para_chain, IndexId::so6, "table3", "n >= 2", cactus,
            [s20](const FamilySpec& s) { return 144.0 * kPi * (4.0 * s.n - 4.0) / sq(s20); });

        add(Family::square_ortho_chain, IndexId::so1, "cactus-so1(iii)", "n >= 2", cactus,
            [](const FamilySpec& s) { return 12.0 * s.n; });
        add(Family::square_ortho_chain, IndexId::so2, "table3", "n >= 2", cactus,
            [](const FamilySpec& s) { return 6.0 * s.n / 5.0; });
        add(Family::square_ortho_chain, IndexId::so3, "table3", "n >= 2", cactus,
            [](const FamilySpec& s) { return kRt2 * kPi * ((38.0 * s.n - 12.0) / 3.0); });
        add(Family::square_ortho_chain, IndexId::so4, "table3", "n >= 2", cactus,
            [](const FamilySpec& s) { return kPi / 2.0 * ((380.0 * s.n - 216.0) / 9.0); });
        add(Family::square_ortho_chain, IndexId::so5, "table3", "n >= 2", cactus,
            [s20](const FamilySpec& s) { return 48.0 * s.n * kPi / s20; });
        add(Family::square_ortho_chain, IndexId::so6, "table3", "n >= 2", cactus,
            [s20](const FamilySpec& s) { return 288.0 * s.n * kPi / sq(s20); });

        add(Family::hex_ortho_chain, IndexId::so1, "cactus-so1(iv)", "n >= 2", cactus,
            [](const FamilySpec& s) { return 12.0 * s.n; });
        add(Family::hex_ortho_chain, IndexId::so2, "table3", "n >= 2", cactus,
            [](const FamilySpec& s) { return 6.0 * s.n / 5.0; });
        add(Family::hex_ortho_chain, IndexId::so3, "table3", "n >= 2", cactus,
            [](const FamilySpec& s) { return kRt2 * kPi * ((50.0 * s.n - 12.0) / 3.0); });
        add(Family::hex_ortho_chain, IndexId::so4, "table3", "n >= 2", cactus,
            [](const FamilySpec& s) { return kPi / 2.0 * ((452.0 * s.n - 216.0) / 9.0); });
        add(Family::hex_ortho_chain, IndexId::so5, "table3", "n >= 2", cactus,
            [s20](const FamilySpec& s) { return 48.0 * s.n * kPi / s20; });
        add(Family::hex_ortho_chain, IndexId::so6, "table3", "n >= 2", cactus,
            [s20](const FamilySpec& s) { return 288.0 * s.n * kPi / sq(s20); });

        for (Family hex : {Family::hex_para_chain, Family::hex_meta_chain}) {
            const char* part = hex == Family::hex_para_chain ? "cactus-so1(v)" : "cactus-so1(vi)";
            add(hex, IndexId::so1, part, "n >= 2", cactus,
                [](const FamilySpec& s) { return 24.0 * s.n - 24.0; });
            add(hex, IndexId::so2, "table3", "n >= 2", cactus,
                [](const FamilySpec& s) { return (12.0 * s.n - 12.0) / 5.0; });
            add(hex, IndexId::so3, "table3", "n >= 2", cactus,
                [](const FamilySpec& s) { return kRt2 * kPi * ((52.0 * s.n - 26.0) / 3.0); });
            add(hex, IndexId::so4, "table3", "n >= 2", cactus,
                [](const FamilySpec& s) { return kPi / 2.0 * ((472.0 * s.n - 256.0) / 9.0); });
            add(hex, IndexId::so5, "table3", "n >= 2", cactus,
                [s20](const FamilySpec& s) { return 24.0 * kPi * (4.0 * s.n - 4.0) / s20; });
            add(hex, IndexId::so6, "table3", "n >= 2", cactus,
                [s20](const FamilySpec& s) { return 144.0 * kPi * (4.0 * s.n - 4.0) / sq(s20); });
        }

        return out;
    }();
    return cells;
}

inline const FormulaCell* find_cell(Family f, IndexId idx) {
    for (const FormulaCell& cell : catalogue())
        if (cell.family == f && cell.index == idx) return &cell;
    return nullptr;
}

/// How a published row compares to direct computation over its whole
/// validity range. "confirmed" rows agree everywhere and serve as the CI
/// gate; "disputed" rows disagree everywhere; "unstable" rows agree only
/// at isolated parameter values.
enum class RowExpectation { confirmed, disputed, unstable };

inline RowExpectation row_expectation(Family f, IndexId idx) {
    if (f == Family::grid && (idx == IndexId::so1 || idx == IndexId::so3 || idx == IndexId::so4))
        return RowExpectation::disputed;
    if (f == Family::tri_chain && idx == IndexId::so3) return RowExpectation::disputed;
    if (f == Family::tri_chain && idx == IndexId::so4) return RowExpectation::unstable;
    if ((f == Family::hex_para_chain || f == Family::hex_meta_chain) && idx == IndexId::so3)
        return RowExpectation::disputed;
    return RowExpectation::confirmed;
}

inline VerifyCell verify_cell(const FormulaCell& cell, const FamilySpec& params,
                              VerifyTolerance tol = {}) {
    if (params.family != cell.family)
        fail(errc::bad_parameter, "params are for a different family");
    if (!cell.in_range(params))
        fail(errc::bad_parameter, std::string("parameters outside stated validity (") +
                                      cell.validity + ") for " + family_cli_name(cell.family) +
                                      " " + index_name(cell.index));
    VerifyCell result;
    result.family = cell.family;
    result.index = cell.index;
    result.params = params;
    result.source = cell.source;
    // profile-path evaluation: families with equal degree-pair profiles get
    // bit-identical engine values, matching the published corollary exactly
    result.engine_value = index_from_profile(degree_pair_profile(generate(params)), cell.index);
    result.formula_value = cell.printed(params);
    const double e = result.engine_value, fv = result.formula_value;
    const double mag = std::max(std::abs(e), std::abs(fv));
    result.rel_diff = mag == 0.0 ? 0.0 : std::abs(e - fv) / mag;
    if (std::min(std::abs(e), std::abs(fv)) == 0.0)
        result.verdict = std::abs(e - fv) <= tol.abs_at_zero ? CellVerdict::match
                                                             : CellVerdict::mismatch;
    else
        result.verdict = result.rel_diff <= tol.rel ? CellVerdict::match : CellVerdict::mismatch;
    return result;
}

struct SweepRange {
    int n_lo = 2, n_hi = 30;
    int m_lo = 2, m_hi = 30;
};

/// One VerifyCell per (catalogue cell, admissible parameter point), in
/// deterministic order: catalogue order, then n ascending, then m.
inline std::vector<VerifyCell> sweep_verify(const std::vector<Family>& families, SweepRange range,
                                            VerifyTolerance tol = {}) {
    std::vector<VerifyCell> out;
    for (const FormulaCell& cell : catalogue()) {
        bool wanted = false;
        for (Family f : families) wanted = wanted || f == cell.family;
        if (!wanted) continue;
        for (int n = range.n_lo; n <= range.n_hi; ++n) {
            if (family_uses_m(cell.family)) {
                for (int m = range.m_lo; m <= range.m_hi; ++m) {
                    FamilySpec params{cell.family, n, m};
                    if (cell.in_range(params)) out.push_back(verify_cell(cell, params, tol));
                }
            } else {
                FamilySpec params{cell.family, n, 0};
                if (cell.in_range(params)) out.push_back(verify_cell(cell, params, tol));
            }
        }
    }
    return out;
}

enum class RowOutcome { all_match, all_mismatch, unstable };

inline const char* row_outcome_name(RowOutcome o) {
    switch (o) {
        case RowOutcome::all_match:    return "match";
        case RowOutcome::all_mismatch: return "mismatch";
        case RowOutcome::unstable:     return "unstable";
    }
    return "?";
}

struct RowSummary {
    Family family;
    IndexId index;
    RowOutcome outcome;
    int match_count = 0;
    int mismatch_count = 0;
};

/// Groups sweep results by published row and flags parameter-dependent
/// verdict flips as "unstable".
inline std::vector<RowSummary> summarize_rows(const std::vector<VerifyCell>& cells) {
    std::vector<RowSummary> rows;
    for (const VerifyCell& cell : cells) {
        RowSummary* row = nullptr;
        for (RowSummary& r : rows)
            if (r.family == cell.family && r.index == cell.index) row = &r;
        if (!row) {
            rows.push_back({cell.family, cell.index, RowOutcome::all_match, 0, 0});
            row = &rows.back();
        }
        if (cell.verdict == CellVerdict::match)
            ++row->match_count;
        else
            ++row->mismatch_count;
    }
    for (RowSummary& r : rows) {
        if (r.match_count > 0 && r.mismatch_count > 0)
            r.outcome = RowOutcome::unstable;
        else if (r.mismatch_count > 0)
            r.outcome = RowOutcome::all_mismatch;
        else
            r.outcome = RowOutcome::all_match;
    }
    return rows;
}

} // namespace sombor

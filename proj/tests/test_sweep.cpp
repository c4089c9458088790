#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "irwa/sweep.hpp"

using namespace irwa;

namespace {

double cell(const std::string& s) {
    double v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    REQUIRE(ec == std::errc());
    REQUIRE(ptr == s.data() + s.size());
    return v;
}

}  // namespace

TEST_SUITE("sweep") {

TEST_CASE("grid endpoints are exact") {
    const Grid g{0.0, 0.3, 61};
    const std::vector<double> pts = g.points();
    REQUIRE(pts.size() == 61);
    CHECK(pts.front() == 0.0);
    CHECK(pts.back() == 0.3);
    for (size_t i = 1; i < pts.size(); ++i) CHECK(pts[i] > pts[i - 1]);
    CHECK(Grid{0.5, 0.5, 1}.points() == std::vector<double>{0.5});
    CHECK_THROWS_AS(Grid({0.0, 1.0, 0}).points(), std::invalid_argument);
}

TEST_CASE("detuning policies resolve the qubit frequency") {
    CHECK(DetuningPolicy{DetuningPolicy::Mode::FixedOmegaA, 1.3}.omega_a_at(1.0, 0.1) == 1.3);
    CHECK(DetuningPolicy{DetuningPolicy::Mode::FixedDelta, 0.25}.omega_a_at(1.0, 0.1) == 1.25);
    CHECK(DetuningPolicy{DetuningPolicy::Mode::FactorOfG, 10.0}.omega_a_at(1.0, 0.1) == 2.0);
}

TEST_CASE("all presets exist and route to their subcommands") {
    const std::vector<std::string> names = preset_names();
    REQUIRE(names.size() == 8);
    for (const std::string& name : names) {
        CHECK_NOTHROW(preset_config(name));
    }
    CHECK(preset_config("fig1").subcommand == Subcommand::Cutoff);
    CHECK(preset_config("fig2").subcommand == Subcommand::Spectrum);
    CHECK(preset_config("fig3a").subcommand == Subcommand::Dispersive);
    CHECK(preset_config("fig5b").subcommand == Subcommand::TwoQubit);
    CHECK(preset_config("fig2").grid.steps == 61);
    CHECK(preset_config("fig1").grid.steps == 101);
    CHECK_THROWS_AS(preset_config("fig9"), std::invalid_argument);
}

TEST_CASE("config text: file order, comments, key application") {
    std::istringstream in("# comment\nomega-r = 1.0\nlevels=5\nlevels = 6\n");
    const auto pairs = parse_config_file(in);
    REQUIRE(pairs.size() == 3);
    CHECK(pairs[1].first == "levels");
    CHECK(pairs[2].second == "6");

    SweepConfig cfg;
    for (const auto& [k, v] : pairs) apply_key(cfg, k, v);
    CHECK(cfg.levels == 6);

    apply_key(cfg, "cutoff-policy", "fixed:2.5");
    CHECK(cfg.cutoff.mode() == CutoffPolicy::Mode::Fixed);
    apply_key(cfg, "delta-policy", "factor:10");
    CHECK(cfg.detuning.mode == DetuningPolicy::Mode::FactorOfG);
    apply_key(cfg, "t-max", "12.5");
    CHECK(cfg.variable == SweepVariable::Time);
    CHECK(cfg.grid.max == 12.5);
    apply_key(cfg, "variant", "rwa");
    CHECK(cfg.variant == DispersiveVariant::RWA);

    CHECK_THROWS_AS(apply_key(cfg, "nonsense", "1"), std::invalid_argument);
    CHECK_THROWS_AS(apply_key(cfg, "levels", "many"), std::invalid_argument);
    CHECK_THROWS_AS(apply_key(cfg, "variant", "exact"), std::invalid_argument);
}

TEST_CASE("number formatting is stable and locale independent") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.1326554650801218) == "0.13265546508");
    CHECK(format_number(-0.5) == "-0.5");
    CHECK(cell(format_number(0.1326554650801218)) ==
          doctest::Approx(0.1326554650801218).epsilon(1e-11));
}

TEST_CASE("coupling-ratio sweep reproduces the closed form per row") {
    const CsvTable t = run_sweep(preset_config("fig1"));
    REQUIRE(t.rows.size() == 101);
    REQUIRE(t.header[3] == "ratio");
    REQUIRE(t.header[4] == "flag");

    // g = 0: the ratio is undefined; the row is kept, flagged, with an
    // empty ratio cell.
    CHECK(t.rows[0][3].empty());
    CHECK(t.rows[0][4].substr(0, 5) == "warn:");
    CHECK(has_error_rows(t) == false);

    double prev = 0.0;
    for (size_t i = 1; i < t.rows.size(); ++i) {
        const double g = cell(t.rows[i][0]);
        const double ratio = cell(t.rows[i][3]);
        const double wk = 10.0 * g;
        const double delta = 0.01, sigma = 2.0 + delta;
        const double want = std::exp(-(sigma * sigma - delta * delta) / (2.0 * wk * wk));
        CHECK(std::abs(ratio - want) <= 1e-12);
        CHECK(ratio >= prev);
        prev = ratio;
    }
    CHECK(cell(t.rows.back()[3]) == doctest::Approx(0.13265546508012177).epsilon(1e-12));
    CHECK(std::abs(cell(t.rows.back()[3]) - 0.1327) < 1e-3);
}

TEST_CASE("resonance spectrum sweep: free limit and accuracy ordering") {
    SweepConfig cfg = preset_config("fig2");
    cfg.grid.steps = 7;  // keep the unit test quick; acceptance runs the full grid
    cfg.threads = 2;
    const CsvTable t = run_sweep(cfg);
    REQUIRE(t.rows.size() == 7 * 7);

    // g = 0 rows: all three energy columns agree with the free spectrum.
    for (size_t r = 0; r < 7; ++r) {
        CHECK(cell(t.rows[r][0]) == 0.0);
        const double e = cell(t.rows[r][3]);
        CHECK(cell(t.rows[r][2]) == doctest::Approx(e).epsilon(1e-9));
        CHECK(cell(t.rows[r][4]) == doctest::Approx(e).epsilon(1e-9));
        if (t.rows[r][1] == "ground") CHECK(e == doctest::Approx(-0.5).epsilon(1e-9));
    }

    // Ground level: exact energy nonincreasing in g, and the corrected
    // column beats the plain dressed-level column at the strongest coupling.
    double prev = 0.0;
    bool first = true;
    for (const auto& row : t.rows) {
        if (row[1] != "ground") continue;
        const double e = cell(row[3]);
        if (!first) CHECK(e <= prev + 1e-12);
        prev = e;
        first = false;
    }
    const auto& last_ground = *std::find_if(t.rows.rbegin(), t.rows.rend(),
                                            [](const auto& r) { return r[1] == "ground"; });
    CHECK(cell(last_ground[0]) == 0.3);
    const double e_exact = cell(last_ground[3]);
    CHECK(std::abs(cell(last_ground[4]) - e_exact) < std::abs(cell(last_ground[2]) - e_exact));
}

TEST_CASE("dispersive sweep rows match direct shift evaluations") {
    SweepConfig cfg = preset_config("fig3a");
    cfg.grid = {0.01, 0.1, 10};
    cfg.threads = 2;
    const CsvTable t = run_sweep(cfg);
    const std::vector<double> gs = cfg.grid.points();
    REQUIRE(t.rows.size() == gs.size());
    for (size_t i = 0; i < t.rows.size(); ++i) {
        const auto& row = t.rows[i];
        REQUIRE(row[6].empty());
        const double g = gs[i];
        const SystemParams p{1.0, 1.0 + 10.0 * g, g};
        const DispersiveShifts s = dispersive_shifts(p, cfg.cutoff);
        CHECK(cell(row[1]) == doctest::Approx(g / 10.0).epsilon(1e-12));
        CHECK(cell(row[1]) == doctest::Approx(s.chi_rwa).epsilon(1e-12));
        CHECK(cell(row[2]) == doctest::Approx(s.chi_nrwa).epsilon(1e-12));
        CHECK(cell(row[3]) == doctest::Approx(s.chi_irwa).epsilon(1e-12));
        CHECK_FALSE(row[4].empty());
        CHECK_FALSE(row[5].empty());
    }
}

TEST_CASE("zero qubit frequency kills the full-strength shift in the sweep") {
    SweepConfig cfg = preset_config("fig3b");
    cfg.grid = {0.1, 0.1, 1};  // the row where omega_a = 1 - 10 g = 0
    const CsvTable t = run_sweep(cfg);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][2] == "0");
    CHECK(cell(t.rows[0][1]) == doctest::Approx(-0.01).epsilon(1e-12));
}

TEST_CASE("two-qubit coupling sweep columns vanish with g") {
    SweepConfig cfg = preset_config("fig5a");
    cfg.grid = {0.001, 0.01, 4};
    const CsvTable t = run_sweep(cfg);
    REQUIRE(t.rows.size() == 4);
    for (const auto& row : t.rows) {
        REQUIRE(row[7].empty());
        for (int c = 1; c <= 6; ++c) {
            CHECK(std::abs(cell(row[c])) < 0.01);
        }
    }
    // Couplings shrink with g toward zero.
    CHECK(std::abs(cell(t.rows[0][5])) < std::abs(cell(t.rows[3][5])));
}

TEST_CASE("evolution sweep: identity at t = 0, gate point, unitarity") {
    SweepConfig cfg;
    cfg.subcommand = Subcommand::Evolve;
    cfg.variable = SweepVariable::Time;
    cfg.g_fixed = 0.02;
    cfg.detuning = {DetuningPolicy::Mode::FixedDelta, 0.2};
    cfg.cutoff = CutoffPolicy::factor_of_detuning(10.0);
    cfg.variant = DispersiveVariant::RWA;
    const double t_gate = std::numbers::pi * 0.2 / (4.0 * 0.02 * 0.02);
    cfg.grid = {0.0, t_gate, 2};

    const CsvTable t = run_sweep(cfg);
    REQUIRE(t.rows.size() == 2);
    REQUIRE(t.header.size() == 36);

    // t = 0: identity block.
    CHECK(cell(t.rows[0][0]) == 0.0);
    CHECK(std::abs(cell(t.rows[0][1]) - 1.0) <= 1e-12);  // u_eeee_re
    CHECK(std::abs(cell(t.rows[0][2])) <= 1e-12);        // u_eeee_im
    CHECK(std::abs(cell(t.rows[0][3])) <= 1e-12);        // u_eeeg_re
    CHECK(std::abs(cell(t.rows[0][11]) - 1.0) <= 1e-12); // u_egeg_re

    // Gate time: fidelity column at its maximum.
    CHECK(cell(t.rows[1][33]) >= 1.0 - 1e-10);
    for (const auto& row : t.rows) {
        CHECK(cell(row[34]) <= 1e-10);
        CHECK(row[35].empty());
    }
}

TEST_CASE("flagged-row plumbing distinguishes warnings from errors") {
    SweepConfig warn_cfg = preset_config("fig1");
    warn_cfg.grid = {0.0, 0.0, 1};
    const CsvTable warn_table = run_sweep(warn_cfg);
    CHECK_FALSE(warn_table.rows[0][4].empty());
    CHECK_FALSE(has_error_rows(warn_table));

    SweepConfig err_cfg = preset_config("fig3a");
    err_cfg.detuning = {DetuningPolicy::Mode::FixedDelta, 0.0};  // singular detuning
    err_cfg.grid = {0.01, 0.02, 2};
    const CsvTable err_table = run_sweep(err_cfg);
    CHECK(has_error_rows(err_table));
    for (const auto& row : err_table.rows) {
        CHECK(row[6].substr(0, 6) == "error:");
        CHECK(row[1].empty());
    }
}

TEST_CASE("identical configs give byte-identical tables at any thread count") {
    SweepConfig cfg = preset_config("fig3a");
    cfg.grid = {0.01, 0.1, 12};
    const std::string once = run_sweep(cfg).to_string();
    const std::string twice = run_sweep(cfg).to_string();
    CHECK(once == twice);
    cfg.threads = 4;
    CHECK(run_sweep(cfg).to_string() == once);
}

TEST_CASE("csv text layout") {
    CsvTable t;
    t.header = {"a", "b"};
    t.rows = {{"1", ""}, {"2.5", "x"}};
    CHECK(t.to_string() == "a,b\n1,\n2.5,x\n");
}

}  // TEST_SUITE

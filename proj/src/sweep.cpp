#include "irwa/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <system_error>

#include "irwa/errors.hpp"
#include "irwa/models.hpp"
#include "irwa/parallel.hpp"
#include "irwa/perturbation.hpp"
#include "irwa/spectra.hpp"

namespace irwa {

double DetuningPolicy::omega_a_at(double omega_r, double g) const {
    switch (mode) {
        case Mode::FixedOmegaA:
            return value;
        case Mode::FixedDelta:
            return omega_r + value;
        case Mode::FactorOfG:
            return omega_r + value * g;
    }
    throw std::logic_error("DetuningPolicy: unknown mode");
}

std::vector<double> Grid::points() const {
    if (steps < 1) {
        throw std::invalid_argument("grid: steps must be at least 1");
    }
    if (min > max) {
        throw std::invalid_argument("grid: min exceeds max");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    if (steps == 1) {
        out.push_back(min);
        return out;
    }
    for (int i = 0; i < steps; ++i) {
        if (i == 0) {
            out.push_back(min);
        } else if (i == steps - 1) {
            out.push_back(max);
        } else {
            out.push_back(min + (max - min) * (static_cast<double>(i) / (steps - 1)));
        }
    }
    return out;
}

SweepConfig preset_config(const std::string& name) {
    SweepConfig c;
    if (name == "fig1") {
        c.subcommand = Subcommand::Cutoff;
        c.variable = SweepVariable::G;
        c.grid = {0.0, 0.1, 101};
        c.detuning = {DetuningPolicy::Mode::FixedDelta, 0.01};
        c.cutoff = CutoffPolicy::factor_of_g(10.0);
    } else if (name == "fig2") {
        c.subcommand = Subcommand::Spectrum;
        c.variable = SweepVariable::G;
        c.grid = {0.0, 0.3, 61};
        c.detuning = {DetuningPolicy::Mode::FixedDelta, 0.0};
        c.cutoff = CutoffPolicy::factor_of_g(10.0);
        c.levels = 7;
    } else if (name == "fig3a" || name == "fig3b") {
        c.subcommand = Subcommand::Dispersive;
        c.variable = SweepVariable::G;
        c.grid = {0.001, 0.1, 100};
        c.detuning = {DetuningPolicy::Mode::FactorOfG, name == "fig3a" ? 10.0 : -10.0};
        c.cutoff = CutoffPolicy::factor_of_detuning(10.0);
    } else if (name == "fig4a" || name == "fig4b") {
        c.subcommand = Subcommand::Dispersive;
        c.variable = SweepVariable::Delta;
        c.grid = (name == "fig4a") ? Grid{0.01, 1.0, 100} : Grid{-1.0, -0.01, 100};
        c.g_fixed = 0.1;
        c.cutoff = CutoffPolicy::factor_of_detuning(10.0);
    } else if (name == "fig5a" || name == "fig5b") {
        c.subcommand = Subcommand::TwoQubit;
        c.variable = SweepVariable::G;
        c.grid = {0.001, 0.1, 100};
        c.detuning = {DetuningPolicy::Mode::FactorOfG, name == "fig5a" ? 10.0 : -10.0};
        c.cutoff = CutoffPolicy::factor_of_detuning(10.0);
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }
    return c;
}

std::vector<std::string> preset_names() {
    return {"fig1", "fig2", "fig3a", "fig3b", "fig4a", "fig4b", "fig5a", "fig5b"};
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& s) {
    double v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
        throw std::invalid_argument(key + ": cannot parse '" + s + "' as a number");
    }
    return v;
}

int parse_int(const std::string& key, const std::string& s) {
    int v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto res = std::from_chars(first, last, v);
    if (res.ec != std::errc() || res.ptr != last) {
        throw std::invalid_argument(key + ": cannot parse '" + s + "' as an integer");
    }
    return v;
}

// Splits "name:value" for the policy-style options.
std::pair<std::string, double> parse_tagged(const std::string& key, const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument(key + ": expected '<name>:<value>', got '" + s + "'");
    }
    return {s.substr(0, colon), parse_double(key, s.substr(colon + 1))};
}

std::string error_flag(const std::exception& e) { return std::string("error:") + e.what(); }

SystemParams g_point(const SweepConfig& cfg, double g) {
    return SystemParams(cfg.omega_r, cfg.detuning.omega_a_at(cfg.omega_r, g), g);
}

SystemParams delta_point(const SweepConfig& cfg, double delta) {
    return SystemParams(cfg.omega_r, cfg.omega_r + delta, cfg.g_fixed);
}

void require_variable(const SweepConfig& cfg, SweepVariable expected, const char* who) {
    if (cfg.variable != expected) {
        throw std::invalid_argument(std::string(who) + ": wrong sweep variable for this command");
    }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_config_file(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        const std::string stripped = trim(line);
        if (stripped.empty()) {
            continue;
        }
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            std::ostringstream msg;
            msg << "config line " << lineno << ": expected key=value, got '" << stripped << "'";
            throw std::invalid_argument(msg.str());
        }
        out.emplace_back(trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
    }
    return out;
}

void apply_key(SweepConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "omega-r") {
        cfg.omega_r = parse_double(key, value);
    } else if (key == "omega-a") {
        cfg.detuning = {DetuningPolicy::Mode::FixedOmegaA, parse_double(key, value)};
    } else if (key == "delta-policy") {
        const auto [tag, v] = parse_tagged(key, value);
        if (tag == "fixed") {
            cfg.detuning = {DetuningPolicy::Mode::FixedDelta, v};
        } else if (tag == "factor") {
            cfg.detuning = {DetuningPolicy::Mode::FactorOfG, v};
        } else {
            throw std::invalid_argument(key + ": expected fixed:V or factor:C");
        }
    } else if (key == "g") {
        cfg.g_fixed = parse_double(key, value);
    } else if (key == "g-min") {
        cfg.variable = SweepVariable::G;
        cfg.grid.min = parse_double(key, value);
    } else if (key == "g-max") {
        cfg.variable = SweepVariable::G;
        cfg.grid.max = parse_double(key, value);
    } else if (key == "g-steps") {
        cfg.variable = SweepVariable::G;
        cfg.grid.steps = parse_int(key, value);
    } else if (key == "delta-min") {
        cfg.variable = SweepVariable::Delta;
        cfg.grid.min = parse_double(key, value);
    } else if (key == "delta-max") {
        cfg.variable = SweepVariable::Delta;
        cfg.grid.max = parse_double(key, value);
    } else if (key == "delta-steps") {
        cfg.variable = SweepVariable::Delta;
        cfg.grid.steps = parse_int(key, value);
    } else if (key == "t-min") {
        cfg.variable = SweepVariable::Time;
        cfg.grid.min = parse_double(key, value);
    } else if (key == "t-max") {
        cfg.variable = SweepVariable::Time;
        cfg.grid.max = parse_double(key, value);
    } else if (key == "t-steps") {
        cfg.variable = SweepVariable::Time;
        cfg.grid.steps = parse_int(key, value);
    } else if (key == "cutoff-policy") {
        const auto [tag, v] = parse_tagged(key, value);
        if (tag == "factor_of_g") {
            cfg.cutoff = CutoffPolicy::factor_of_g(v);
        } else if (tag == "factor_of_detuning") {
            cfg.cutoff = CutoffPolicy::factor_of_detuning(v);
        } else if (tag == "fixed") {
            cfg.cutoff = CutoffPolicy::fixed(v);
        } else {
            throw std::invalid_argument(
                    key + ": expected factor_of_g:C, factor_of_detuning:C or fixed:V");
        }
    } else if (key == "fock") {
        if (value == "auto") {
            cfg.fock = 0;
        } else {
            const int n = parse_int(key, value);
            if (n < 1) {
                throw std::invalid_argument(key + ": cutoff must be at least 1 (or 'auto')");
            }
            cfg.fock = n;
        }
    } else if (key == "levels") {
        cfg.levels = parse_int(key, value);
    } else if (key == "variant") {
        if (value == "rwa") {
            cfg.variant = DispersiveVariant::RWA;
        } else if (value == "nrwa") {
            cfg.variant = DispersiveVariant::NonRWA;
        } else if (value == "irwa") {
            cfg.variant = DispersiveVariant::IRWA;
        } else {
            throw std::invalid_argument(key + ": expected rwa, nrwa or irwa");
        }
    } else if (key == "sector") {
        cfg.photon_sector = parse_int(key, value);
    } else if (key == "threads") {
        cfg.threads = parse_int(key, value);
    } else if (key == "allow-flagged") {
        if (value == "true" || value == "1") {
            cfg.allow_flagged = true;
        } else if (value == "false" || value == "0") {
            cfg.allow_flagged = false;
        } else {
            throw std::invalid_argument(key + ": expected true/false");
        }
    } else if (key == "out") {
        cfg.out = value;
    } else {
        throw std::invalid_argument("unknown configuration key: " + key);
    }
}

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string CsvTable::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (i) {
            out += ',';
        }
        out += header[i];
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

bool has_error_rows(const CsvTable& table) {
    for (const auto& row : table.rows) {
        if (!row.empty() && row.back().rfind("error:", 0) == 0) {
            return true;
        }
    }
    return false;
}

CsvTable cmd_cutoff(const SweepConfig& cfg) {
    require_variable(cfg, SweepVariable::G, "cutoff");
    const std::vector<double> gs = cfg.grid.points();

    CsvTable t;
    t.header = {"g_over_wr", "g_r", "g_ar", "ratio", "flag"};
    for (double g : gs) {
        std::vector<std::string> row(5);
        row[0] = format_number(g / cfg.omega_r);
        try {
            const SystemParams p = g_point(cfg, g);
            const CouplingPair cp = averaged_couplings(p, cfg.cutoff);
            row[1] = format_number(cp.g_r);
            row[2] = format_number(cp.g_ar);
            if (cp.g_r == 0) {
                row[4] = "warn:ratio undefined (g_r = 0)";
            } else {
                row[3] = format_number(cp.g_ar / cp.g_r);
            }
        } catch (const PolicyError& e) {
            row[4] = error_flag(e);
        } catch (const std::invalid_argument& e) {
            row[4] = error_flag(e);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

CsvTable cmd_spectrum(const SweepConfig& cfg) {
    require_variable(cfg, SweepVariable::G, "spectrum");
    if (cfg.levels < 1) {
        throw std::invalid_argument("spectrum: levels must be at least 1");
    }
    const std::vector<double> gs = cfg.grid.points();
    std::vector<SystemParams> sweep;
    sweep.reserve(gs.size());
    for (double g : gs) {
        sweep.push_back(g_point(cfg, g));
    }

    TrackOptions topt;
    topt.n_max = cfg.fock;
    topt.threads = cfg.threads;
    const TrackedSpectrum ts = track_levels(sweep, ModelKind::Rabi, cfg.cutoff, cfg.levels, topt);
    const std::set<int> ties(ts.tie_points.begin(), ts.tie_points.end());

    CsvTable t;
    t.header = {"g_over_wr", "level_label", "E_jc", "E_qrm_exact", "E_irwa_pt2", "flag"};
    for (std::size_t i = 0; i < gs.size(); ++i) {
        const SystemParams& p = sweep[i];
        const CouplingPair cp_jc = couplings_for(ModelKind::JC, p, cfg.cutoff);
        const CouplingPair cp_ir = couplings_for(ModelKind::IRWA, p, cfg.cutoff);
        const std::string point_flag =
                ties.count(static_cast<int>(i)) ? "warn:overlap tie broken by energy order" : "";
        for (const TrackedLevel& lvl : ts.levels) {
            std::vector<std::string> row(6);
            row[0] = format_number(gs[i] / cfg.omega_r);
            row[1] = lvl.label.str();
            row[2] = format_number(jc_level(lvl.label, p, cp_jc));
            row[3] = format_number(lvl.energies[i]);
            row[5] = point_flag;
            try {
                const double e2 = jc_level(lvl.label, p, cp_ir) + second_order(lvl.label, p, cp_ir);
                row[4] = format_number(e2);
            } catch (const DegeneracyError& e) {
                row[5] = error_flag(e);
            }
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

CsvTable cmd_dispersive(const SweepConfig& cfg) {
    if (cfg.variable != SweepVariable::G && cfg.variable != SweepVariable::Delta) {
        throw std::invalid_argument("dispersive: sweep variable must be g or delta");
    }
    const bool over_g = cfg.variable == SweepVariable::G;
    const std::vector<double> xs = cfg.grid.points();

    CsvTable t;
    t.header = {over_g ? "g_over_wr" : "delta_over_wr",
                "chi_rwa",
                "chi_nrwa",
                "chi_irwa",
                "chi_exact_qrm",
                "chi_exact_jc",
                "flag"};
    t.rows.assign(xs.size(), std::vector<std::string>(7));
    parallel_for_index(static_cast<int>(xs.size()), cfg.threads, [&](int i) {
        const double x = xs[static_cast<std::size_t>(i)];
        auto& row = t.rows[static_cast<std::size_t>(i)];
        row[0] = format_number(x / cfg.omega_r);
        try {
            const SystemParams p = over_g ? g_point(cfg, x) : delta_point(cfg, x);
            const DispersiveShifts s = dispersive_shifts(p, cfg.cutoff);
            const ExactShift exact_qrm = exact_shift_oracle(p, ModelKind::Rabi, cfg.cutoff);
            const ExactShift exact_jc = exact_shift_oracle(p, ModelKind::JC, cfg.cutoff);
            row[1] = format_number(s.chi_rwa);
            row[2] = format_number(s.chi_nrwa);
            row[3] = format_number(s.chi_irwa);
            row[4] = format_number(exact_qrm.chi);
            row[5] = format_number(exact_jc.chi);
            if (exact_qrm.tie || exact_jc.tie) {
                row[6] = "warn:overlap tie broken by energy order";
            }
        } catch (const SingularDetuningError& e) {
            row[6] = error_flag(e);
        } catch (const PolicyError& e) {
            row[6] = error_flag(e);
        } catch (const TrackingError& e) {
            row[6] = error_flag(e);
        } catch (const ConvergenceError& e) {
            row[6] = error_flag(e);
        } catch (const std::invalid_argument& e) {
            row[6] = error_flag(e);
        }
    });
    return t;
}

CsvTable cmd_twoqubit(const SweepConfig& cfg) {
    require_variable(cfg, SweepVariable::G, "twoqubit");
    const std::vector<double> gs = cfg.grid.points();

    CsvTable t;
    t.header = {"g_over_wr", "J_rwa", "J_nr0", "J_nr1", "J_ir0", "J_ir1", "J_ir2", "flag"};
    for (double g : gs) {
        std::vector<std::string> row(8);
        row[0] = format_number(g / cfg.omega_r);
        try {
            const SystemParams p = g_point(cfg, g);
            const MultiQubitParams mp = MultiQubitParams::equal_qubits(p, 2, cfg.cutoff);
            const EffectiveCouplings j = effective_couplings(mp);
            row[1] = format_number(j.j_r);
            row[2] = format_number(j.j_nr0);
            row[3] = format_number(j.j_nr1);
            row[4] = format_number(j.j_ir0);
            row[5] = format_number(j.j_ir1);
            row[6] = format_number(j.j_ir2);
        } catch (const SingularDetuningError& e) {
            row[7] = error_flag(e);
        } catch (const PolicyError& e) {
            row[7] = error_flag(e);
        } catch (const std::invalid_argument& e) {
            row[7] = error_flag(e);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

CsvTable cmd_evolve(const SweepConfig& cfg) {
    require_variable(cfg, SweepVariable::Time, "evolve");
    const std::vector<double> times = cfg.grid.points();
    static const char* kBasis[4] = {"ee", "eg", "ge", "gg"};

    CsvTable t;
    t.header.push_back("t");
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            const std::string base = std::string("u_") + kBasis[r] + kBasis[c];
            t.header.push_back(base + "_re");
            t.header.push_back(base + "_im");
        }
    }
    t.header.push_back("fidelity_to_sqrt_iswap");
    t.header.push_back("unitarity");
    t.header.push_back("flag");

    const ComplexMatrix ideal = sqrt_iswap_block();
    for (double time : times) {
        std::vector<std::string> row(t.header.size());
        row[0] = format_number(time);
        try {
            const SystemParams p =
                    SystemParams(cfg.omega_r, cfg.detuning.omega_a_at(cfg.omega_r, cfg.g_fixed),
                                 cfg.g_fixed);
            const MultiQubitParams mp = MultiQubitParams::equal_qubits(p, 2, cfg.cutoff);
            const TwoQubitEvolution ev =
                    evolution_2q(mp, cfg.variant, time, cfg.photon_sector);
            std::size_t col = 1;
            for (int r = 0; r < 4; ++r) {
                for (int c = 0; c < 4; ++c) {
                    row[col++] = format_number(ev.block(r, c).real());
                    row[col++] = format_number(ev.block(r, c).imag());
                }
            }
            row[col++] = format_number(gate_fidelity(ev.block, ideal));
            row[col++] = format_number(ev.unitarity_residual);
        } catch (const SingularDetuningError& e) {
            row.back() = error_flag(e);
        } catch (const PolicyError& e) {
            row.back() = error_flag(e);
        } catch (const std::invalid_argument& e) {
            row.back() = error_flag(e);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

CsvTable run_sweep(const SweepConfig& cfg) {
    if (cfg.threads < 1) {
        throw std::invalid_argument("threads must be at least 1");
    }
    switch (cfg.subcommand) {
        case Subcommand::Cutoff:
            return cmd_cutoff(cfg);
        case Subcommand::Spectrum:
            return cmd_spectrum(cfg);
        case Subcommand::Dispersive:
            return cmd_dispersive(cfg);
        case Subcommand::TwoQubit:
            return cmd_twoqubit(cfg);
        case Subcommand::Evolve:
            return cmd_evolve(cfg);
    }
    throw std::logic_error("run_sweep: unknown subcommand");
}

}  // namespace irwa

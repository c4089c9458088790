#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "irwa/averaging.hpp"
#include "irwa/dispersive.hpp"

namespace irwa {

enum class Subcommand { Cutoff, Spectrum, Dispersive, TwoQubit, Evolve };

// How the qubit frequency follows the sweep: a fixed omega_a, a fixed
// detuning (omega_a = omega_r + value), or a coupling-proportional detuning
// (omega_a = omega_r + value * g).
struct DetuningPolicy {
    enum class Mode { FixedOmegaA, FixedDelta, FactorOfG };
    Mode mode = Mode::FixedOmegaA;
    double value = 1.0;

    double omega_a_at(double omega_r, double g) const;
};

// An inclusive linear grid; steps counts points, both endpoints exact.
struct Grid {
    double min = 0;
    double max = 0;
    int steps = 1;

    std::vector<double> points() const;
};

enum class SweepVariable { G, Delta, Time };

struct SweepConfig {
    Subcommand subcommand = Subcommand::Cutoff;
    SweepVariable variable = SweepVariable::G;
    Grid grid;
    double omega_r = 1.0;
    DetuningPolicy detuning;  // resolves omega_a when the variable is not Delta
    double g_fixed = 0.1;     // coupling when the variable is not G
    CutoffPolicy cutoff = CutoffPolicy::factor_of_g(10.0);
    int fock = 0;  // Fock cutoff; 0 = choose by convergence
    int levels = 7;
    DispersiveVariant variant = DispersiveVariant::IRWA;  // evolve only
    int photon_sector = 0;                                // evolve only
    int threads = 1;
    bool allow_flagged = false;
    std::string out;  // output path; empty = stdout
};

// Canonical sweeps: fig1 (coupling ratio), fig2 (spectrum at resonance),
// fig3a/fig3b (dispersive shift vs g at Delta = +-10g), fig4a/fig4b
// (dispersive shift vs detuning at g = 0.1), fig5a/fig5b (two-qubit
// effective couplings at Delta = +-10g).
SweepConfig preset_config(const std::string& name);
std::vector<std::string> preset_names();

// Flat key=value configuration text; '#' starts a comment. Pairs are
// returned in file order so later lines override earlier ones.
std::vector<std::pair<std::string, std::string>> parse_config_file(std::istream& in);
// Applies one key=value pair onto a config; throws std::invalid_argument on
// unknown keys or unparseable values. Keys match the CLI flag names.
void apply_key(SweepConfig& cfg, const std::string& key, const std::string& value);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const;
};

// 12 significant digits, locale independent.
std::string format_number(double v);

CsvTable cmd_cutoff(const SweepConfig& cfg);
CsvTable cmd_spectrum(const SweepConfig& cfg);
CsvTable cmd_dispersive(const SweepConfig& cfg);
CsvTable cmd_twoqubit(const SweepConfig& cfg);
CsvTable cmd_evolve(const SweepConfig& cfg);
CsvTable run_sweep(const SweepConfig& cfg);

// True when any row carries an "error:" flag (grounds for exit code 3).
bool has_error_rows(const CsvTable& table);

}  // namespace irwa

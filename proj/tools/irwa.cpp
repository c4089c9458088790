#include <exception>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "irwa/errors.hpp"
#include "irwa/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadConfig = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitFlagged = 3;

struct CliOptions {
    std::string preset;
    std::string config_path;
    std::vector<std::pair<std::string, std::string>> overrides;  // key, raw value
};

// Registers one sweep option on a subcommand; values are applied later in
// precedence order (preset, then config file, then explicit flags).
void add_keyed(CLI::App* cmd, CliOptions& opts, const std::string& flag, const std::string& key,
               const std::string& help) {
    cmd->add_option_function<std::string>(
               flag,
               [&opts, key](const std::string& v) { opts.overrides.emplace_back(key, v); },
               help)
            ->type_name("VALUE");
}

int run(irwa::Subcommand sub, irwa::SweepVariable default_var, const CliOptions& opts) {
    irwa::SweepConfig cfg;
    try {
        if (!opts.preset.empty()) {
            cfg = irwa::preset_config(opts.preset);
            if (cfg.subcommand != sub) {
                std::cerr << "preset '" << opts.preset << "' belongs to a different subcommand\n";
                return kExitBadConfig;
            }
        } else {
            cfg.subcommand = sub;
            cfg.variable = default_var;
        }
        if (!opts.config_path.empty()) {
            std::ifstream in(opts.config_path);
            if (!in) {
                std::cerr << "cannot read config file: " << opts.config_path << "\n";
                return kExitBadConfig;
            }
            for (const auto& [key, value] : irwa::parse_config_file(in)) {
                irwa::apply_key(cfg, key, value);
            }
        }
        for (const auto& [key, value] : opts.overrides) {
            irwa::apply_key(cfg, key, value);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitBadConfig;
    }

    irwa::CsvTable table;
    try {
        table = irwa::run_sweep(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    }

    const std::string text = table.to_string();
    if (cfg.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output path: " << cfg.out << "\n";
            return kExitBadConfig;
        }
        out << text;
        if (!out) {
            std::cerr << "short write to output path: " << cfg.out << "\n";
            return kExitBadConfig;
        }
    }

    if (!cfg.allow_flagged && irwa::has_error_rows(table)) {
        std::cerr << "sweep finished with error-flagged rows\n";
        return kExitFlagged;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Qubit-resonator sweeps: averaged couplings, spectra, dispersive shifts,\n"
                 "two-qubit effective couplings and evolution. Emits CSV."};
    app.require_subcommand(1);

    struct SubcommandDef {
        const char* name;
        const char* help;
        irwa::Subcommand sub;
        irwa::SweepVariable var;
    };
    const SubcommandDef defs[] = {
            {"cutoff", "Time-averaged coupling pair and their ratio over a coupling grid",
             irwa::Subcommand::Cutoff, irwa::SweepVariable::G},
            {"spectrum", "Exact, co-rotating and second-order corrected level sweeps",
             irwa::Subcommand::Spectrum, irwa::SweepVariable::G},
            {"dispersive", "Resonator shift formulas against exact diagonalization",
             irwa::Subcommand::Dispersive, irwa::SweepVariable::G},
            {"twoqubit", "Resonator-mediated interqubit coupling strengths",
             irwa::Subcommand::TwoQubit, irwa::SweepVariable::G},
            {"evolve", "Two-qubit dispersive evolution block over a time grid",
             irwa::Subcommand::Evolve, irwa::SweepVariable::Time},
    };

    std::vector<std::unique_ptr<CliOptions>> option_sets;
    int exit_code = kExitOk;
    for (const auto& def : defs) {
        CLI::App* cmd = app.add_subcommand(def.name, def.help);
        option_sets.push_back(std::make_unique<CliOptions>());
        CliOptions& opts = *option_sets.back();

        cmd->add_option("--preset", opts.preset,
                        "Canonical sweep: fig1, fig2, fig3a, fig3b, fig4a, fig4b, fig5a, fig5b");
        cmd->add_option("--config", opts.config_path, "Flat key=value configuration file");
        add_keyed(cmd, opts, "--omega-r", "omega-r", "Resonator frequency (default 1)");
        add_keyed(cmd, opts, "--omega-a", "omega-a", "Fixed qubit frequency");
        add_keyed(cmd, opts, "--delta-policy", "delta-policy",
                  "Detuning rule: fixed:V or factor:C (Delta = C*g)");
        add_keyed(cmd, opts, "--g", "g", "Fixed coupling for delta/time sweeps");
        add_keyed(cmd, opts, "--g-min", "g-min", "Coupling grid start");
        add_keyed(cmd, opts, "--g-max", "g-max", "Coupling grid end");
        add_keyed(cmd, opts, "--g-steps", "g-steps", "Coupling grid point count");
        add_keyed(cmd, opts, "--delta-min", "delta-min", "Detuning grid start");
        add_keyed(cmd, opts, "--delta-max", "delta-max", "Detuning grid end");
        add_keyed(cmd, opts, "--delta-steps", "delta-steps", "Detuning grid point count");
        add_keyed(cmd, opts, "--t-min", "t-min", "Time grid start");
        add_keyed(cmd, opts, "--t-max", "t-max", "Time grid end");
        add_keyed(cmd, opts, "--t-steps", "t-steps", "Time grid point count");
        add_keyed(cmd, opts, "--cutoff-policy", "cutoff-policy",
                  "Averaging width rule: factor_of_g:C, factor_of_detuning:C or fixed:V");
        add_keyed(cmd, opts, "--fock", "fock", "Fock cutoff: auto or a positive integer");
        add_keyed(cmd, opts, "--levels", "levels", "Levels to track (spectrum)");
        add_keyed(cmd, opts, "--variant", "variant", "Effective model: rwa, nrwa or irwa");
        add_keyed(cmd, opts, "--sector", "sector", "Photon sector for the evolution block");
        add_keyed(cmd, opts, "--threads", "threads", "Worker threads for sweep rows");
        add_keyed(cmd, opts, "--allow-flagged", "allow-flagged",
                  "Exit 0 even when rows carry error flags (true/false)");
        add_keyed(cmd, opts, "--out", "out", "Output CSV path (default stdout)");

        const SubcommandDef* captured = &def;
        CliOptions* opts_ptr = &opts;
        cmd->callback([captured, opts_ptr, &exit_code] {
            exit_code = run(captured->sub, captured->var, *opts_ptr);
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadConfig;
    }
    return exit_code;
}

// gphase — geometric phases of a two-level atom in accelerated motion
// through vacuum scalar-field fluctuations, with optional mirror boundary.
//
// Subcommands:
//   sweep     parameter sweep -> CSV (delta_tilde per scenario/method)
//   figure    built-in figure presets -> CSV + SVG
//   crossing  accelerations where linear and circular motion coincide
//   validate  full self-consistency suite (oracles, invariants)
//
// Exit codes: 0 success, 1 validation failure, 2 bad arguments,
// 3 out-of-scope request.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gphase/dissipator.hpp"
#include "gphase/figures.hpp"
#include "gphase/model.hpp"
#include "gphase/phase.hpp"
#include "gphase/sweep.hpp"
#include "gphase/validate.hpp"

namespace {

int run_sweep_cmd(const gphase::SweepSpec& spec, const std::string& out_path) {
    const auto rows = gphase::run_sweep(spec);
    std::ofstream os(out_path, std::ios::binary);
    if (!os) {
        std::cerr << "error: cannot open output path: " << out_path << "\n";
        return 2;
    }
    gphase::write_csv(os, rows);
    std::cout << "wrote " << rows.size() << " rows to " << out_path << "\n";
    return 0;
}

int run_crossing_cmd() {
    const double astar = gphase::phase_crossing();
    const double agamma = gphase::rate_crossing();
    const gphase::InitialState st{gphase::kPi / 4.0};
    const double resid_phase =
        std::abs(gphase::delta_perturbative(gphase::Scenario::linear(astar), st) -
                 gphase::delta_perturbative(gphase::Scenario::circular(astar), st));
    const double resid_rate =
        std::abs(gphase::relative_rate(gphase::Scenario::linear(agamma)) -
                 gphase::relative_rate(gphase::Scenario::circular(agamma)));

    std::cout << "phase crossing: linear and circular corrections coincide for every theta\n"
              << "  a_star = " << gphase::format_g17(astar) << "\n"
              << "  |delta_l - delta_c| at theta=pi/4 = " << gphase::format_g17(resid_phase) << "\n"
              << "rate crossing: equal relative transition rates\n"
              << "  a_gamma = " << gphase::format_g17(agamma) << "\n"
              << "  Gamma(a_gamma) = "
              << gphase::format_g17(gphase::relative_rate(gphase::Scenario::linear(agamma))) << "\n"
              << "  |Gamma_l - Gamma_c| = " << gphase::format_g17(resid_rate) << "\n";
    // machine-readable block
    std::cout << "a_star=" << gphase::format_g17(astar) << "\n"
              << "phase_residual=" << gphase::format_g17(resid_phase) << "\n"
              << "a_gamma=" << gphase::format_g17(agamma) << "\n"
              << "gamma_at_crossing="
              << gphase::format_g17(gphase::relative_rate(gphase::Scenario::linear(agamma))) << "\n"
              << "rate_residual=" << gphase::format_g17(resid_rate) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"geometric phase of an accelerated two-level atom in a scalar vacuum"};
    app.set_config("--config", "", "plain key=value config file (command-line flags win)");
    app.require_subcommand(1);

    // ---- sweep ----
    auto* sweep = app.add_subcommand("sweep", "evaluate delta_tilde over a parameter grid, write CSV");
    std::string var = "accel";
    gphase::SweepSpec spec;
    std::string out_path = "sweep.csv";
    std::vector<std::string> scen_names{"linear", "circular"};
    std::vector<std::string> method_names{"perturbative"};
    double fixed_z = 0.0;
    sweep->add_option("--variable", var, "swept variable: accel | theta | z")
        ->check(CLI::IsMember({"accel", "theta", "z"}));
    sweep->add_option("--start", spec.start, "grid start")->required();
    sweep->add_option("--stop", spec.stop, "grid stop")->required();
    sweep->add_option("--count", spec.count, "number of grid points (>= 2)");
    sweep->add_option("--theta", spec.fixed_theta, "fixed theta (rad), ignored when swept");
    sweep->add_option("--accel", spec.fixed_accel, "fixed acceleration a/omega0, ignored when swept");
    sweep->add_option("--z", fixed_z, "mirror distance z*omega0 (0 = free space), ignored when swept");
    sweep->add_option("--scenario", scen_names, "scenarios: linear, circular, inertial");
    sweep->add_option("--method", method_names, "methods: perturbative, closed, quadrature");
    sweep->add_option("--gamma0", spec.gamma0_hat, "gamma0/omega0 used by exact methods");
    sweep->add_option("--omega-eff", spec.omega_eff_hat, "effective level spacing / omega0");
    sweep->add_option("--out", out_path, "output CSV path");

    // ---- figure ----
    auto* figure = app.add_subcommand("figure", "reproduce a built-in figure (CSV + SVG)");
    int fig_id = 1;
    std::string panel, out_dir = "figures";
    bool data_only = false;
    int points = 200;
    figure->add_option("--id", fig_id, "figure id, 1..6")->required()->check(CLI::Range(1, 6));
    figure->add_option("--panel", panel, "panel selector (default: all panels of the figure)");
    figure->add_option("--out-dir", out_dir, "output directory");
    figure->add_flag("--data-only", data_only, "emit CSV only, skip SVG plots");
    figure->add_option("--points", points, "grid points per curve")->check(CLI::Range(2, 100000));

    // ---- crossing ----
    app.add_subcommand("crossing", "report the accelerations where linear == circular");

    // ---- validate ----
    auto* validate = app.add_subcommand("validate", "run the self-consistency and oracle suite");
    std::string profile = "default";
    validate->add_option("--profile", profile, "tolerance profile")
        ->check(CLI::IsMember({"default", "strict"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sweep->parsed()) {
            const std::map<std::string, gphase::SweepVariable> vars{
                {"accel", gphase::SweepVariable::Accel},
                {"theta", gphase::SweepVariable::Theta},
                {"z", gphase::SweepVariable::Z}};
            spec.variable = vars.at(var);
            if (fixed_z > 0.0) spec.fixed_boundary = fixed_z;
            spec.scenarios.clear();
            for (const auto& s : scen_names) {
                if (s == "linear") spec.scenarios.push_back(gphase::TrajectoryKind::LinearAcceleration);
                else if (s == "circular") spec.scenarios.push_back(gphase::TrajectoryKind::CircularUltrarelativistic);
                else if (s == "inertial") spec.scenarios.push_back(gphase::TrajectoryKind::Inertial);
                else throw std::invalid_argument("unknown scenario: " + s);
            }
            spec.methods.clear();
            for (const auto& m : method_names) {
                if (m == "perturbative") spec.methods.push_back(gphase::PhaseMethod::Perturbative);
                else if (m == "closed") spec.methods.push_back(gphase::PhaseMethod::ClosedForm);
                else if (m == "quadrature") spec.methods.push_back(gphase::PhaseMethod::Quadrature);
                else throw std::invalid_argument("unknown method: " + m);
            }
            const gphase::AtomConfig atom{1.0, spec.gamma0_hat};
            if (!atom.weakly_coupled())
                std::cerr << "warning: gamma0 >= omega0; perturbative corrections are unreliable\n";
            return run_sweep_cmd(spec, out_path);
        }
        if (figure->parsed()) {
            const auto files = gphase::run_figure(fig_id, panel, out_dir, data_only, points);
            for (const auto& f : files.csv) std::cout << "wrote " << f << "\n";
            for (const auto& f : files.svg) std::cout << "wrote " << f << "\n";
            return 0;
        }
        if (app.get_subcommand("crossing")->parsed()) return run_crossing_cmd();
        if (validate->parsed()) {
            gphase::ValidateOptions opt;
            opt.strict = (profile == "strict");
            const auto results = gphase::run_validation(opt);
            gphase::print_report(std::cout, results);
            return gphase::all_passed(results) ? 0 : 1;
        }
    } catch (const gphase::out_of_scope_error& e) {
        std::cerr << "out of scope: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

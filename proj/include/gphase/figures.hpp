#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "gphase/dissipator.hpp"
#include "gphase/model.hpp"
#include "gphase/phase.hpp"
#include "gphase/svg.hpp"
#include "gphase/sweep.hpp"

namespace gphase {

// Request for a panel that belongs to the electromagnetic-field comparison:
// those curves come from Jin et al.'s electromagnetic-field results and are
// outside what this library computes.
struct out_of_scope_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FigureFiles {
    std::vector<std::string> csv;
    std::vector<std::string> svg;
};

namespace detail {

struct PanelDef {
    std::string name;  // CLI token, e.g. "left", "0.5", "2.69"
    std::string title;
    SweepSpec sweep;   // ignored for the rate figure
    bool rate = false; // figure 1: relative transition rate instead of delta_tilde
};

inline std::vector<PanelDef> figure_panels(int id) {
    auto theta_sweep = [](double accel, std::optional<double> z) {
        SweepSpec s;
        s.variable = SweepVariable::Theta;
        s.start = 0.05;
        s.stop = 3.09;
        s.fixed_accel = accel;
        s.fixed_boundary = z;
        return s;
    };
    auto accel_sweep = [](std::optional<double> z) {
        SweepSpec s;
        s.variable = SweepVariable::Accel;
        s.start = 0.5;
        s.stop = 7.0;
        s.fixed_boundary = z;
        return s;
    };
    std::vector<PanelDef> panels;
    switch (id) {
        case 1: {
            SweepSpec s;
            s.variable = SweepVariable::Accel;
            s.start = 0.5;
            s.stop = 20.0;
            PanelDef p{"left", "relative transition rate vs acceleration (scalar field)", s, true};
            panels.push_back(p);
            break;
        }
        case 2:
            panels.push_back({"left", "phase correction vs acceleration, theta = pi/4", accel_sweep({}), false});
            break;
        case 3: {
            const double astar = phase_crossing();
            panels.push_back({"2", "phase correction vs theta, a = 2", theta_sweep(2.0, {}), false});
            panels.push_back({"2.69", "phase correction vs theta, a = a* (crossing)", theta_sweep(astar, {}), false});
            panels.push_back({"5", "phase correction vs theta, a = 5", theta_sweep(5.0, {}), false});
            break;
        }
        case 4:
            for (const double z : {0.5, 10.0, 20.0})
                panels.push_back({format_g17(z).substr(0, 4),
                                  "phase correction vs acceleration, theta = pi/4, z = " + format_g17(z),
                                  accel_sweep(z), false});
            break;
        case 5:
            for (const double a : {0.5, 1.0, 10.0}) {
                SweepSpec s;
                s.variable = SweepVariable::Z;
                s.start = 0.1;
                s.stop = 40.0;
                s.fixed_accel = a;
                panels.push_back({format_g17(a).substr(0, 4),
                                  "phase correction vs mirror distance, theta = pi/4, a = " + format_g17(a),
                                  s, false});
            }
            break;
        case 6:
            for (const double z : {0.5, 10.0, 50.0})
                panels.push_back({format_g17(z).substr(0, 4),
                                  "phase correction vs theta, a = 2, z = " + format_g17(z),
                                  theta_sweep(2.0, z), false});
            break;
        default:
            throw std::invalid_argument("figure id must lie in 1..6");
    }
    return panels;
}

inline std::vector<SweepRow> rate_rows(const SweepSpec& spec) {
    std::vector<double> grid(spec.count);
    for (int i = 0; i < spec.count; ++i)
        grid[i] = spec.start + (spec.stop - spec.start) * static_cast<double>(i) / (spec.count - 1);
    std::vector<SweepRow> rows;
    rows.reserve(grid.size() * 2);
    for (const double a : grid) {
        rows.push_back({a, "linear", "rate", relative_rate(Scenario::linear(a))});
        rows.push_back({a, "circular", "rate", relative_rate(Scenario::circular(a))});
    }
    return rows;
}

} // namespace detail

inline std::vector<std::string> figure_panel_names(int id) {
    if (id == 1 || id == 2) return {"left", "right"};
    std::vector<std::string> names;
    for (const auto& p : detail::figure_panels(id)) names.push_back(p.name);
    return names;
}

// Emit CSV (+ SVG unless data_only) files for one figure, or for all its
// panels when `panel` is empty. Returns the written paths.
inline FigureFiles run_figure(int id, const std::string& panel, const std::string& out_dir,
                              bool data_only = false, int points = 200) {
    if (id < 1 || id > 6) throw std::invalid_argument("figure id must lie in 1..6");
    if ((id == 1 || id == 2) && panel == "right")
        throw out_of_scope_error(
            "figure " + std::to_string(id) +
            " right panel shows the electromagnetic-field comparison reproduced from Jin et al.; "
            "only the scalar-field panels are computed here");

    auto panels = detail::figure_panels(id);
    if (!panel.empty()) {
        std::erase_if(panels, [&](const auto& p) { return p.name != panel; });
        if (panels.empty())
            throw std::invalid_argument("unknown panel '" + panel + "' for figure " + std::to_string(id));
    }

    std::filesystem::create_directories(out_dir);
    FigureFiles files;
    for (auto& p : panels) {
        p.sweep.count = points;
        const auto rows = p.rate ? detail::rate_rows(p.sweep) : run_sweep(p.sweep);

        const std::string base = "fig" + std::to_string(id) + "_" + p.name;
        const std::string csv_path = out_dir + "/" + base + ".csv";
        {
            std::ofstream os(csv_path, std::ios::binary);
            if (!os) throw std::runtime_error("cannot write " + csv_path);
            write_csv(os, rows);
        }
        files.csv.push_back(csv_path);
        if (data_only) continue;

        svg::Series lin{"linear", {}, {}, "#c62828", false};
        svg::Series cir{"circular", {}, {}, "#1565c0", true};
        for (const auto& r : rows) {
            if (r.scenario == "linear") {
                lin.x.push_back(r.variable);
                lin.y.push_back(r.value);
            } else if (r.scenario == "circular") {
                cir.x.push_back(r.variable);
                cir.y.push_back(r.value);
            }
        }
        const std::string svg_path = out_dir + "/" + base + ".svg";
        {
            std::ofstream os(svg_path, std::ios::binary);
            if (!os) throw std::runtime_error("cannot write " + svg_path);
            const char* ylab = p.rate ? "relative transition rate" : "delta_tilde";
            const char* xlab = p.sweep.variable == SweepVariable::Theta
                                   ? "theta"
                                   : (p.sweep.variable == SweepVariable::Z ? "z" : "a");
            svg::write_line_plot(os, p.title, xlab, ylab, {lin, cir});
        }
        files.svg.push_back(svg_path);
    }
    return files;
}

} // namespace gphase

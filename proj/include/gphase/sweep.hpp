#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "gphase/dissipator.hpp"
#include "gphase/model.hpp"
#include "gphase/phase.hpp"

namespace gphase {

enum class SweepVariable { Accel, Theta, Z };

inline const char* to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::Accel: return "accel";
        case SweepVariable::Theta: return "theta";
        case SweepVariable::Z: return "z";
    }
    return "?";
}

// Parameter sweep producing delta_tilde per grid point, scenario and method.
// The non-swept parameters are frozen at the `fixed_*` values. Exact methods
// (quadrature/closed form) evaluate the phase at gamma0_hat and subtract the
// matched inertial phase computed the same way.
struct SweepSpec {
    SweepVariable variable = SweepVariable::Accel;
    double start = 0.5;
    double stop = 7.0;
    int count = 200;

    double fixed_theta = kPi / 4.0;
    double fixed_accel = 1.0;
    std::optional<double> fixed_boundary{};

    std::vector<TrajectoryKind> scenarios{TrajectoryKind::LinearAcceleration,
                                          TrajectoryKind::CircularUltrarelativistic};
    std::vector<PhaseMethod> methods{PhaseMethod::Perturbative};

    double gamma0_hat = 1e-3;
    double omega_eff_hat = 1.0;

    void validate() const {
        detail::require(count >= 2, "SweepSpec: count must be >= 2");
        detail::require(std::isfinite(start) && std::isfinite(stop) && start < stop,
                        "SweepSpec: need start < stop");
        detail::require(!scenarios.empty() && !methods.empty(),
                        "SweepSpec: scenarios and methods must be non-empty");
        detail::require(gamma0_hat > 0.0 && gamma0_hat < 1.0, "SweepSpec: gamma0_hat in (0,1)");
        detail::require(omega_eff_hat > 0.0, "SweepSpec: omega_eff_hat > 0");
        if (variable != SweepVariable::Theta)
            InitialState{fixed_theta}.validate();
        if (variable != SweepVariable::Z && fixed_boundary)
            detail::require(*fixed_boundary > 0.0, "SweepSpec: fixed boundary must be > 0");
        if (variable == SweepVariable::Theta) {
            detail::require(start >= 0.0 && stop <= kPi, "SweepSpec: theta range within [0, pi]");
        } else {
            detail::require(start > 0.0, "SweepSpec: accel/z grids must start above 0");
        }
    }
};

struct SweepRow {
    double variable = 0.0;
    std::string scenario;
    std::string method;
    double value = 0.0;
};

namespace detail {

inline double sweep_value(const SweepSpec& spec, TrajectoryKind kind, PhaseMethod method, double v) {
    const double theta = (spec.variable == SweepVariable::Theta) ? v : spec.fixed_theta;
    const double accel = (spec.variable == SweepVariable::Accel) ? v : spec.fixed_accel;
    std::optional<double> z =
        (spec.variable == SweepVariable::Z) ? std::optional<double>(v) : spec.fixed_boundary;

    Scenario sc{kind, kind == TrajectoryKind::Inertial ? 0.0 : accel, z};
    const InitialState state{theta};
    if (method == PhaseMethod::Perturbative)
        return sc.accelerated() ? delta_perturbative(sc, state) : 0.0;

    AtomConfig atom{1.0, spec.gamma0_hat, spec.omega_eff_hat};
    const KossakowskiPair k = kossakowski(atom, sc);
    const PhaseResult r = (method == PhaseMethod::Quadrature)
                              ? phase_quadrature(k, state, spec.omega_eff_hat)
                              : phase_closed(k, state, spec.omega_eff_hat);
    return r.delta_tilde;
}

// Chunked thread pool over grid indices; each slot is written exactly once,
// so the row order is independent of scheduling.
template <class Fn>
inline void parallel_for(std::size_t n, Fn&& fn) {
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(hw, n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace detail

// Grid evaluation; rows ordered variable-major, scenario-minor, method last.
inline std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    std::vector<double> grid(spec.count);
    for (int i = 0; i < spec.count; ++i)
        grid[i] = spec.start + (spec.stop - spec.start) * static_cast<double>(i) / (spec.count - 1);

    const std::size_t per_point = spec.scenarios.size() * spec.methods.size();
    std::vector<SweepRow> rows(grid.size() * per_point);
    detail::parallel_for(rows.size(), [&](std::size_t idx) {
        const std::size_t gi = idx / per_point;
        const std::size_t si = (idx % per_point) / spec.methods.size();
        const std::size_t mi = idx % spec.methods.size();
        rows[idx] = {grid[gi], to_string(spec.scenarios[si]), to_string(spec.methods[mi]),
                     detail::sweep_value(spec, spec.scenarios[si], spec.methods[mi], grid[gi])};
    });
    return rows;
}

// 17 significant digits; enough to round-trip an IEEE double.
inline std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "variable,scenario,method,value\n";
    for (const auto& r : rows)
        os << format_g17(r.variable) << ',' << r.scenario << ',' << r.method << ','
           << format_g17(r.value) << '\n';
}

} // namespace gphase

#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace gphase {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kSqrt3 = 1.732050807568877293527446341505872367;

namespace detail {
inline void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
}
inline bool finite(double x) { return std::isfinite(x); }
} // namespace detail

// Two-level atom parameters. omega0 is the level spacing and sets the unit
// scale: every dimensionless quantity below is measured in units of omega0.
// gamma0 is the spontaneous emission rate (the coupling mu enters only
// through it, mu^2 = 2 pi gamma0 / omega0). omega_eff is the effective level
// spacing once the Lamb shift is absorbed; it defaults to omega0.
struct AtomConfig {
    double omega0 = 1.0;
    double gamma0 = 1e-3;
    std::optional<double> omega_eff{};

    double effective() const { return omega_eff.value_or(omega0); }
    double gamma0_hat() const { return gamma0 / omega0; }
    double omega_eff_hat() const { return effective() / omega0; }

    // Perturbative phase corrections assume gamma0 << omega0.
    bool weakly_coupled() const { return gamma0 / omega0 < 1.0; }

    void validate() const {
        detail::require(detail::finite(omega0) && omega0 > 0.0, "AtomConfig: omega0 must be finite and > 0");
        detail::require(detail::finite(gamma0) && gamma0 > 0.0, "AtomConfig: gamma0 must be finite and > 0");
        if (omega_eff)
            detail::require(detail::finite(*omega_eff) && *omega_eff > 0.0,
                            "AtomConfig: omega_eff must be finite and > 0");
    }
};

enum class TrajectoryKind { Inertial, LinearAcceleration, CircularUltrarelativistic };

inline const char* to_string(TrajectoryKind k) {
    switch (k) {
        case TrajectoryKind::Inertial: return "inertial";
        case TrajectoryKind::LinearAcceleration: return "linear";
        case TrajectoryKind::CircularUltrarelativistic: return "circular";
    }
    return "?";
}

// Trajectory described in the caller's units: accel in the same units as
// omega0, boundary distance in inverse units. Use normalize() to convert.
struct RawScenario {
    TrajectoryKind kind = TrajectoryKind::Inertial;
    double accel = 0.0;
    std::optional<double> boundary{};
};

// Trajectory in atom units: accel = a/omega0, boundary = z*omega0. This is
// the form every correlator/dissipator/phase routine expects.
struct Scenario {
    TrajectoryKind kind = TrajectoryKind::Inertial;
    double accel = 0.0;               // a / omega0
    std::optional<double> boundary{}; // z * omega0

    static Scenario inertial(std::optional<double> z = {}) { return {TrajectoryKind::Inertial, 0.0, z}; }
    static Scenario linear(double a, std::optional<double> z = {}) {
        return {TrajectoryKind::LinearAcceleration, a, z};
    }
    static Scenario circular(double a, std::optional<double> z = {}) {
        return {TrajectoryKind::CircularUltrarelativistic, a, z};
    }

    bool accelerated() const { return kind != TrajectoryKind::Inertial; }

    void validate() const {
        detail::require(detail::finite(accel) && accel >= 0.0, "Scenario: accel must be finite and >= 0");
        if (accelerated())
            detail::require(accel > 0.0, "Scenario: accel must be > 0 for accelerated trajectories");
        else
            detail::require(accel == 0.0, "Scenario: accel must be 0 for the inertial trajectory");
        if (boundary)
            detail::require(detail::finite(*boundary) && *boundary > 0.0,
                            "Scenario: boundary distance must be finite and > 0");
    }
};

// Convert a trajectory to atom units (a -> a/omega0, z -> z*omega0).
inline Scenario normalize(const AtomConfig& atom, const RawScenario& raw) {
    atom.validate();
    Scenario s{raw.kind, raw.kind == TrajectoryKind::Inertial ? 0.0 : raw.accel / atom.omega0, {}};
    if (raw.boundary) s.boundary = *raw.boundary * atom.omega0;
    s.validate();
    return s;
}

// Already-normalized input passes through unchanged (validated), so
// normalize(normalize(x)) == normalize(x).
inline Scenario normalize(const AtomConfig& atom, const Scenario& s) {
    atom.validate();
    s.validate();
    return s;
}

inline RawScenario denormalize(const AtomConfig& atom, const Scenario& s) {
    atom.validate();
    s.validate();
    RawScenario raw{s.kind, s.accel * atom.omega0, {}};
    if (s.boundary) raw.boundary = *s.boundary / atom.omega0;
    return raw;
}

// Initial Bloch vector polar angle of |psi(0)> = cos(theta/2)|+> + sin(theta/2)|->.
struct InitialState {
    double theta = kPi / 2.0;

    void validate() const {
        detail::require(detail::finite(theta) && theta >= 0.0 && theta <= kPi,
                        "InitialState: theta must lie in [0, pi]");
    }
};

// Divisor turning a phase correction delta (radians) into the dimensionless
// delta_tilde: pi^2 gamma0 / (2 omega0), expressed with gamma0 in omega0 units.
inline double delta_scale(double gamma0_hat) { return kPi * kPi * gamma0_hat / 2.0; }

} // namespace gphase

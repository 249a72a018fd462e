#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <string>

#include "gphase/correlators.hpp"
#include "gphase/dissipator.hpp"
#include "gphase/errors.hpp"
#include "gphase/model.hpp"
#include "gphase/numerics/bisection.hpp"
#include "gphase/numerics/gauss_kronrod.hpp"

namespace gphase {

enum class PhaseMethod { Quadrature, ClosedForm, Perturbative };

inline const char* to_string(PhaseMethod m) {
    switch (m) {
        case PhaseMethod::Quadrature: return "quadrature";
        case PhaseMethod::ClosedForm: return "closed";
        case PhaseMethod::Perturbative: return "perturbative";
    }
    return "?";
}

// Geometric phase over one quasi-period T = 2 pi / omega_eff, together with
// the matched inertial baseline (same gamma0 and boundary distance, zero
// acceleration) and the correction delta = gamma_total - gamma_inertial.
// delta_tilde = delta / (pi^2 gamma0 / (2 omega0)).
struct PhaseResult {
    double gamma_total = 0.0;
    double gamma_inertial = 0.0;
    double delta = 0.0;
    double delta_tilde = 0.0;
    PhaseMethod method = PhaseMethod::ClosedForm;
    std::string note{};
};

namespace detail {

// Mixing-angle weight appearing in the phase integrand:
// cos^2(theta_tau/2) = (1 - rho3/eta)/2, written in the e^{+4A tau} form.
inline double integrand_bracket(double E_plus, double R, double costh, double sin2th) {
    const double num = R - R * E_plus + costh;
    const double den = std::sqrt(E_plus * sin2th + num * num);
    return 0.5 * (1.0 - num / den);
}

// Unitary (A = B = 0) geometric phase for one period.
inline double unitary_phase(double theta) { return -kPi * (1.0 - std::cos(theta)); }

// Exact phase for sin(theta) = 0: the integrand is 0 while rho3 > 0 and 1
// while rho3 < 0, and rho3 crosses zero at most once (downward).
inline double polar_phase(double A, double R, double costh, double omega_eff) {
    const double T = 2.0 * kPi / omega_eff;
    if (costh > 0.0) { // theta = 0: rho3 = E(1+R) - R
        if (A <= 0.0 || R <= 0.0) return 0.0;
        const double t_cross = std::log((1.0 + R) / R) / (4.0 * A);
        return -omega_eff * std::max(0.0, T - t_cross);
    }
    return -omega_eff * T; // theta = pi: rho3 < 0 throughout
}

// Antiderivative of -(1/2)(1 - (R - R e^{k phi} + cos th)/S(phi)) with
// k = 4A/omega0 and S(phi) = sqrt(R^2 e^{2k phi} + (1-Q^2-R^2) e^{k phi} + Q^2),
// Q = R + cos(theta). The sgn(Q) term carries a vanishing coefficient at
// Q = 0 and is dropped there (continuous limit). Valid for R > 0.
inline double antiderivative_F(double phi, double A, double R, double Q) {
    const double k = 4.0 * A;
    const double P = 1.0 - Q * Q - R * R;
    const double E = std::exp(k * phi);
    const double S = std::sqrt(R * R * E * E + P * E + Q * Q);
    double F = -0.5 * phi - (1.0 / (2.0 * k)) * std::log((P + 2.0 * R * R * E) / (2.0 * R) + S);
    if (Q != 0.0) {
        const double sgn = (Q > 0.0) ? 1.0 : -1.0;
        F -= (sgn / (2.0 * k)) * std::log(P + 2.0 * Q * Q / E + 2.0 * std::abs(Q) * S / E);
    }
    return F;
}

} // namespace detail

// Geometric phase by adaptive quadrature of the exact mixed-state integrand,
// absolute tolerance 1e-10. A and B in omega0 units, omega_eff = Omega/omega0.
inline double phase_gamma_quadrature(double A, double B, double theta, double omega_eff = 1.0) {
    detail::require(std::isfinite(A) && A >= 0.0, "phase: A must be >= 0");
    detail::require(std::abs(B) <= A * (1.0 + 1e-12) + 1e-300, "phase: |B| <= A required");
    detail::require(omega_eff > 0.0, "phase: omega_eff must be > 0");
    const double costh = std::cos(theta);
    const double sinth = std::sin(theta);
    if (A == 0.0) return detail::unitary_phase(theta);
    const double R = B / A;
    if (std::abs(sinth) < 1e-15) return detail::polar_phase(A, R, costh, omega_eff);

    const double sin2th = sinth * sinth;
    // substitute u = omega_eff * tau; one period is u in [0, 2 pi]
    auto f = [&](double u) {
        const double E = std::exp(4.0 * A * u / omega_eff);
        return detail::integrand_bracket(E, R, costh, sin2th);
    };
    numerics::QuadratureOptions opt;
    opt.abs_tol = 1e-11;
    const auto q = numerics::integrate_adaptive<double>(f, 0.0, 2.0 * kPi, {}, opt);
    return -q.value;
}

// Geometric phase from the closed-form antiderivative,
// gamma = (Omega/omega0)[F(2 pi) - F(0)]. R = 0 has no closed form here and
// falls back to quadrature (note set accordingly).
inline double phase_gamma_closed(double A, double B, double theta, double omega_eff = 1.0,
                                 std::string* note = nullptr) {
    detail::require(std::isfinite(A) && A >= 0.0, "phase: A must be >= 0");
    detail::require(std::abs(B) <= A * (1.0 + 1e-12) + 1e-300, "phase: |B| <= A required");
    detail::require(omega_eff > 0.0, "phase: omega_eff must be > 0");
    if (A == 0.0) return detail::unitary_phase(theta);
    const double R = B / A;
    if (R <= 1e-12) {
        if (note) *note = "R = B/A vanished; evaluated by quadrature fallback";
        return phase_gamma_quadrature(A, B, theta, omega_eff);
    }
    const double costh = std::cos(theta);
    if (std::abs(std::sin(theta)) < 1e-15) return detail::polar_phase(A, R, costh, omega_eff);
    double Q = R + costh;
    if (std::abs(Q) < 1e-14) Q = 0.0; // drop the sgn(Q) term in its continuous limit
    return omega_eff * (detail::antiderivative_F(2.0 * kPi, A, R, Q) -
                        detail::antiderivative_F(0.0, A, R, Q));
}

namespace detail {

// Matched inertial pair: same gamma0, same mirror distance, a -> 0.
inline KossakowskiPair matched_inertial(const KossakowskiPair& k) {
    const double f = k.boundary ? one_minus_sinc(2.0 * *k.boundary) : 1.0;
    return {k.gamma0 / 4.0 * f, k.gamma0 / 4.0 * f, k.gamma0, k.boundary};
}

inline PhaseResult assemble_result(double gamma, double gamma_inertial, PhaseMethod m,
                                   double gamma0, std::string note) {
    PhaseResult r;
    r.gamma_total = gamma;
    r.gamma_inertial = gamma_inertial;
    r.delta = gamma - gamma_inertial;
    r.delta_tilde = (gamma0 > 0.0) ? r.delta / delta_scale(gamma0)
                                   : std::numeric_limits<double>::quiet_NaN();
    r.method = m;
    r.note = std::move(note);
    return r;
}

} // namespace detail

inline PhaseResult phase_quadrature(const KossakowskiPair& k, const InitialState& state,
                                    double omega_eff = 1.0) {
    state.validate();
    const double g = phase_gamma_quadrature(k.a_coeff, k.b_coeff, state.theta, omega_eff);
    const auto ki = detail::matched_inertial(k);
    const double gi = phase_gamma_quadrature(ki.a_coeff, ki.b_coeff, state.theta, omega_eff);
    return detail::assemble_result(g, gi, PhaseMethod::Quadrature, k.gamma0, {});
}

inline PhaseResult phase_closed(const KossakowskiPair& k, const InitialState& state,
                                double omega_eff = 1.0) {
    state.validate();
    std::string note;
    const double g = phase_gamma_closed(k.a_coeff, k.b_coeff, state.theta, omega_eff, &note);
    const auto ki = detail::matched_inertial(k);
    const double gi = phase_gamma_closed(ki.a_coeff, ki.b_coeff, state.theta, omega_eff);
    return detail::assemble_result(g, gi, PhaseMethod::ClosedForm, k.gamma0, std::move(note));
}

// First-order inertial phase: -pi(1-cos th) - pi^2 (gamma0/2) sin^2 th (2+cos th),
// with the correction damped by [1 - sin(2z)/(2z)] near a mirror.
inline double inertial_baseline(const AtomConfig& atom, const InitialState& state,
                                std::optional<double> boundary = {}) {
    atom.validate();
    state.validate();
    if (boundary) detail::require(*boundary > 0.0, "inertial_baseline: boundary must be > 0");
    const double th = state.theta;
    const double f = boundary ? one_minus_sinc(2.0 * *boundary) : 1.0;
    const double s2 = std::sin(th) * std::sin(th);
    return -kPi * (1.0 - std::cos(th)) -
           kPi * kPi * (atom.gamma0_hat() / 2.0) * s2 * (2.0 + std::cos(th)) * f;
}

// Dimensionless first-order phase correction delta_tilde acquired purely due
// to the acceleration, for each accelerated scenario.
inline double delta_perturbative(const Scenario& sc, const InitialState& state) {
    sc.validate();
    state.validate();
    detail::require(sc.accelerated(), "delta_perturbative: inertial scenario has no correction");
    const double th = state.theta;
    const double c = std::cos(th);
    const double s2 = std::sin(th) * std::sin(th);
    const double a = sc.accel;

    if (!sc.boundary) {
        if (sc.kind == TrajectoryKind::LinearAcceleration)
            return -(2.0 / std::expm1(2.0 * kPi / a)) * s2 * c;
        return -(a / (2.0 * kSqrt3)) * std::exp(-2.0 * kSqrt3 / a) * s2 * c;
    }

    const double z = *sc.boundary;
    const double f_i = one_minus_sinc(2.0 * z);
    if (sc.kind == TrajectoryKind::LinearAcceleration) {
        const double f_b = detail::boundary_factor_linear(a, z, 1.0);
        const double coth = 1.0 + 2.0 / std::expm1(2.0 * kPi / a);
        return -s2 * ((2.0 + c * coth) * f_b - (2.0 + c) * f_i);
    }
    // circular with mirror: the image subtracts oscillatory (sigma) and
    // evanescent (kappa) pieces from the free-space response
    const auto im = detail::circular_image(a, z);
    const double x2 = (a / (2.0 * kSqrt3)) * std::exp(-2.0 * kSqrt3 / a); // 2x
    const double sigma = (3.0 / im.U) * sinc(im.s);
    const double kappa = (3.0 / im.U) * std::exp(-im.q) / im.q;
    return -s2 * (x2 * c - sigma * (2.0 + c) - kappa * c + (2.0 + c) * sinc(2.0 * z));
}

// Acceleration at which the linear and circular free-space phase corrections
// coincide for every initial state (both are proportional to sin^2 th cos th,
// so the crossing is theta-independent). Bisection on [1, 10].
inline double phase_crossing() {
    auto diff = [](double a) {
        return 2.0 / std::expm1(2.0 * kPi / a) - (a / (2.0 * kSqrt3)) * std::exp(-2.0 * kSqrt3 / a);
    };
    const double a = numerics::bisect(diff, 1.0, 10.0, 1e-16, 300);
    if (std::abs(diff(a)) > 1e-12)
        throw convergence_error("phase_crossing: residual above 1e-12");
    return a;
}

} // namespace gphase

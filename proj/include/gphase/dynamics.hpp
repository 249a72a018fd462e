#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "gphase/dissipator.hpp"
#include "gphase/errors.hpp"
#include "gphase/model.hpp"
#include "gphase/numerics/runge_kutta.hpp"

namespace gphase {

using complexd = std::complex<double>;

// Reduced density matrix of the two-level atom in the {|+>, |->} basis.
struct Qubit2x2 {
    complexd m00{}, m01{}, m10{}, m11{};

    complexd trace() const { return m00 + m11; }
    double purity() const { return std::real(m00 * m00 + m01 * m10 + m10 * m01 + m11 * m11); }
    double hermiticity_defect() const {
        return std::max({std::abs(m01 - std::conj(m10)), std::abs(std::imag(m00)),
                         std::abs(std::imag(m11))});
    }
    // Eigenvalues of the Hermitian part, ascending.
    std::pair<double, double> eigenvalues() const {
        const double tr = std::real(trace());
        const double d = std::real(m00 - m11);
        const double disc = std::sqrt(d * d + 4.0 * std::norm(m01));
        return {(tr - disc) / 2.0, (tr + disc) / 2.0};
    }

    Qubit2x2 operator+(const Qubit2x2& o) const { return {m00 + o.m00, m01 + o.m01, m10 + o.m10, m11 + o.m11}; }
    Qubit2x2 operator-(const Qubit2x2& o) const { return {m00 - o.m00, m01 - o.m01, m10 - o.m10, m11 - o.m11}; }
    Qubit2x2 operator*(const Qubit2x2& o) const {
        return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
                m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
    }
    friend Qubit2x2 operator*(const complexd& c, const Qubit2x2& m) {
        return {c * m.m00, c * m.m01, c * m.m10, c * m.m11};
    }
    double max_abs_diff(const Qubit2x2& o) const {
        return std::max({std::abs(m00 - o.m00), std::abs(m01 - o.m01), std::abs(m10 - o.m10),
                         std::abs(m11 - o.m11)});
    }
};

namespace pauli {
inline const Qubit2x2 s1{0.0, 1.0, 1.0, 0.0};
inline const Qubit2x2 s2{0.0, complexd(0.0, -1.0), complexd(0.0, 1.0), 0.0};
inline const Qubit2x2 s3{1.0, 0.0, 0.0, -1.0};
inline const Qubit2x2 id{1.0, 0.0, 0.0, 1.0};
} // namespace pauli

namespace detail {
inline void validate_pair(const KossakowskiPair& k) {
    require(std::isfinite(k.a_coeff) && std::isfinite(k.b_coeff), "KossakowskiPair: non-finite coefficients");
    require(k.a_coeff >= 0.0, "KossakowskiPair: A must be >= 0");
    require(std::abs(k.b_coeff) <= k.a_coeff * (1.0 + 1e-12) + 1e-300,
            "KossakowskiPair: |B| <= A required (complete positivity)");
}
} // namespace detail

// Closed-form rho(tau) for initial state cos(th/2)|+> + sin(th/2)|->:
// diagonal relaxation at rate 4A toward rho11 = (A-B)/(2A), coherence decay
// at 2A with precession at omega_eff.
inline Qubit2x2 rho_closed(double tau, const KossakowskiPair& k, const InitialState& state,
                           double omega_eff = 1.0) {
    detail::require(std::isfinite(tau) && tau >= 0.0, "rho_closed: tau must be >= 0");
    detail::validate_pair(k);
    state.validate();
    const double A = k.a_coeff, B = k.b_coeff, th = state.theta;
    const double c2 = std::cos(th / 2.0) * std::cos(th / 2.0);
    const double E = std::exp(-4.0 * A * tau);
    // A = 0 forces B = 0 (complete positivity): unitary limit.
    const double r11 = (A > 0.0) ? E * c2 + (B - A) / (2.0 * A) * (E - 1.0) : c2;
    const complexd off = 0.5 * std::exp(complexd(-2.0 * A * tau, -omega_eff * tau)) * std::sin(th);
    return {r11, off, std::conj(off), 1.0 - r11};
}

// Eigen-decomposition bookkeeping of the closed-form state.
struct EigenTrack {
    double lambda_plus = 0.0;
    double lambda_minus = 0.0;
    double theta_tau = 0.0; // mixing angle of the lambda_+ eigenvector
    double eta = 0.0;
    double rho3 = 0.0;
};

// rho3(tau) = e^{-4A tau} cos(th) + (B/A)(e^{-4A tau} - 1); this is
// rho11 - rho22 of the closed form (the (B-A)/(2A) bookkeeping in rho11
// collapses to the B/A ratio once the difference is taken).
inline EigenTrack eigen_track(const KossakowskiPair& k, const InitialState& state, double tau) {
    detail::require(std::isfinite(tau) && tau >= 0.0, "eigen_track: tau must be >= 0");
    detail::validate_pair(k);
    state.validate();
    const double A = k.a_coeff, th = state.theta;
    const double E = std::exp(-4.0 * A * tau);
    const double rho3 = (A > 0.0) ? E * std::cos(th) + k.r() * (E - 1.0) : std::cos(th);
    const double s2 = std::sin(th) * std::sin(th);
    const double eta = std::sqrt(rho3 * rho3 + E * s2);

    EigenTrack t;
    t.rho3 = rho3;
    t.eta = eta;
    t.lambda_plus = 0.5 * (1.0 + eta);
    t.lambda_minus = 0.5 * (1.0 - eta);
    if (std::abs(std::sin(th)) < 1e-15) {
        // tan(theta_tau/2) = sqrt((eta+rho3)/(eta-rho3)) degenerates at
        // sin(th) = 0; eta = |rho3| picks pi for rho3 > 0 and 0 for rho3 < 0,
        // with the rho3 = 0 instant taken from the left (decreasing rho3).
        t.theta_tau = (rho3 >= 0.0) ? kPi : 0.0;
    } else {
        t.theta_tau = 2.0 * std::atan2(std::sqrt(std::max(0.0, eta + rho3)),
                                       std::sqrt(std::max(0.0, eta - rho3)));
    }
    return t;
}

// d(rho)/d(tau) = -i[H_eff, rho] + L[rho] with the dissipator assembled from
// the full Kossakowski matrix a_ij = A d_ij - i B eps_ij3 - A d_i3 d_j3:
//   L[rho] = 1/2 sum_ij a_ij (2 s_j rho s_i - s_i s_j rho - rho s_i s_j).
inline Qubit2x2 lindblad_rhs(const Qubit2x2& rho, double A, double B, double omega_eff) {
    using namespace pauli;
    const complexd i(0.0, 1.0);
    const Qubit2x2 sigma[3] = {s1, s2, s3};
    complexd a[3][3] = {{A, -i * B, 0.0}, {i * B, A, 0.0}, {0.0, 0.0, 0.0}};

    const Qubit2x2 H = complexd(omega_eff / 2.0) * s3;
    Qubit2x2 d = complexd(-i) * (H * rho - rho * H);
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) {
            if (a[p][q] == complexd(0.0)) continue;
            const Qubit2x2 term = complexd(2.0) * (sigma[q] * rho * sigma[p]) -
                                  sigma[p] * sigma[q] * rho - rho * (sigma[p] * sigma[q]);
            d = d + complexd(0.5) * a[p][q] * term;
        }
    return d;
}

struct OdeSample {
    double tau = 0.0;
    Qubit2x2 rho{};
};

// Adaptive Cash-Karp integration of the master equation on the four real
// Bloch-affine components (r0, rx, ry, rz); r0 = tr(rho) is evolved, not
// renormalized, so trace conservation is a property of the generator.
// tol must lie in [1e-12, 1e-6]. Samples are returned at every accepted step.
inline std::vector<OdeSample> lindblad_ode(const KossakowskiPair& k, const InitialState& state,
                                           double omega_eff, double t_end, double tol) {
    detail::require(tol >= 1e-12 && tol <= 1e-6, "lindblad_ode: tol must lie in [1e-12, 1e-6]");
    detail::require(std::isfinite(t_end) && t_end > 0.0, "lindblad_ode: t_end must be > 0");
    detail::validate_pair(k);
    state.validate();

    auto unpack = [](const std::array<double, 4>& r) {
        return Qubit2x2{complexd((r[0] + r[3]) / 2.0), complexd(r[1] / 2.0, -r[2] / 2.0),
                        complexd(r[1] / 2.0, r[2] / 2.0), complexd((r[0] - r[3]) / 2.0)};
    };

    auto rhs = [&](double, const std::array<double, 4>& r, std::array<double, 4>& dr) {
        const Qubit2x2 d = lindblad_rhs(unpack(r), k.a_coeff, k.b_coeff, omega_eff);
        dr = {std::real(d.trace()), std::real(d.m01 + d.m10),
              std::real(complexd(0.0, 1.0) * (d.m01 - d.m10)), std::real(d.m00 - d.m11)};
    };

    const double th = state.theta;
    std::array<double, 4> y{1.0, std::sin(th), 0.0, std::cos(th)};
    std::vector<OdeSample> out;
    numerics::OdeOptions opt;
    opt.tol = tol;
    numerics::integrate_cash_karp<4>(rhs, y, 0.0, t_end, opt,
                                     [&](double t, const std::array<double, 4>& s) {
                                         out.push_back({t, unpack(s)});
                                     });
    return out;
}

} // namespace gphase

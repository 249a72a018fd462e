#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <span>
#include <vector>

#include "gphase/errors.hpp"
#include "gphase/model.hpp"
#include "gphase/numerics/extrapolation.hpp"
#include "gphase/numerics/gauss_kronrod.hpp"

namespace gphase {

// sin(x)/x, series below |x| = 1e-4
inline double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
    }
    return std::sin(x) / x;
}

// 1 - sin(x)/x without cancellation near x = 0
inline double one_minus_sinc(double x) {
    if (std::abs(x) < 1e-2) {
        const double x2 = x * x;
        return x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0 * (1.0 - x2 / 72.0)));
    }
    return 1.0 - std::sin(x) / x;
}

// Field response at frequency +lambda and -lambda (mu^2 excluded; the
// coupling enters only when the Kossakowski coefficients are assembled).
struct ResponsePair {
    double g_plus = 0.0;
    double g_minus = 0.0;
};

// One regulated sample of the two-point function.
struct WightmanSample {
    double dtau = 0.0;
    double epsilon = 0.0;
    std::complex<double> value{};
};

namespace detail {

inline constexpr double kInv4Pi2 = 1.0 / (4.0 * kPi * kPi);
inline constexpr double kPoleGuard = 1e-12;

// Mirror-image quantities for the ultrarelativistic circular trajectory at
// distance z from the plane. The image denominator factors into a pair of
// real zeros +-s and imaginary ones +-iq with
//   s = sqrt(2U-6)/a,  q = sqrt(2U+6)/a,  U = sqrt(9+12 a^2 z^2).
// U-3 is evaluated as 12(az)^2/(U+3): the small-a*z limit is a removable
// 0/0 in the naive form.
struct CircularImage {
    double U, V, s, q;
};

inline CircularImage circular_image(double a, double z) {
    const double w = a * a * z * z;
    const double U = std::sqrt(9.0 + 12.0 * w);
    CircularImage im;
    im.U = U;
    im.V = U / kSqrt3; // = sqrt(3 + 4 a^2 z^2)
    im.s = 2.0 * z * std::sqrt(6.0 / (U + 3.0));
    im.q = std::sqrt(2.0 * U + 6.0) / a;
    return im;
}

// {1 - sin[(2 lam/a) asinh(az)] / (2 z lam sqrt(1+a^2 z^2))}; even in lam.
// At a = 0 this is the static-mirror factor 1 - sinc(2 lam z).
inline double boundary_factor_linear(double a, double z, double lam) {
    if (a == 0.0) return one_minus_sinc(2.0 * lam * z);
    const double az = a * z;
    const double X = (2.0 * lam / a) * std::asinh(az);
    const double ratio = std::asinh(az) / (az * std::sqrt(1.0 + az * az));
    return 1.0 - sinc(X) * ratio;
}

// lam/(2 pi (1 - e^{-2 pi lam/a})), written via expm1 so that both signs of
// lam stay accurate for small a.
inline double thermal_response_linear(double a, double lam) {
    if (lam > 0.0) return (lam / (2.0 * kPi)) / (-std::expm1(-2.0 * kPi * lam / a));
    return (-lam / (2.0 * kPi)) / std::expm1(-2.0 * kPi * lam / a);
}

// Free-space ultrarelativistic circular response at lam = +-1 (units of
// omega0). sqrt3 is injectable so the self-check suite can corrupt the
// constant and prove the quadrature oracle notices.
inline double circular_free_response(double a, double lam, double sqrt3 = kSqrt3) {
    const double x = (a / (4.0 * sqrt3)) * std::exp(-2.0 * sqrt3 / a);
    return (lam > 0.0) ? (1.0 + x) / (2.0 * kPi) : x / (2.0 * kPi);
}

inline void check_pole(const std::complex<double>& den) {
    if (std::abs(den) < kPoleGuard)
        throw pole_proximity_error("wightman: denominator within 1e-12 of a pole; increase epsilon");
}

} // namespace detail

// Vacuum two-point function G+(dtau) along the trajectory, regulator
// epsilon > 0, with the mirror-image term added when a boundary is present.
// dtau in 1/omega0 units, value in omega0^2 units.
inline std::complex<double> wightman(const Scenario& sc, double dtau, double epsilon) {
    detail::require(std::isfinite(dtau), "wightman: dtau must be finite");
    detail::require(std::isfinite(epsilon) && epsilon > 0.0, "wightman: epsilon must be > 0");
    sc.validate();
    const std::complex<double> i(0.0, 1.0);
    std::complex<double> g;
    switch (sc.kind) {
        case TrajectoryKind::Inertial: {
            const std::complex<double> u = dtau - i * epsilon;
            const std::complex<double> den = u * u;
            detail::check_pole(den);
            g = -detail::kInv4Pi2 / den;
            if (sc.boundary) {
                const double z = *sc.boundary;
                const std::complex<double> den_b = u * u - 4.0 * z * z;
                detail::check_pole(den_b);
                g += detail::kInv4Pi2 / den_b;
            }
            break;
        }
        case TrajectoryKind::LinearAcceleration: {
            const double a = sc.accel;
            const std::complex<double> sh = std::sinh(a * dtau / 2.0 - i * epsilon);
            const std::complex<double> den = sh * sh;
            detail::check_pole(den);
            const double pref = a * a / (16.0 * kPi * kPi);
            g = -pref / den;
            if (sc.boundary) {
                const double z = *sc.boundary;
                const std::complex<double> den_b = sh * sh - a * a * z * z;
                detail::check_pole(den_b);
                g += pref / den_b;
            }
            break;
        }
        case TrajectoryKind::CircularUltrarelativistic: {
            const double a = sc.accel;
            const std::complex<double> u = dtau - i * epsilon;
            const std::complex<double> u2 = u * u;
            const std::complex<double> den = u2 * (1.0 + a * a * u2 / 12.0);
            detail::check_pole(den);
            g = -detail::kInv4Pi2 / den;
            if (sc.boundary) {
                const double z = *sc.boundary;
                const std::complex<double> den_b = 4.0 * z * z - u2 - a * a * u2 * u2 / 12.0;
                detail::check_pole(den_b);
                g += -detail::kInv4Pi2 / den_b;
            }
            break;
        }
    }
    return g;
}

// Closed-form response function G(lambda) (Fourier transform of the Wightman
// function in proper time; mu^2 excluded). Any non-zero lambda is allowed on
// inertial/linear trajectories; the ultrarelativistic circular closed form
// exists only at lambda = +-omega0, i.e. +-1 in atom units.
inline double response_closed(const Scenario& sc, double lambda) {
    sc.validate();
    detail::require(std::isfinite(lambda) && lambda != 0.0, "response_closed: lambda must be non-zero");
    switch (sc.kind) {
        case TrajectoryKind::Inertial: {
            if (lambda < 0.0) return 0.0;
            double g = lambda / (2.0 * kPi);
            if (sc.boundary) g *= one_minus_sinc(2.0 * lambda * *sc.boundary);
            return g;
        }
        case TrajectoryKind::LinearAcceleration: {
            double g = detail::thermal_response_linear(sc.accel, lambda);
            if (sc.boundary) g *= detail::boundary_factor_linear(sc.accel, *sc.boundary, lambda);
            return g;
        }
        case TrajectoryKind::CircularUltrarelativistic: {
            detail::require(std::abs(std::abs(lambda) - 1.0) < 1e-9,
                            "response_closed: circular closed form exists only at lambda = +-omega0");
            double g = detail::circular_free_response(sc.accel, lambda);
            if (sc.boundary) {
                const auto im = detail::circular_image(sc.accel, *sc.boundary);
                const double pref = 3.0 / (2.0 * kPi * im.U);
                g -= pref * std::exp(-im.q) / (2.0 * im.q);
                if (lambda > 0.0) g -= pref * sinc(im.s);
            }
            return g;
        }
    }
    return 0.0;
}

inline ResponsePair response_pair(const Scenario& sc) {
    return {response_closed(sc, 1.0), response_closed(sc, -1.0)};
}

// Real-axis near-singular points of the regulated Wightman function, used to
// seed the quadrature oracle's subdivision.
inline std::vector<double> wightman_real_poles(const Scenario& sc) {
    std::vector<double> ps{0.0};
    if (sc.boundary) {
        const double z = *sc.boundary;
        switch (sc.kind) {
            case TrajectoryKind::Inertial: ps.push_back(2.0 * z); break;
            case TrajectoryKind::LinearAcceleration:
                ps.push_back((2.0 / sc.accel) * std::asinh(sc.accel * z));
                break;
            case TrajectoryKind::CircularUltrarelativistic:
                ps.push_back(detail::circular_image(sc.accel, z).s);
                break;
        }
    }
    return ps;
}

struct QuadratureResponse {
    double value = 0.0;
    double error = 0.0; // extrapolation residual plus quadrature error bound
};

inline constexpr std::array<double, 4> kDefaultEpsilonSequence{8e-3, 4e-3, 2e-3, 1e-3};

// Independent oracle for response_closed: integrates e^{i lambda dtau}
// G+(dtau; eps) over a truncated window for each regulator in eps_seq
// (decreasing, >= 3 entries) and polynomial-extrapolates eps -> 0.
//
// The window T is grown until |G(T)| < 1e-14 and the remaining half-line
// tails are added analytically through two integration-by-parts terms, so
// power-law correlator tails (inertial, circular) do not force huge windows.
// Hermiticity G(-dtau) = conj(G(dtau)) folds the integral onto [0, T].
inline QuadratureResponse response_quadrature(const Scenario& sc, double lambda,
                                              std::span<const double> eps_seq = kDefaultEpsilonSequence,
                                              double tol = 1e-5) {
    sc.validate();
    detail::require(std::isfinite(lambda) && lambda != 0.0, "response_quadrature: lambda must be non-zero");
    detail::require(eps_seq.size() >= 3, "response_quadrature: need >= 3 regulator values");
    for (std::size_t i = 0; i < eps_seq.size(); ++i) {
        detail::require(eps_seq[i] > 0.0, "response_quadrature: regulators must be > 0");
        if (i > 0) detail::require(eps_seq[i] < eps_seq[i - 1], "response_quadrature: regulators must decrease");
    }

    const std::vector<double> poles = wightman_real_poles(sc);
    const double max_pole = *std::max_element(poles.begin(), poles.end());
    const std::complex<double> il(0.0, lambda);

    std::vector<double> values;
    values.reserve(eps_seq.size());
    double quad_err = 0.0;
    for (const double eps : eps_seq) {
        auto g = [&](double t) { return wightman(sc, t, eps); };

        // The half-line tail beyond T is added analytically through two
        // integration-by-parts terms, leaving an error ~ 2|G''(T)|/|lambda|^3;
        // grow the window until that estimate is negligible.
        const double h_probe = 0.5 / std::abs(lambda);
        auto tail_error = [&](double T) {
            const double g2 = std::abs(g(T + h_probe) - 2.0 * g(T) + g(T - h_probe)) /
                              (h_probe * h_probe);
            return 2.0 * g2 / std::abs(lambda * lambda * lambda);
        };
        double T = std::max({50.0 / std::abs(lambda),
                             sc.kind == TrajectoryKind::LinearAcceleration ? 20.0 / sc.accel : 0.0,
                             3.0 * max_pole + 10.0});
        while (tail_error(T) > 1e-14 && T < 1e6) T *= 2.0;

        std::vector<double> bps;
        for (const double p : poles)
            for (const double m : {1.0, 8.0, 64.0, 512.0}) {
                bps.push_back(p - m * eps);
                bps.push_back(p + m * eps);
            }

        auto f = [&](double t) { return 2.0 * std::real(std::exp(il * t) * g(t)); };
        numerics::QuadratureOptions qopt;
        qopt.abs_tol = 1e-12;
        const auto q = numerics::integrate_adaptive<double>(f, 0.0, T, bps, qopt);

        // two-term tail: -e^{i lam T} [g(T)/(i lam) + g'(T)/(i lam)^2]
        const double h = 0.25 / std::abs(lambda);
        const std::complex<double> gp = (g(T + h) - g(T - h)) / (2.0 * h);
        const std::complex<double> tail = -std::exp(il * T) * (g(T) / il + gp / (il * il));

        values.push_back(q.value + 2.0 * std::real(tail));
        quad_err = std::max(quad_err, q.error);
    }

    std::vector<double> xs(eps_seq.begin(), eps_seq.end());
    const auto ex = numerics::neville_at_zero(xs, values);
    QuadratureResponse out{ex.value, ex.residual + quad_err};
    if (out.error > tol * std::abs(out.value) + 1e-10)
        throw convergence_error("response_quadrature: extrapolation residual exceeds tolerance");
    return out;
}

} // namespace gphase

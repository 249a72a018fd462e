#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

#include "gphase/errors.hpp"

namespace gphase::numerics {

struct OdeOptions {
    double tol = 1e-10;   // target accumulated error over the whole span
    double h_init = 0.0;  // 0 = automatic
    double h_min = 1e-13; // underflow threshold, relative to the span
};

// Embedded Cash-Karp 4(5) pair with step control tuned so that the summed
// local error over [t0, t1] stays near opt.tol. The observer is called at
// every accepted step, including the exact landing on t1.
template <std::size_t N, class RHS, class Observer>
void integrate_cash_karp(RHS&& rhs, std::array<double, N>& y, double t0, double t1,
                         const OdeOptions& opt, Observer&& observe) {
    using State = std::array<double, N>;
    constexpr double a21 = 1.0 / 5.0;
    constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    constexpr double a41 = 3.0 / 10.0, a42 = -9.0 / 10.0, a43 = 6.0 / 5.0;
    constexpr double a51 = -11.0 / 54.0, a52 = 5.0 / 2.0, a53 = -70.0 / 27.0, a54 = 35.0 / 27.0;
    constexpr double a61 = 1631.0 / 55296.0, a62 = 175.0 / 512.0, a63 = 575.0 / 13824.0,
                     a64 = 44275.0 / 110592.0, a65 = 253.0 / 4096.0;
    constexpr double b1 = 37.0 / 378.0, b3 = 250.0 / 621.0, b4 = 125.0 / 594.0, b6 = 512.0 / 1771.0;
    constexpr double d1 = b1 - 2825.0 / 27648.0, d3 = b3 - 18575.0 / 48384.0,
                     d4 = b4 - 13525.0 / 55296.0, d5 = -277.0 / 14336.0, d6 = b6 - 1.0 / 4.0;

    const double span = t1 - t0;
    if (span <= 0.0) {
        observe(t0, y);
        return;
    }
    const double tol_rate = opt.tol / span; // error budget per unit time
    double t = t0;
    double h = opt.h_init > 0.0 ? opt.h_init : span * 1e-3;
    const double h_floor = span * opt.h_min;

    State k1, k2, k3, k4, k5, k6, tmp, y5;
    observe(t, y);
    while (t < t1) {
        h = std::min(h, t1 - t);
        rhs(t, y, k1);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * a21 * k1[i];
        rhs(t + h / 5.0, tmp, k2);
        for (std::size_t i = 0; i < N; ++i) tmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + 3.0 * h / 10.0, tmp, k3);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + 3.0 * h / 5.0, tmp, k4);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        rhs(t + h, tmp, k5);
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
        rhs(t + 7.0 * h / 8.0, tmp, k6);

        double err = 0.0;
        for (std::size_t i = 0; i < N; ++i) {
            y5[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b6 * k6[i]);
            err = std::max(err, std::abs(h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] +
                                              d5 * k5[i] + d6 * k6[i])));
        }
        const double budget = tol_rate * h;
        if (err <= budget || h <= h_floor) {
            if (err > budget && h <= h_floor)
                throw gphase::stiffness_error("integrate_cash_karp: step size underflow");
            t += h;
            y = y5;
            observe(t, y);
        }
        const double ratio = (err > 0.0) ? std::pow(budget / err, 0.2) : 5.0;
        h *= std::clamp(0.9 * ratio, 0.2, 5.0);
        if (h < h_floor) h = h_floor;
    }
}

} // namespace gphase::numerics

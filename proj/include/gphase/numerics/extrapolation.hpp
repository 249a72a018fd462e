#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace gphase::numerics {

struct Extrapolated {
    double value = 0.0;
    double residual = 0.0; // change introduced by the highest-order correction
};

// Neville polynomial extrapolation of (x_i, y_i) samples to x = 0.
// Used for regulator sequences eps -> 0+.
inline Extrapolated neville_at_zero(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("neville_at_zero: need >= 2 matching samples");
    const std::size_t n = xs.size();
    std::vector<double> t(ys.begin(), ys.end());
    double prev = t[0];
    for (std::size_t k = 1; k < n; ++k) {
        if (k == n - 1) prev = t[0]; // degree-(n-2) value, before the final sweep
        for (std::size_t i = 0; i + k < n; ++i) {
            const double dx = xs[i] - xs[i + k];
            t[i] = (-xs[i + k] * t[i] + xs[i] * t[i + 1]) / dx;
        }
    }
    return {t[0], std::abs(t[0] - prev)};
}

} // namespace gphase::numerics

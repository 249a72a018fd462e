#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "gphase/errors.hpp"

namespace gphase::numerics {

// Bracketed bisection; returns the midpoint of the final interval.
// Requires f(lo) and f(hi) of opposite (non-zero) sign.
template <class F>
double bisect(F&& f, double lo, double hi, double xtol = 1e-14, int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw gphase::bracket_error("bisect: no sign change in [lo, hi]");
    for (int i = 0; i < max_iter && (hi - lo) > xtol * (1.0 + std::abs(lo)); ++i) {
        const double m = 0.5 * (lo + hi);
        if (m <= lo || m >= hi) break;
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = m;
            flo = fm;
        } else {
            hi = m;
        }
    }
    return 0.5 * (lo + hi);
}

// Scan [lo, hi] with n uniform steps and return every subinterval over which
// f changes sign.
template <class F>
std::vector<std::pair<double, double>> sign_change_brackets(F&& f, double lo, double hi, int n) {
    std::vector<std::pair<double, double>> out;
    double x0 = lo;
    double f0 = f(x0);
    for (int i = 1; i <= n; ++i) {
        const double x1 = lo + (hi - lo) * static_cast<double>(i) / n;
        const double f1 = f(x1);
        if ((f0 < 0.0) != (f1 < 0.0)) out.emplace_back(x0, x1);
        x0 = x1;
        f0 = f1;
    }
    return out;
}

} // namespace gphase::numerics

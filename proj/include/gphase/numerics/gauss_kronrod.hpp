#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <queue>
#include <span>
#include <vector>

namespace gphase::numerics {

struct QuadratureOptions {
    double abs_tol = 1e-12;
    std::size_t max_segments = 60000;
};

template <class T>
struct QuadratureResult {
    T value{};
    double error = 0.0;
    std::size_t segments = 0;
    bool converged = false;
};

namespace detail {

// 15-point Kronrod / embedded 7-point Gauss pair (QUADPACK qk15 constants).
// kXgk[1], kXgk[3], ... are the Gauss abscissae.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T, class F>
void gk15(F&& f, double a, double b, T& integral, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const T fc = f(c);
    T resk = kWgk[7] * fc;
    T resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const T f1 = f(c - x);
        const T f2 = f(c + x);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
    }
    integral = resk * h;
    err = std::abs(resk - resg) * std::abs(h);
}

template <class T>
struct Segment {
    double err;
    double a, b;
    T value;
    bool operator<(const Segment& o) const { return err < o.err; }
};

} // namespace detail

// Globally adaptive Gauss-Kronrod integration on [a, b]. The interval is
// pre-split at the supplied breakpoints (sharp features, near-poles) and the
// worst segment is bisected until the summed error estimate drops below
// abs_tol or the segment budget runs out.
template <class T = double, class F>
QuadratureResult<T> integrate_adaptive(F&& f, double a, double b,
                                       std::span<const double> breakpoints = {},
                                       const QuadratureOptions& opt = {}) {
    std::vector<double> pts{a, b};
    for (double p : breakpoints)
        if (p > a && p < b) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::priority_queue<detail::Segment<T>> segs;
    double total_err = 0.0;
    std::size_t n = 0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        T v;
        double e;
        detail::gk15(f, pts[i], pts[i + 1], v, e);
        segs.push({e, pts[i], pts[i + 1], v});
        total_err += e;
        ++n;
    }

    while (total_err > opt.abs_tol && n < opt.max_segments) {
        detail::Segment<T> worst = segs.top();
        const double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b) break; // exhausted double precision
        segs.pop();
        total_err -= worst.err;
        T v1, v2;
        double e1, e2;
        detail::gk15(f, worst.a, m, v1, e1);
        detail::gk15(f, m, worst.b, v2, e2);
        segs.push({e1, worst.a, m, v1});
        segs.push({e2, m, worst.b, v2});
        total_err += e1 + e2;
        ++n;
    }

    T total{};
    double err = 0.0;
    while (!segs.empty()) {
        total += segs.top().value;
        err += segs.top().err;
        segs.pop();
    }
    return {total, err, n, err <= opt.abs_tol};
}

} // namespace gphase::numerics

#pragma once

#include <cmath>
#include <cstddef>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gphase/correlators.hpp"
#include "gphase/dissipator.hpp"
#include "gphase/dynamics.hpp"
#include "gphase/model.hpp"
#include "gphase/phase.hpp"
#include "gphase/sweep.hpp"

namespace gphase {

struct CheckResult {
    std::string name;
    double max_err = 0.0;
    double tol = 0.0;
    bool pass = false;
};

struct ValidateOptions {
    bool strict = false;           // tightens the antiderivative identity to 1e-10
    double circular_sqrt3 = kSqrt3; // fault-injection hook for the circular response check
};

namespace detail {

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), 1e-300);
    return std::abs(got - want) / scale;
}

struct Validator {
    std::vector<CheckResult> results;
    void add(const std::string& name, double max_err, double tol) {
        results.push_back({name, max_err, tol, max_err <= tol});
    }
};

inline std::vector<Scenario> validation_scenarios() {
    std::vector<Scenario> out;
    for (const double a : {0.5, 1.0, 2.0, 5.0, 10.0}) {
        out.push_back(Scenario::linear(a));
        out.push_back(Scenario::circular(a));
        for (const double z : {0.5, 2.0, 10.0}) {
            out.push_back(Scenario::linear(a, z));
            out.push_back(Scenario::circular(a, z));
        }
    }
    out.push_back(Scenario::inertial());
    out.push_back(Scenario::inertial(0.5));
    out.push_back(Scenario::inertial(2.0));
    return out;
}

} // namespace detail

inline std::vector<CheckResult> run_validation(const ValidateOptions& opt = {}) {
    detail::Validator v;
    const AtomConfig atom{1.0, 1e-2};
    const auto scenarios = detail::validation_scenarios();

    { // normalize: idempotence and monotonicity
        double err = 0.0;
        const AtomConfig a2{2.0, 1e-3};
        for (const double a : {0.1, 1.0, 5.38, 20.0}) {
            const Scenario s = normalize(a2, RawScenario{TrajectoryKind::LinearAcceleration, a, 3.0});
            const Scenario s2 = normalize(a2, s);
            err = std::max({err, std::abs(s2.accel - s.accel), std::abs(*s2.boundary - *s.boundary)});
        }
        double prev = 0.0;
        for (const double a : {0.1, 1.0, 5.38, 20.0}) {
            const Scenario s = normalize(a2, RawScenario{TrajectoryKind::LinearAcceleration, a, {}});
            if (s.accel <= prev) err = std::max(err, 1.0);
            prev = s.accel;
        }
        v.add("normalize_roundtrip", err, 0.0);
    }

    { // G(-dtau) = conj(G(dtau))
        double err = 0.0;
        for (const auto& sc : scenarios)
            for (const double t : {0.3, 0.7, 2.5})
                for (const double eps : {1e-3, 1e-4}) {
                    const auto gp = wightman(sc, t, eps);
                    const auto gm = wightman(sc, -t, eps);
                    err = std::max(err, std::abs(gm - std::conj(gp)) / std::max(std::abs(gp), 1e-300));
                }
        v.add("wightman_hermiticity", err, 1e-13);
    }

    { // KMS detailed balance for the uniformly accelerated response
        double err = 0.0;
        for (const double a : {0.5, 1.0, 2.0, 5.0, 10.0})
            for (const double lam : {0.3, 1.0, 2.7}) {
                const Scenario sc = Scenario::linear(a);
                const double lhs = response_closed(sc, -lam);
                const double rhs = std::exp(-2.0 * kPi * lam / a) * response_closed(sc, lam);
                err = std::max(err, detail::rel_err(lhs, rhs));
            }
        v.add("kms_detailed_balance", err, 1e-12);
    }

    { // response positivity
        double err = 0.0;
        for (const auto& sc : scenarios) {
            const auto g = response_pair(sc);
            if (!(g.g_plus > 0.0)) err = std::max(err, 1.0);
            if (!sc.boundary && g.g_minus < 0.0) err = std::max(err, -g.g_minus);
        }
        v.add("response_positivity", err, 0.0);
    }

    { // far-mirror limit recovers the free-space coefficients (linear: 1e-6 gamma0)
        double err = 0.0;
        for (const double a : {0.5, 1.0, 10.0}) {
            const auto kb = kossakowski(atom, Scenario::linear(a, 1e3));
            const auto kf = kossakowski(atom, Scenario::linear(a));
            err = std::max({err, std::abs(kb.a_coeff - kf.a_coeff) / atom.gamma0_hat(),
                            std::abs(kb.b_coeff - kf.b_coeff) / atom.gamma0_hat()});
        }
        v.add("boundary_recovery_linear", err, 1e-6);
    }

    { // far-mirror limit at the delta_tilde level, both trajectories
        double err = 0.0;
        const InitialState st{kPi / 4.0};
        for (const double a : {0.5, 1.0, 10.0}) {
            err = std::max(err, std::abs(delta_perturbative(Scenario::linear(a, 1e3), st) -
                                         delta_perturbative(Scenario::linear(a), st)));
            err = std::max(err, std::abs(delta_perturbative(Scenario::circular(a, 1e3), st) -
                                         delta_perturbative(Scenario::circular(a), st)));
        }
        v.add("boundary_recovery_delta", err, 1e-3);
    }

    { // near-mirror suppression: response -> 0 following the z^2 series
        double err = 0.0;
        for (const double a : {0.5, 1.0, 2.0})
            for (const double z : {1e-2, 1e-3})
                for (const double lam : {1.0, -1.0}) {
                    const double got = response_closed(Scenario::linear(a, z), lam);
                    const double vterm = lam * lam * z * z, wterm = a * a * z * z;
                    const double series = (2.0 / 3.0) * (vterm + wterm) - (2.0 / 15.0) * vterm * vterm -
                                          (2.0 / 3.0) * vterm * wterm - (8.0 / 15.0) * wterm * wterm;
                    const double want = response_closed(Scenario::linear(a), lam) * series;
                    err = std::max(err, detail::rel_err(got, want));
                }
        v.add("boundary_small_z_series", err, 1e-3);

        double cerr = 0.0;
        for (const double a : {0.5, 1.0, 10.0}) {
            const auto k = kossakowski(atom, Scenario::linear(a, 1e-4));
            cerr = std::max({cerr, k.a_coeff / atom.gamma0_hat(), k.b_coeff / atom.gamma0_hat()});
        }
        v.add("boundary_small_z_coefficients", cerr, 1e-6);
    }

    { // free space B = gamma0/4 to machine precision
        double err = 0.0;
        for (const double a : {0.3, 0.5, 1.0, 2.0, 5.0, 10.0, 17.0}) {
            for (const auto& sc : {Scenario::linear(a), Scenario::circular(a)}) {
                const auto k = kossakowski(atom, sc);
                err = std::max(err, std::abs(k.b_coeff - atom.gamma0_hat() / 4.0) / atom.gamma0_hat());
            }
        }
        v.add("free_space_b_constant", err, 1e-15);
    }

    { // |B| <= A (complete positivity of the Kossakowski matrix)
        double err = 0.0;
        for (const auto& sc : scenarios) {
            const auto k = kossakowski(atom, sc);
            err = std::max(err, (std::abs(k.b_coeff) - k.a_coeff) / atom.gamma0_hat());
        }
        v.add("complete_positivity", err, 1e-15);
    }

    { // transition rates strictly increasing in a
        double err = 0.0;
        double pl = relative_rate(Scenario::linear(0.05));
        double pc = relative_rate(Scenario::circular(0.05));
        for (double a = 0.1; a <= 20.0 + 1e-9; a += 0.05) {
            const double gl = relative_rate(Scenario::linear(a));
            const double gc = relative_rate(Scenario::circular(a));
            if (gl <= pl || gc <= pc) err = std::max(err, 1.0);
            pl = gl;
            pc = gc;
        }
        v.add("rate_monotonicity", err, 0.0);
    }

    { // exactly one rate crossing, ordered as linear < circular before it
        auto diff = [](double a) {
            return relative_rate(Scenario::linear(a)) - relative_rate(Scenario::circular(a));
        };
        const auto brackets = numerics::sign_change_brackets(diff, 0.5, 20.0, 1950);
        double err = std::abs(static_cast<double>(brackets.size()) - 1.0);
        if (!(diff(1.0) < 0.0)) err = std::max(err, 1.0);
        if (!(diff(10.0) > 0.0)) err = std::max(err, 1.0);
        v.add("rate_crossing_unique", err, 0.0);
    }

    { // quadrature oracle vs closed forms, free space linear
        double err = 0.0;
        for (const double a : {0.5, 1.0, 2.0, 5.0, 10.0})
            for (const double lam : {1.0, -1.0}) {
                const Scenario sc = Scenario::linear(a);
                err = std::max(err, detail::rel_err(response_quadrature(sc, lam).value,
                                                    response_closed(sc, lam)));
            }
        v.add("linear_response_oracle", err, 1e-4);
    }

    { // quadrature oracle vs closed forms, free space circular (sqrt3 injectable)
        double err = 0.0;
        for (const double a : {0.5, 1.0, 2.0, 5.0, 10.0})
            for (const double lam : {1.0, -1.0}) {
                const Scenario sc = Scenario::circular(a);
                const double closed = detail::circular_free_response(a, lam, opt.circular_sqrt3);
                err = std::max(err, detail::rel_err(response_quadrature(sc, lam).value, closed));
            }
        v.add("circular_response_oracle", err, 1e-4);
    }

    { // quadrature oracle vs closed forms, inertial (no spontaneous excitation)
        double err = detail::rel_err(response_quadrature(Scenario::inertial(), 1.0).value,
                                     1.0 / (2.0 * kPi));
        err = std::max(err, std::abs(response_quadrature(Scenario::inertial(), -1.0).value) * 1e2);
        v.add("inertial_response_oracle", err, 1e-4);
    }

    { // quadrature oracle vs closed forms, mirrors
        double err_l = 0.0, err_c = 0.0;
        for (const double a : {0.5, 1.0, 2.0, 5.0, 10.0})
            for (const double z : {0.5, 2.0, 10.0})
                for (const double lam : {1.0, -1.0}) {
                    const Scenario sl = Scenario::linear(a, z);
                    err_l = std::max(err_l, detail::rel_err(response_quadrature(sl, lam).value,
                                                            response_closed(sl, lam)));
                    const Scenario sc = Scenario::circular(a, z);
                    err_c = std::max(err_c, detail::rel_err(response_quadrature(sc, lam).value,
                                                            response_closed(sc, lam)));
                }
        v.add("boundary_linear_response_oracle", err_l, 1e-4);
        v.add("boundary_circular_response_oracle", err_c, 1e-4);
    }

    { // trace, positivity and contraction along closed-form trajectories.
      // Purity itself is not monotone (the state re-purifies toward the
      // nearly pure stationary state when R is close to 1); the monotone
      // quantity is the Bloch-space distance to the fixed point.
        double terr = 0.0, perr = 0.0, merr = 0.0, cerr = 0.0;
        for (const auto& sc : scenarios) {
            const auto k = kossakowski(atom, sc);
            const double r3_inf = -k.r();
            for (const double th : {0.3, kPi / 4.0, kPi / 2.0, 2.5}) {
                double prev_dist = 1e300;
                for (const double tau : {0.0, 0.5, 2.0, 8.0, 40.0, 200.0}) {
                    const auto rho = rho_closed(tau, k, {th});
                    terr = std::max(terr, std::abs(std::real(rho.trace()) - 1.0));
                    terr = std::max(terr, std::abs(std::imag(rho.trace())));
                    merr = std::max(merr, -rho.eigenvalues().first);
                    perr = std::max(perr, rho.purity() - 1.0);
                    const double rx = 2.0 * std::real(rho.m01);
                    const double ry = 2.0 * std::imag(rho.m10);
                    const double r3 = std::real(rho.m00 - rho.m11);
                    const double dist = std::sqrt(rx * rx + ry * ry + (r3 - r3_inf) * (r3 - r3_inf));
                    if (dist > prev_dist + 1e-12) cerr = std::max(cerr, dist - prev_dist);
                    prev_dist = dist;
                }
            }
        }
        v.add("trace_preservation", terr, 1e-12);
        v.add("rho_positivity", merr, 1e-10);
        v.add("purity_bounded", perr, 1e-12);
        v.add("fixed_point_contraction", cerr, 0.0);
    }

    { // purity is monotone non-increasing in the unpolarized bath case B = 0
        double perr = 0.0;
        const KossakowskiPair k{2.5e-3, 0.0, 1e-2, {}};
        for (const double th : {0.3, kPi / 2.0, 2.5}) {
            double prev = 2.0;
            for (double tau = 0.0; tau <= 400.0; tau += 2.0) {
                const double pu = rho_closed(tau, k, {th}).purity();
                if (pu > prev + 1e-12) perr = std::max(perr, pu - prev);
                prev = pu;
            }
        }
        v.add("purity_decay_unpolarized", perr, 0.0);
    }

    { // closed form satisfies the master equation (4th-order finite differences)
        double err = 0.0;
        const double h = 1e-3;
        for (const auto& sc : scenarios) {
            const auto k = kossakowski(atom, sc);
            for (const double th : {kPi / 4.0, 1.9})
                for (const double tau : {0.4, 2.0, 7.0}) {
                    auto at = [&](double t) { return rho_closed(t, k, {th}); };
                    const Qubit2x2 d_fd =
                        (1.0 / (12.0 * h)) *
                        (at(tau - 2 * h) - 8.0 * at(tau - h) + 8.0 * at(tau + h) - at(tau + 2 * h));
                    const Qubit2x2 d_gen = lindblad_rhs(at(tau), k.a_coeff, k.b_coeff, 1.0);
                    err = std::max(err, d_fd.max_abs_diff(d_gen));
                }
        }
        v.add("master_equation_residual", err, 1e-9);
    }

    { // lambda_-(0) = 0 for every theta
        double err = 0.0;
        const auto k = kossakowski(atom, Scenario::linear(2.0));
        for (double th = 0.0; th <= kPi + 1e-12; th += kPi / 16.0)
            err = std::max(err, std::abs(eigen_track(k, {std::min(th, kPi)}, 0.0).lambda_minus));
        v.add("lambda_minus_initial", err, 1e-15);
    }

    { // closed form vs Lindblad ODE
        double err = 0.0;
        for (const auto& sc : {Scenario::linear(2.0), Scenario::circular(3.0, 0.7)}) {
            const auto k = kossakowski(AtomConfig{1.0, 5e-2}, sc);
            const InitialState st{kPi / 4.0};
            for (const auto& [tau, rho] : lindblad_ode(k, st, 1.0, 4.0 * kPi, 1e-9))
                err = std::max(err, rho.max_abs_diff(rho_closed(tau, k, st)));
        }
        v.add("dynamics_oracle", err, 1e-7);
    }

    { // antiderivative identity: closed form == quadrature
        double err = 0.0;
        for (const auto& sc : scenarios) {
            if (!sc.accelerated()) continue;
            for (const double g0 : {1e-3, 1e-2, 1e-1}) {
                const auto k = kossakowski(AtomConfig{1.0, g0}, sc);
                for (const double th : {0.3, kPi / 4.0, 2.0}) {
                    const double gq = phase_gamma_quadrature(k.a_coeff, k.b_coeff, th);
                    const double gc = phase_gamma_closed(k.a_coeff, k.b_coeff, th);
                    err = std::max(err, std::abs(gc - gq) / std::abs(gq));
                }
            }
        }
        v.add("antiderivative_identity", err, opt.strict ? 1e-10 : 1e-8);
    }

    { // sgn(Q) term drops out continuously at Q = 0
        double err = 0.0;
        const double A = 2.5e-3;
        for (const double dq : {-1e-6, 0.0, 1e-6}) {
            const double R = 0.6;
            const double th = std::acos(-R + dq); // Q = R + cos(th) = dq
            const double gq = phase_gamma_quadrature(A, R * A, th);
            const double gc = phase_gamma_closed(A, R * A, th);
            err = std::max(err, std::abs(gc - gq) / std::abs(gq));
        }
        v.add("q_zero_branch", err, 1e-8);
    }

    { // exact minus baseline converges to the perturbative delta quadratically
        double slope_min = 10.0;
        const InitialState st{kPi / 4.0};
        for (const auto& sc : {Scenario::linear(2.0), Scenario::circular(2.0),
                               Scenario::linear(2.0, 0.5), Scenario::circular(2.0, 0.5)}) {
            const double dt = delta_perturbative(sc, st);
            double prev = 0.0;
            int i = 0;
            for (const double g0 : {1e-2, 1e-3, 1e-4}) {
                const AtomConfig a{1.0, g0};
                const auto k = kossakowski(a, sc);
                const double exact = phase_gamma_closed(k.a_coeff, k.b_coeff, st.theta);
                const double resid = (exact - inertial_baseline(a, st, sc.boundary)) -
                                     dt * delta_scale(g0);
                if (i > 0) slope_min = std::min(slope_min, std::log10(std::abs(prev / resid)));
                prev = resid;
                ++i;
            }
        }
        v.add("perturbative_consistency_slope", 2.0 - slope_min, 0.1);
    }

    { // crossing acceleration is theta independent
        const double astar = phase_crossing();
        double err = 0.0;
        for (int i = 1; i <= 30; ++i) {
            const InitialState st{kPi * i / 31.0};
            err = std::max(err, std::abs(delta_perturbative(Scenario::linear(astar), st) -
                                         delta_perturbative(Scenario::circular(astar), st)));
        }
        v.add("crossing_theta_independence", err, 1e-12);
    }

    { // free-space parity delta(pi - th) = -delta(th) and sign -cos(th)
        double err = 0.0, serr = 0.0;
        for (const double a : {0.8, 2.0, 6.0})
            for (const double th : {0.3, 0.9, 1.2}) {
                for (const auto& sc : {Scenario::linear(a), Scenario::circular(a)}) {
                    err = std::max(err, std::abs(delta_perturbative(sc, {kPi - th}) +
                                                 delta_perturbative(sc, {th})));
                    if (delta_perturbative(sc, {th}) >= 0.0) serr = std::max(serr, 1.0);
                    if (delta_perturbative(sc, {kPi - th}) <= 0.0) serr = std::max(serr, 1.0);
                }
            }
        v.add("delta_parity", err, 2e-15);
        v.add("delta_sign_structure", serr, 0.0);
    }

    { // a -> 0 limits
        const InitialState st{kPi / 4.0};
        const double free_err = std::max(std::abs(delta_perturbative(Scenario::linear(0.05), st)),
                                         std::abs(delta_perturbative(Scenario::circular(0.05), st)));
        v.add("zero_accel_limit_free", free_err, 1e-12);
        const double bnd_err =
            std::max(std::abs(delta_perturbative(Scenario::linear(1e-3, 0.5), st)),
                     std::abs(delta_perturbative(Scenario::circular(1e-3, 0.5), st)));
        v.add("zero_accel_limit_boundary", bnd_err, 1e-4);
    }

    { // CSV output is bytewise deterministic
        SweepSpec spec;
        spec.variable = SweepVariable::Theta;
        spec.start = 0.05;
        spec.stop = 3.09;
        spec.count = 63;
        spec.fixed_accel = 2.69;
        std::ostringstream s1, s2;
        write_csv(s1, run_sweep(spec));
        write_csv(s2, run_sweep(spec));
        v.add("csv_determinism", s1.str() == s2.str() ? 0.0 : 1.0, 0.0);
    }

    return v.results;
}

inline bool all_passed(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs)
        if (!r.pass) return false;
    return true;
}

inline void print_report(std::ostream& os, const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) {
        os << (r.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(36) << r.name
           << " max_err=" << std::scientific << std::setprecision(3) << r.max_err
           << " tol=" << r.tol << std::defaultfloat << '\n';
    }
    std::size_t failed = 0;
    for (const auto& r : rs)
        if (!r.pass) ++failed;
    os << rs.size() - failed << "/" << rs.size() << " checks passed\n";
}

} // namespace gphase

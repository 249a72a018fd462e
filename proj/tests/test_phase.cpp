#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "gphase/dissipator.hpp"
#include "gphase/phase.hpp"

using namespace gphase;
using Catch::Approx;

TEST_CASE("polar initial states: zero phase at theta = 0, -2pi at theta = pi") {
    const auto k = kossakowski(AtomConfig{1.0, 1e-2}, Scenario::linear(2.0));
    CHECK(phase_gamma_quadrature(k.a_coeff, k.b_coeff, 0.0) == Approx(0.0).margin(1e-12));
    CHECK(phase_gamma_closed(k.a_coeff, k.b_coeff, 0.0) == Approx(0.0).margin(1e-12));
    CHECK(phase_gamma_quadrature(k.a_coeff, k.b_coeff, kPi) == Approx(-2.0 * kPi).margin(1e-10));
    CHECK(phase_gamma_closed(k.a_coeff, k.b_coeff, kPi) == Approx(-2.0 * kPi).margin(1e-10));
}

TEST_CASE("unitary limit") {
    CHECK(phase_gamma_quadrature(0.0, 0.0, 1.1) == Approx(-kPi * (1.0 - std::cos(1.1))).margin(1e-14));
    CHECK(phase_gamma_closed(0.0, 0.0, 1.1) == Approx(-kPi * (1.0 - std::cos(1.1))).margin(1e-14));
}

TEST_CASE("antiderivative identity: closed form equals quadrature") {
    const AtomConfig atom{1.0, 5e-2};
    for (const auto& sc : {Scenario::linear(2.0), Scenario::circular(0.7), Scenario::linear(1.0, 0.5),
                           Scenario::circular(2.0, 2.0)}) {
        const auto k = kossakowski(atom, sc);
        for (const double th : {0.3, kPi / 4.0, kPi / 2.0, 2.6}) {
            const double gq = phase_gamma_quadrature(k.a_coeff, k.b_coeff, th);
            const double gc = phase_gamma_closed(k.a_coeff, k.b_coeff, th);
            CHECK(std::abs(gc - gq) < 1e-8 * std::abs(gq));
        }
    }
}

TEST_CASE("frozen spot values, theta = pi/4, gamma0 = 1e-2") {
    const AtomConfig atom{1.0, 1e-2};
    const auto kl = kossakowski(atom, Scenario::linear(2.0));
    CHECK(phase_gamma_closed(kl.a_coeff, kl.b_coeff, kPi / 4.0) ==
          Approx(-0.99268712699203725).epsilon(1e-12));
    const auto kc = kossakowski(atom, Scenario::circular(2.0));
    CHECK(phase_gamma_closed(kc.a_coeff, kc.b_coeff, kPi / 4.0) ==
          Approx(-0.99291512195309209).epsilon(1e-12));
}

TEST_CASE("dF/dphi reproduces the phase integrand") {
    const double A = 0.02, R = 0.65, th = kPi / 4.0;
    const double Q = R + std::cos(th);
    const double h = 1e-4;
    // 4th-order central difference of F at phi = 1.3
    auto F = [&](double phi) { return detail::antiderivative_F(phi, A, R, Q); };
    const double dF =
        (F(1.3 - 2 * h) - 8.0 * F(1.3 - h) + 8.0 * F(1.3 + h) - F(1.3 + 2 * h)) / (12.0 * h);
    const double E = std::exp(4.0 * A * 1.3);
    const double integrand = -detail::integrand_bracket(E, R, std::cos(th), std::sin(th) * std::sin(th));
    CHECK(dF == Approx(integrand).margin(1e-6));
    CHECK(dF == Approx(-0.17536300197364677).margin(1e-8)); // frozen
}

TEST_CASE("inertial baseline") {
    const AtomConfig atom{1.0, 1e-3};
    CHECK(inertial_baseline(atom, {0.0}) == Approx(0.0).margin(1e-15));
    // theta = pi/2 free: -pi - pi^2 (gamma0/2) * 2
    CHECK(inertial_baseline(atom, {kPi / 2.0}) ==
          Approx(-kPi - kPi * kPi * atom.gamma0_hat()).margin(1e-14));
    // far mirror, free value recovered
    CHECK(std::abs(inertial_baseline(atom, {kPi / 2.0}, 1e6) -
                   inertial_baseline(atom, {kPi / 2.0})) < 1e-8);
    // near mirror: the dissipative correction dies, only the unitary part stays
    CHECK(inertial_baseline(atom, {kPi / 2.0}, 1e-5) == Approx(-kPi).margin(1e-12));
}

TEST_CASE("perturbative match of the exact inertial phase") {
    // the difference is O(gamma0^2): about -4e-3 at gamma0 = 1e-2 and below
    // 1e-5 only for gamma0 <= ~3e-4
    const InitialState st{kPi / 4.0};
    auto resid = [&](double g0) {
        const AtomConfig a{1.0, g0};
        const auto k = kossakowski(a, Scenario::inertial());
        return phase_gamma_quadrature(k.a_coeff, k.b_coeff, st.theta) - inertial_baseline(a, st);
    };
    const double r2 = resid(1e-2), r3 = resid(1e-3), r4 = resid(1e-4);
    CHECK(std::abs(r2) == Approx(3.9984e-3).epsilon(1e-3)); // frozen second-order size
    CHECK(std::abs(r4) < 1e-5);
    const double slope23 = std::log10(std::abs(r2 / r3));
    const double slope34 = std::log10(std::abs(r3 / r4));
    CHECK(slope23 > 1.9);
    CHECK(slope34 > 1.9);
}

TEST_CASE("PhaseResult carries the matched baseline and delta_tilde") {
    const AtomConfig atom{1.0, 1e-3};
    const auto k = kossakowski(atom, Scenario::linear(2.0));
    const auto r = phase_closed(k, {kPi / 4.0});
    CHECK(r.method == PhaseMethod::ClosedForm);
    CHECK(r.delta == Approx(r.gamma_total - r.gamma_inertial).margin(1e-18));
    // exact delta_tilde approaches the perturbative one as gamma0 -> 0;
    // the residual is first order in gamma0 (~3e-4 at gamma0 = 1e-3)
    CHECK(r.delta_tilde == Approx(-0.031936976539734659).margin(5e-4));
    const auto k4 = kossakowski(AtomConfig{1.0, 1e-4}, Scenario::linear(2.0));
    CHECK(phase_closed(k4, {kPi / 4.0}).delta_tilde ==
          Approx(-0.031936976539734659).margin(5e-5));
    const auto rq = phase_quadrature(k, {kPi / 4.0});
    CHECK(rq.gamma_total == Approx(r.gamma_total).epsilon(1e-9));

    // quadrature and closed form agree within 1e-8 relative on overlap
    CHECK(std::abs(rq.gamma_total - r.gamma_total) < 1e-8 * std::abs(r.gamma_total));
    // phase lies in (-2pi, 0]
    CHECK(r.gamma_total <= 0.0);
    CHECK(r.gamma_total > -2.0 * kPi - 1e-6);
}

TEST_CASE("perturbative deltas: free space") {
    const InitialState st{kPi / 4.0};
    CHECK(delta_perturbative(Scenario::linear(2.0), st) ==
          Approx(-0.031936976539734659).epsilon(1e-14));
    CHECK(delta_perturbative(Scenario::circular(2.0), st) ==
          Approx(-0.036113890013015819).epsilon(1e-14));
    CHECK_THROWS_AS(delta_perturbative(Scenario::inertial(), st), std::invalid_argument);

    // theta = pi/2: the free-space correction vanishes identically
    CHECK(std::abs(delta_perturbative(Scenario::linear(2.0), {kPi / 2.0})) < 1e-15);
    CHECK(std::abs(delta_perturbative(Scenario::circular(2.0), {kPi / 2.0})) < 1e-15);

    // parity: delta(pi - theta) = -delta(theta)
    for (const double th : {0.3, 1.0, 1.4})
        for (const auto& sc : {Scenario::linear(1.5), Scenario::circular(4.0)})
            CHECK(delta_perturbative(sc, {kPi - th}) ==
                  Approx(-delta_perturbative(sc, {th})).margin(2e-15));
}

TEST_CASE("perturbative deltas: mirror keeps theta = pi/2 correction alive") {
    const InitialState mid{kPi / 2.0};
    CHECK(delta_perturbative(Scenario::linear(2.0, 0.5), mid) ==
          Approx(-0.59171592766240403).epsilon(1e-13));
    CHECK(delta_perturbative(Scenario::circular(2.0, 0.5), mid) ==
          Approx(-0.53960339025817719).epsilon(1e-13));
}

TEST_CASE("exact-vs-perturbative consistency for the mirror delta") {
    // delta_tilde from the exact phase at gamma0 = 1e-3 agrees with the
    // first-order formula to well under 2%
    const double g0 = 1e-3;
    const AtomConfig atom{1.0, g0};
    const Scenario sc = Scenario::linear(2.0, 0.5);
    const InitialState st{kPi / 2.0};
    const auto k = kossakowski(atom, sc);
    const double exact = phase_gamma_closed(k.a_coeff, k.b_coeff, st.theta);
    const double dt = (exact - inertial_baseline(atom, st, sc.boundary)) / delta_scale(g0);
    const double pert = delta_perturbative(sc, st);
    CHECK(std::abs(dt - pert) < 0.02 * std::abs(pert));
}

TEST_CASE("phase crossing") {
    const double astar = phase_crossing();
    CHECK(astar == Approx(2.69).margin(0.01));
    CHECK(astar == Approx(2.6916743087265129).epsilon(1e-12)); // frozen root

    const InitialState st{kPi / 4.0};
    CHECK(std::abs(delta_perturbative(Scenario::linear(astar), st) -
                   delta_perturbative(Scenario::circular(astar), st)) < 1e-12);

    // theta independence of the crossing
    double worst = 0.0;
    for (int i = 1; i <= 30; ++i) {
        const InitialState s{kPi * i / 31.0};
        worst = std::max(worst, std::abs(delta_perturbative(Scenario::linear(astar), s) -
                                         delta_perturbative(Scenario::circular(astar), s)));
    }
    CHECK(worst < 1e-12);

    // below the crossing the linear correction is the smaller one in magnitude
    CHECK(delta_perturbative(Scenario::linear(astar / 2.0), st) >
          delta_perturbative(Scenario::circular(astar / 2.0), st));

    // the exact phases coincide at the crossing up to second-order terms
    const AtomConfig tiny{1.0, 1e-4};
    const auto kl = kossakowski(tiny, Scenario::linear(astar));
    const auto kc = kossakowski(tiny, Scenario::circular(astar));
    CHECK(std::abs(phase_gamma_closed(kl.a_coeff, kl.b_coeff, st.theta) -
                   phase_gamma_closed(kc.a_coeff, kc.b_coeff, st.theta)) < 1e-6);
}

TEST_CASE("Q = 0 branch of the antiderivative") {
    const double A = 2.5e-3, R = 0.6;
    for (const double dq : {-1e-6, 0.0, 1e-6}) {
        const double th = std::acos(-R + dq);
        const double gq = phase_gamma_quadrature(A, R * A, th);
        const double gc = phase_gamma_closed(A, R * A, th);
        CHECK(std::abs(gc - gq) < 1e-8 * std::abs(gq));
    }
}

TEST_CASE("input contracts") {
    CHECK_THROWS_AS(phase_gamma_quadrature(-1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(phase_gamma_quadrature(1.0, 2.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(phase_gamma_closed(0.01, 0.005, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(inertial_baseline(AtomConfig{1.0, 1e-3}, {1.0}, -0.5), std::invalid_argument);
}

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "gphase/correlators.hpp"
#include "gphase/model.hpp"
#include "gphase/numerics/extrapolation.hpp"

using namespace gphase;
using Catch::Approx;

namespace {
// naive transcription of the mirror-corrected circular response in its
// U, sqrt(6+8a^2z^2) form; independent of the factored implementation
double circular_boundary_printed(double a, double z, double lam) {
    const double U = std::sqrt(9.0 + 12.0 * a * a * z * z);
    const double root = std::sqrt(6.0 + 8.0 * a * a * z * z);
    const double x = (a / (4.0 * kSqrt3)) * std::exp(-2.0 * kSqrt3 / a);
    const double evan = (kSqrt3 * a / (2.0 * std::sqrt(3.0 + U) * root)) *
                        std::exp(-std::sqrt(6.0 + 2.0 * U) / a);
    if (lam < 0.0) return (x - evan) / (2.0 * kPi);
    const double osc = (kSqrt3 * a / (std::sqrt(U - 3.0) * root)) *
                       std::sin(std::sqrt(2.0 * U - 6.0) / a);
    return (1.0 + x - osc - evan) / (2.0 * kPi);
}
} // namespace

TEST_CASE("wightman is hermitian: G(-dtau) = conj(G(dtau))") {
    const Scenario sc = Scenario::linear(1.0);
    const auto gp = wightman(sc, 0.7, 1e-3);
    const auto gm = wightman(sc, -0.7, 1e-3);
    CHECK(std::abs(gm - std::conj(gp)) < 1e-15 * std::abs(gp));

    for (const auto& s : {Scenario::inertial(), Scenario::inertial(0.8), Scenario::linear(2.0, 0.5),
                          Scenario::circular(3.0), Scenario::circular(1.0, 2.0)})
        for (const double t : {0.2, 1.1, 4.0}) {
            const auto a = wightman(s, t, 1e-4);
            const auto b = wightman(s, -t, 1e-4);
            CHECK(std::abs(b - std::conj(a)) < 1e-13 * std::abs(a));
        }
}

TEST_CASE("inertial wightman reaches -1/(4 pi^2 dtau^2) as eps -> 0") {
    // Richardson oracle: evaluate on a decreasing regulator ladder and
    // extrapolate; the frozen value is the analytic eps -> 0 limit.
    const std::array<double, 3> eps{1e-3, 1e-4, 1e-5};
    std::vector<double> xs(eps.begin(), eps.end()), ys;
    for (const double e : eps) ys.push_back(std::real(wightman(Scenario::inertial(), 1.0, e)));
    const auto ex = numerics::neville_at_zero(xs, ys);
    CHECK(ex.value == Approx(-0.025330295910584443).epsilon(1e-10));
}

TEST_CASE("linear wightman recovers the inertial value as a -> 0") {
    const double want = -0.025330295910584443; // -1/(4 pi^2) at dtau = 1
    for (const double a : {1e-3, 1e-4}) {
        const auto g = wightman(Scenario::linear(a), 1.0, 1e-10);
        CHECK(std::abs(std::real(g) - want) < 1e-6);
    }
}

TEST_CASE("wightman input guards") {
    CHECK_THROWS_AS(wightman(Scenario::inertial(), 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(wightman(Scenario::inertial(), 1.0, -1e-3), std::invalid_argument);
    // sitting on the image pole with a vanishing regulator trips the guard
    const Scenario sc = Scenario::linear(1.0, 1.0);
    const double pole = 2.0 * std::asinh(1.0);
    CHECK_THROWS_AS(wightman(sc, pole, 1e-14), pole_proximity_error);
}

TEST_CASE("closed-form response: uniformly accelerated atom") {
    // a -> 0: thermal factor dies, G -> lambda/(2 pi)
    CHECK(response_closed(Scenario::linear(1e-3), 1.0) == Approx(0.15915494309189534).epsilon(1e-14));
    // detailed balance ratio at a = 2 pi is exactly 1/e
    const Scenario sc = Scenario::linear(2.0 * kPi);
    CHECK(response_closed(sc, -1.0) / response_closed(sc, 1.0) ==
          Approx(0.36787944117144233).epsilon(1e-12));
    // frozen spot values at a = 1
    CHECK(response_closed(Scenario::linear(1.0), 1.0) == Approx(0.15945271189978371).epsilon(1e-14));
    CHECK(response_closed(Scenario::linear(1.0), -1.0) == Approx(2.9776880788837904e-4).epsilon(1e-14));
}

TEST_CASE("closed-form response: KMS condition on a grid") {
    for (const double a : {0.5, 1.0, 2.0, 5.0, 10.0})
        for (const double lam : {0.3, 1.0, 2.7}) {
            const Scenario sc = Scenario::linear(a);
            const double lhs = response_closed(sc, -lam);
            const double rhs = std::exp(-2.0 * kPi * lam / a) * response_closed(sc, lam);
            CHECK(lhs == Approx(rhs).epsilon(1e-12));
        }
}

TEST_CASE("closed-form response: ultrarelativistic circular motion") {
    // at a = 2 sqrt(3): G(-w0) = (1/2pi) * (1/2) e^{-1}
    const double a = 2.0 * kSqrt3;
    CHECK(response_closed(Scenario::circular(a), -1.0) ==
          Approx(0.029274915762159580).epsilon(1e-13));
    CHECK_THROWS_AS(response_closed(Scenario::circular(1.0), 0.7), std::invalid_argument);
    CHECK_THROWS_AS(response_closed(Scenario::circular(1.0), 0.0), std::invalid_argument);
}

TEST_CASE("closed-form response: mirror factors") {
    // boundary factor at a=1, z=0.5 (frozen from exact evaluation)
    const double got = response_closed(Scenario::linear(1.0, 0.5), 1.0) /
                       response_closed(Scenario::linear(1.0), 1.0);
    CHECK(got == Approx(0.26605167554601979).epsilon(1e-13));

    // far mirror converges to free space like 1/z
    const double free_v = response_closed(Scenario::linear(1.0), 1.0);
    const double far = response_closed(Scenario::linear(1.0, 1e4), 1.0);
    CHECK(std::abs(far - free_v) / free_v < 1e-8);

    // near mirror: response vanishes
    CHECK(response_closed(Scenario::linear(1.0, 1e-4), 1.0) < 1e-8);

    // the mirror preserves detailed balance (factor is even in lambda)
    const Scenario sb = Scenario::linear(2.0, 0.7);
    CHECK(response_closed(sb, -1.0) ==
          Approx(std::exp(-kPi) * response_closed(sb, 1.0)).epsilon(1e-12));
}

TEST_CASE("circular mirror response matches its naive algebraic form") {
    for (const double a : {0.5, 1.0, 2.0, 5.0})
        for (const double z : {0.4, 1.0, 3.0, 11.0})
            for (const double lam : {1.0, -1.0}) {
                const double got = response_closed(Scenario::circular(a, z), lam);
                const double want = circular_boundary_printed(a, z, lam);
                CHECK(got == Approx(want).epsilon(1e-12));
            }
}

TEST_CASE("circular mirror response joins the static image limit as a -> 0 scale") {
    // z -> 0: every response is suppressed to zero (atom on the mirror)
    const double tiny = response_closed(Scenario::circular(1.0, 1e-5), 1.0);
    CHECK(std::abs(tiny) < 1e-7);
    // z -> infinity: free space
    const double free_v = response_closed(Scenario::circular(1.0), 1.0);
    CHECK(std::abs(response_closed(Scenario::circular(1.0, 1e5), 1.0) - free_v) / free_v < 1e-4);
}

TEST_CASE("response positivity and ordering in free space") {
    for (const double a : {0.3, 1.0, 4.0, 12.0}) {
        for (const auto& sc : {Scenario::linear(a), Scenario::circular(a)}) {
            const auto g = response_pair(sc);
            CHECK(g.g_plus > 0.0);
            CHECK(g.g_minus >= 0.0);
            CHECK(g.g_plus >= g.g_minus);
        }
    }
    CHECK(response_closed(Scenario::inertial(), -1.0) == 0.0);
}

TEST_CASE("quadrature oracle agrees with the closed forms") {
    // linear free space
    {
        const Scenario sc = Scenario::linear(1.0);
        const auto q = response_quadrature(sc, 1.0);
        CHECK(std::abs(q.value - response_closed(sc, 1.0)) / response_closed(sc, 1.0) < 1e-4);
    }
    // flat-space response and the absent excitation channel
    {
        const auto qp = response_quadrature(Scenario::inertial(), 1.0);
        CHECK(std::abs(qp.value - 0.15915494309189534) / 0.15915494309189534 < 1e-4);
        const auto qm = response_quadrature(Scenario::inertial(), -1.0);
        CHECK(std::abs(qm.value) < 1e-6);
    }
    // one mirror case of each trajectory family
    for (const auto& sc : {Scenario::linear(2.0, 0.5), Scenario::circular(2.0, 0.5)})
        for (const double lam : {1.0, -1.0}) {
            const auto q = response_quadrature(sc, lam);
            const double want = response_closed(sc, lam);
            CHECK(std::abs(q.value - want) / std::abs(want) < 1e-4);
        }
}

TEST_CASE("quadrature oracle input contract") {
    const std::array<double, 2> two{1e-3, 1e-4};
    CHECK_THROWS_AS(response_quadrature(Scenario::linear(1.0), 1.0, two), std::invalid_argument);
    const std::array<double, 3> increasing{1e-4, 1e-3, 1e-2};
    CHECK_THROWS_AS(response_quadrature(Scenario::linear(1.0), 1.0, increasing), std::invalid_argument);
    const std::array<double, 3> negative{1e-3, -1e-4, 1e-5};
    CHECK_THROWS_AS(response_quadrature(Scenario::linear(1.0), 1.0, negative), std::invalid_argument);
    CHECK_THROWS_AS(response_quadrature(Scenario::linear(1.0), 0.0), std::invalid_argument);
}

TEST_CASE("small-z expansion of the mirror factor") {
    for (const double a : {0.5, 2.0})
        for (const double z : {1e-2, 1e-3})
            for (const double lam : {1.0, -1.0}) {
                const double got = response_closed(Scenario::linear(a, z), lam);
                const double v = lam * lam * z * z, w = a * a * z * z;
                const double series = (2.0 / 3.0) * (v + w) - (2.0 / 15.0) * v * v -
                                      (2.0 / 3.0) * v * w - (8.0 / 15.0) * w * w;
                const double want = response_closed(Scenario::linear(a), lam) * series;
                CHECK(got == Approx(want).epsilon(1e-3));
            }
}

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "gphase/model.hpp"
#include "gphase/numerics/bisection.hpp"
#include "gphase/numerics/extrapolation.hpp"
#include "gphase/numerics/gauss_kronrod.hpp"
#include "gphase/numerics/runge_kutta.hpp"

using namespace gphase;
using namespace gphase::numerics;

TEST_CASE("gauss-kronrod handles smooth and oscillatory integrands") {
    auto poly = [](double x) { return x * x; };
    CHECK(integrate_adaptive<double>(poly, 0.0, 1.0).value == Catch::Approx(1.0 / 3.0).epsilon(1e-14));

    auto osc = [](double x) { return std::cos(10.0 * x) * std::exp(-x); };
    // antiderivative of e^{-x} cos(10x): e^{-x}(10 sin(10x) - cos(10x))/101
    auto exact = [](double x) { return std::exp(-x) * (10.0 * std::sin(10.0 * x) - std::cos(10.0 * x)) / 101.0; };
    const auto q = integrate_adaptive<double>(osc, 0.0, 20.0);
    CHECK(q.value == Catch::Approx(exact(20.0) - exact(0.0)).margin(1e-12));
    CHECK(q.converged);
}

TEST_CASE("gauss-kronrod breakpoints resolve sharp features") {
    const double eps = 1e-4;
    auto spike = [eps](double x) { return eps / (x * x + eps * eps); }; // integral over R = pi
    const std::vector<double> bps{-10 * eps, -eps, eps, 10 * eps};
    const auto q = integrate_adaptive<double>(spike, -50.0, 50.0, bps);
    CHECK(q.value == Catch::Approx(2.0 * std::atan(50.0 / eps)).epsilon(1e-12));
}

TEST_CASE("gauss-kronrod integrates complex integrands") {
    auto f = [](double x) { return std::exp(std::complex<double>(0.0, x)); };
    const auto q = integrate_adaptive<std::complex<double>>(f, 0.0, kPi / 2.0);
    CHECK(std::real(q.value) == Catch::Approx(1.0).epsilon(1e-13));
    CHECK(std::imag(q.value) == Catch::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("neville extrapolation to zero") {
    // f(eps) = exp(-2 eps): value at 0 is 1
    std::vector<double> xs{8e-3, 4e-3, 2e-3, 1e-3};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(std::exp(-2.0 * x));
    const auto ex = neville_at_zero(xs, ys);
    CHECK(ex.value == Catch::Approx(1.0).epsilon(1e-9));
    CHECK(ex.residual < 1e-6);
    CHECK(std::abs(ex.value - 1.0) < 10 * (ex.residual + 1e-12));
}

TEST_CASE("bisection finds bracketed roots") {
    const double r = bisect([](double x) { return std::cos(x); }, 1.0, 2.0, 1e-15);
    CHECK(r == Catch::Approx(kPi / 2.0).epsilon(1e-14));
    CHECK_THROWS_AS(bisect([](double x) { return 1.0 + x * x; }, -1.0, 1.0), bracket_error);

    const auto brackets =
        sign_change_brackets([](double x) { return std::sin(x); }, 0.1, 9.0, 900);
    REQUIRE(brackets.size() == 2); // pi and 2 pi
    CHECK(brackets[0].first < kPi);
    CHECK(brackets[0].second > kPi);
}

TEST_CASE("cash-karp integrates linear decay to requested accuracy") {
    auto rhs = [](double, const std::array<double, 1>& y, std::array<double, 1>& dy) {
        dy[0] = -y[0];
    };
    std::array<double, 1> y{1.0};
    OdeOptions opt;
    opt.tol = 1e-10;
    double t_last = 0.0;
    integrate_cash_karp<1>(rhs, y, 0.0, 5.0, opt, [&](double t, const std::array<double, 1>&) {
        t_last = t;
    });
    CHECK(t_last == 5.0);
    CHECK(y[0] == Catch::Approx(std::exp(-5.0)).margin(1e-9));
}

TEST_CASE("cash-karp conserves the harmonic oscillator energy to tolerance") {
    auto rhs = [](double, const std::array<double, 2>& y, std::array<double, 2>& dy) {
        dy[0] = y[1];
        dy[1] = -y[0];
    };
    std::array<double, 2> y{1.0, 0.0};
    OdeOptions opt;
    opt.tol = 1e-11;
    integrate_cash_karp<2>(rhs, y, 0.0, 20.0 * kPi, opt, [](double, const std::array<double, 2>&) {});
    CHECK(y[0] * y[0] + y[1] * y[1] == Catch::Approx(1.0).margin(1e-9));
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "tof/quadrature.hpp"

using namespace tof;
using Catch::Approx;

TEST_CASE("finite interval, smooth real integrand") {
    QuadratureSpec spec;
    const double v = integrate([](double x) { return std::sin(x); }, 0.0, pi, spec);
    CHECK(v == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("finite interval, complex integrand") {
    QuadratureSpec spec;
    const cplx v = integrate([](double x) { return exp_c(cplx{0.0, x}); }, 0.0, 1.0, spec);
    CHECK(std::real(v) == Approx(std::sin(1.0)).epsilon(1e-12));
    CHECK(std::imag(v) == Approx(1.0 - std::cos(1.0)).epsilon(1e-12));
}

TEST_CASE("subdivision handles a sharp interior peak") {
    QuadratureSpec spec;
    auto f = [](double x) {
        const double d = x - 0.6180339887;
        return 1.0 / (d * d + 1e-6);
    };
    // arctan antiderivative, evaluated in extended precision
    const double a = 0.6180339887;
    const double exact = (std::atan((1.0 - a) * 1e3) + std::atan(a * 1e3)) * 1e3;
    CHECK(integrate(f, 0.0, 1.0, spec) == Approx(exact).epsilon(1e-9));
}

TEST_CASE("sqrt endpoint singularity at the origin") {
    QuadratureSpec spec;
    spec.endpoint_singularity = EndpointSingularity::sqrt_origin;
    // Int_0^1 dx/sqrt(x) = 2, regular quadrature stalls on this one
    const double v = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec);
    CHECK(v == Approx(2.0).epsilon(1e-10));

    // sqrt weight times a smooth factor
    const double w =
        integrate([](double x) { return std::sqrt(x) * std::cos(x); }, 0.0, 1.0, spec);
    CHECK(w == Approx(0.53120268308451540).epsilon(1e-10));
}

TEST_CASE("sqrt_origin demands the interval start at zero") {
    QuadratureSpec spec;
    spec.endpoint_singularity = EndpointSingularity::sqrt_origin;
    CHECK_THROWS_AS(integrate([](double x) { return std::sqrt(x); }, 0.5, 1.0, spec),
                    SingularityNotRegularized);
}

TEST_CASE("oscillation hint splits the window up front") {
    QuadratureSpec spec;
    spec.oscillation_wavenumber = 40.0;
    const double v =
        integrate([](double x) { return std::cos(40.0 * x); }, 0.0, 1.0, spec);
    CHECK(v == Approx(std::sin(40.0) / 40.0).epsilon(1e-10));
}

TEST_CASE("half-line map reproduces Gaussian moments") {
    QuadratureSpec spec;
    const double v = integrate_halfline(
        [](double p) { return std::exp(-0.5 * p * p); }, 0.0, spec);
    CHECK(v == Approx(std::sqrt(pi / 2.0)).epsilon(1e-11));

    const double shifted = integrate_halfline(
        [](double p) { return std::exp(-(p - 1.0) * (p - 1.0)); }, 1.0, spec);
    CHECK(shifted == Approx(0.5 * std::sqrt(pi)).epsilon(1e-11));
}

TEST_CASE("real-line map reproduces normal density mass") {
    QuadratureSpec spec;
    const double v = integrate_real_line(
        [](double p) { return std::exp(-p * p / 4.0); }, spec);
    CHECK(v == Approx(2.0 * std::sqrt(pi)).epsilon(1e-11));
}

TEST_CASE("non convergence surfaces as an exception") {
    QuadratureSpec spec;
    spec.abs_tol = 1e-300;
    spec.rel_tol = 1e-300;
    spec.max_subdivisions = 12;
    CHECK_THROWS_AS(
        integrate([](double x) { return 1.0 / (x * x + 1e-12); }, -1.0, 1.0, spec),
        NonConvergence);
}

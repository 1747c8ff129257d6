#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "tof/quadrature.hpp"
#include "tof/states.hpp"

using namespace tof;
using Catch::Approx;

namespace {
void check_close(cplx got, cplx want, double rel) {
    CAPTURE(got, want);
    CHECK(std::abs(got - want) <= rel * std::abs(want));
}
}  // namespace

TEST_CASE("width parameter of the trapped packet") {
    check_close(magnetic_sigma(1.0, 0.5), oracle::sigma_1_05, 1e-14);
    check_close(magnetic_sigma(1.0, 1.0), oracle::sigma_1_1, 1e-14);
    check_close(magnetic_sigma(2.0, 0.5), oracle::sigma_2_05, 1e-14);
    check_close(magnetic_sigma(0.0, 0.5), oracle::sigma_0_05, 1e-14);
}

TEST_CASE("magnetic packet modulus follows the spreading law") {
    const MagneticState st{0.7};
    const Vec3 x{0.4, -0.3, 1.1};
    for (double t : {0.0, 0.5, 2.0}) {
        const double r2 = x.x * x.x + x.y * x.y;
        const double want = std::pow(pi, -0.75) * std::pow(1.0 + t * t, -0.25) *
                            std::exp(-0.5 * r2 - 0.5 * x.z * x.z / (1.0 + t * t));
        CAPTURE(t);
        // the z-gauge term is a pure phase: primed and unprimed share |psi|
        CHECK(std::abs(st.value(x, t, true)) == Approx(want).epsilon(1e-13));
        CHECK(std::abs(st.value(x, t, false)) == Approx(want).epsilon(1e-13));
    }
}

TEST_CASE("magnetic gradient matches finite differences") {
    const MagneticState st{0.7};
    const Vec3 x{0.4, -0.3, 1.1};
    const double t = 2.0, h = 1e-5;
    const Vec3c g = st.gradient(x, t, true);
    auto fd = [&](Vec3 dx) {
        return (st.value(x + dx, t, true) - st.value(x - dx, t, true)) / (2.0 * h);
    };
    CHECK(std::abs(g.x - fd({h, 0, 0})) < 1e-9);
    CHECK(std::abs(g.y - fd({0, h, 0})) < 1e-9);
    CHECK(std::abs(g.z - fd({0, 0, h})) < 1e-9);
}

TEST_CASE("momentum amplitude is the transform of the position amplitude") {
    const MagneticState st{0.5};
    const double t = 1.0;
    // compare z-profiles through the ratio, which cancels transverse factors
    QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    auto ft = [&](double p) {
        return integrate_real_line(
                   [&](double z) {
                       return st.value({0.0, 0.0, z}, t, true) *
                              exp_c(cplx{0.0, -p * z});
                   },
                   spec) /
               sqrt_two_pi;
    };
    const cplx ratio_direct = ft(0.7) / ft(0.0);
    const cplx ratio_closed = st.momentum_value({0.0, 0.0, 0.7}, t, true) /
                              st.momentum_value({0.0, 0.0, 0.0}, t, true);
    check_close(ratio_closed, ratio_direct, 1e-9);
}

TEST_CASE("momentum z factor against the reference value") {
    const MagneticState st{0.5};
    const PacketZ f = st.z_factor_momentum(1.0);
    check_close(f.momentum_value(0.7), oracle::fz_momentum_07, 1e-12);
    // consistency with the full 3d amplitude: transverse ground state at p=0
    const cplx full = st.momentum_value({0.0, 0.0, 0.7}, 1.0, true);
    check_close(full, f.momentum_value(0.7) / sqrt_pi, 1e-12);
}

TEST_CASE("phase gradient of the trapped packet") {
    const MagneticState st{0.5};
    const Vec3 x{0.4, -0.3, 1.1};
    const double t = 2.0;
    const auto un = polar_decompose(st.value(x, t, false), st.gradient(x, t, false));
    CHECK(un.grad_S.x == Approx(0.0).margin(1e-13));
    CHECK(un.grad_S.y == Approx(0.0).margin(1e-13));
    CHECK(un.grad_S.z == Approx(t * x.z / (1.0 + t * t)).epsilon(1e-12));
    const auto pr = polar_decompose(st.value(x, t, true), st.gradient(x, t, true));
    CHECK(pr.grad_S.z ==
          Approx(t * x.z / (1.0 + t * t) - 0.5 * x.z).epsilon(1e-12));
}

TEST_CASE("polar decomposition refuses a node") {
    CHECK_THROWS_AS(polar_decompose({0.0, 0.0}, {}), NodeEncountered);
}

TEST_CASE("separable free packet wiring") {
    const SeparableFreeState st{PacketZ::width_boost(1.0, 3.0),
                                1.0 / std::sqrt(2.0)};
    const Vec3 x{0.2, 0.1, 2.9};
    const double t = 1.0, h = 1e-5;
    const Vec3c g = st.gradient(x, t);
    auto fd = [&](Vec3 dx) {
        return (st.value(x + dx, t) - st.value(x - dx, t)) / (2.0 * h);
    };
    CHECK(std::abs(g.x - fd({h, 0, 0})) < 1e-9);
    CHECK(std::abs(g.y - fd({0, h, 0})) < 1e-9);
    CHECK(std::abs(g.z - fd({0, 0, h})) < 1e-9);
    // |psi~| is conserved by free evolution
    const Vec3 p{0.3, -0.1, 3.2};
    CHECK(std::abs(st.momentum_value(p, 4.0)) ==
          Approx(std::abs(st.momentum_value(p, 0.0))).epsilon(1e-12));
}

TEST_CASE("free evolution dispatcher") {
    WavePacketSpec spec;
    spec.family = Family::free_gaussian;
    spec.alpha = 1.0;
    spec.beta = 3.0;
    const Vec3 p{0.3, -0.1, 3.2};
    const SeparableFreeState st{PacketZ::width_boost(1.0, 3.0),
                                1.0 / std::sqrt(2.0)};
    check_close(evolve_free_momentum(spec, p, 1.7), st.momentum_value(p, 1.7), 1e-13);

    WavePacketSpec mag;
    mag.family = Family::magnetic_gaussian;
    CHECK_THROWS_AS(evolve_free_momentum(mag, p, 0.0), UnsupportedFamily);
}

TEST_CASE("tabulated amplitude interpolates and renormalises") {
    auto table = std::make_shared<TabulatedAmplitude>();
    const int n = 41;
    const double lo = -5.0, h = 10.0 / (n - 1);
    for (int i = 0; i < n; ++i) {
        table->px.push_back(lo + i * h);
        table->py.push_back(lo + i * h);
        table->pz.push_back(lo + i * h);
    }
    table->values.resize(static_cast<size_t>(n) * n * n);
    auto gauss = [](Vec3 p) {
        return std::pow(pi, -0.75) * std::exp(-0.5 * p.norm2());
    };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                table->values[(static_cast<size_t>(i) * n + j) * n + k] =
                    gauss({table->px[i], table->py[j], table->pz[k]});
    table->normalize();

    // Riemann norm is one after normalisation
    double riemann = 0.0;
    for (const cplx& v : table->values) riemann += std::norm(v);
    riemann *= h * h * h;
    CHECK(riemann == Approx(1.0).epsilon(1e-12));

    // the sampled function was normalised already, so scaling is mild and
    // midpoint interpolation errs only at second order in h
    // trilinear midpoint error near the peak is 3 h^2/8 of the curvature
    const Vec3 mid{0.5 * h, 0.5 * h, 0.5 * h};
    CHECK(std::abs((*table)(mid)) == Approx(gauss(mid)).epsilon(0.03));
    CHECK((*table)(Vec3{6.0, 0.0, 0.0}) == cplx{0.0, 0.0});

    WavePacketSpec spec;
    spec.family = Family::tabulated;
    spec.table = table;
    const cplx tv = evolve_free_momentum(spec, {0.2, 0.3, 0.4}, 2.0);
    CHECK(std::abs(tv) == Approx(std::abs((*table)(Vec3{0.2, 0.3, 0.4}))).epsilon(1e-12));
}

TEST_CASE("gauge field components") {
    const VectorPotential A{1.0, 0.5};
    const Vec3 v = A({0.4, -0.3, 1.1});
    CHECK(v.x == Approx(0.3).epsilon(1e-15));
    CHECK(v.y == Approx(0.4).epsilon(1e-15));
    CHECK(v.z == Approx(-0.55).epsilon(1e-15));
}

#pragma once

// Kijowski's arrival-time quadratic form on the plane z = L: the
// right-mover form, the generic two-sided form, the arrival-time density
// under free evolution, and the late-time report exhibiting the sqrt|t|
// growth of t^2 F0 that rules out a uniform C/t^2 bound (axiom v).

#include <cmath>
#include <complex>
#include <concepts>
#include <numbers>
#include <vector>

#include "tof/common.hpp"
#include "tof/gaussian1d.hpp"
#include "tof/quadrature.hpp"
#include "tof/states.hpp"
#include "tof/vec3.hpp"

namespace tof {

struct PlaneDetector {
    double L = 1.0;
};

// --- separable states ------------------------------------------------------
// The transverse factor is normalized, so its plane integral collapses to 1
// (the Gauss-Hermite product rule for a Gaussian weight times a constant is
// the norm itself) and only the z-factor half-line integrals survive.

inline double f0_full(const SeparableFreeState& state, PlaneDetector det) {
    const auto [ip, im] = state.zf.shifted_phase(det.L).halfline_pair();
    return (std::norm(ip) + std::norm(im)) / two_pi;
}

inline double f0_right(const SeparableFreeState& state, PlaneDetector det) {
    if (state.zf.left_norm2() >= 1e-8)
        throw NotRightMoving("left-moving mass exceeds 1e-8; use f0_full");
    const auto pair = state.zf.shifted_phase(det.L).halfline_pair();
    return std::norm(pair.first) / two_pi;
}

// --- generic amplitudes -----------------------------------------------------
// Tabulated packets and wrapped callables go through tensorized adaptive
// quadrature: an outer (p_x, p_y) product rule over the transverse plane and
// a half-line sqrt-weight integral along p_z per transverse node.

namespace detail {

// Smallest probed radius beyond which the amplitude is negligible; generic
// callables do not expose their support.  Probing axes and cube diagonals on
// two shells is enough for the families used here (Gaussian products and
// compactly supported tables).
template <class Amp>
double support_radius(Amp& amp) {
    static constexpr double dirs[14][3] = {
        {1, 0, 0},   {-1, 0, 0},  {0, 1, 0},   {0, -1, 0},  {0, 0, 1},
        {0, 0, -1},  {1, 1, 1},   {1, 1, -1},  {1, -1, 1},  {1, -1, -1},
        {-1, 1, 1},  {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}};
    const double diag = 1.0 / std::sqrt(3.0);
    auto shell_max = [&](double r) {
        double m = 0.0;
        for (int i = 0; i < 14; ++i) {
            const double s = i < 6 ? 1.0 : diag;
            m = std::max(m, std::abs(amp(Vec3{r * s * dirs[i][0],
                                              r * s * dirs[i][1],
                                              r * s * dirs[i][2]})));
        }
        return m;
    };
    double ref = std::abs(amp(Vec3{0.0, 0.0, 0.0}));
    for (double r : {0.5, 1.0, 2.0}) ref = std::max(ref, shell_max(r));
    if (ref == 0.0)
        throw InsufficientTailCoverage("amplitude vanishes at every probe");
    for (double R = 4.0; R <= 1024.0; R *= 2.0)
        if (shell_max(R) + shell_max(0.7 * R) < 1e-9 * ref) return R;
    throw InsufficientTailCoverage("amplitude shows no decay up to radius 1024");
}

// Sum over the requested momentum signs of
//   |Int_0^R dp sqrt(p) amp(px, py, sgn p) e^{i sgn p L}|^2.
template <class Amp>
double f0_profile(Amp& amp, double px, double py, double L, double R,
                  bool both, double rel) {
    QuadratureSpec in;
    in.abs_tol = 1e-4 * rel;
    in.rel_tol = 1e-2 * rel;
    in.endpoint_singularity = EndpointSingularity::sqrt_origin;
    in.oscillation_wavenumber = std::abs(L) * std::sqrt(R);
    double out = 0.0;
    for (int sg : {1, -1}) {
        if (sg < 0 && !both) break;
        auto f = [&](double p) {
            return std::sqrt(p) * amp(Vec3{px, py, sg * p}) *
                   exp_c(cplx{0.0, sg * p * L});
        };
        out += std::norm(integrate(f, 0.0, R, in));
    }
    return out;
}

// Tolerances tighten inward so the inner integrals stay below the levels
// the outer rules resolve.
template <class Amp>
double f0_tensorized(Amp& amp, double L, double R, bool both, double rel) {
    QuadratureSpec mid;
    mid.abs_tol = 1e-3 * rel;
    mid.rel_tol = 1e-1 * rel;
    QuadratureSpec outer;
    outer.abs_tol = 1e-2 * rel;
    outer.rel_tol = rel;
    auto row = [&](double px) {
        auto g = [&](double py) {
            return f0_profile(amp, px, py, L, R, both, rel);
        };
        return integrate(g, -R, R, mid);
    };
    return integrate(row, -R, R, outer) / two_pi;
}

// Mass of the amplitude on the p_z < 0 half-space.
template <class Amp>
double left_mass(Amp& amp, double R) {
    QuadratureSpec in;
    in.abs_tol = 1e-13;
    in.rel_tol = 1e-7;
    auto row = [&](double px) {
        auto g = [&](double py) {
            auto h = [&](double p) {
                return std::norm(amp(Vec3{px, py, -p}));
            };
            return integrate(h, 0.0, R, in);
        };
        return integrate(g, -R, R, in);
    };
    return integrate(row, -R, R, in);
}

}  // namespace detail

// rel_tol is the target relative accuracy of the density; interpolated
// tables gain nothing past their own interpolation error, so callers may
// relax it well below the default.
template <class Amp>
    requires std::invocable<Amp&, Vec3>
double f0_full(Amp&& amp, PlaneDetector det, double rel_tol = 1e-9) {
    const double R = detail::support_radius(amp);
    return detail::f0_tensorized(amp, det.L, R, true, rel_tol);
}

template <class Amp>
    requires std::invocable<Amp&, Vec3>
double f0_right(Amp&& amp, PlaneDetector det, double rel_tol = 1e-9) {
    const double R = detail::support_radius(amp);
    if (detail::left_mass(amp, R) >= 1e-8)
        throw NotRightMoving("left-moving mass exceeds 1e-8; use f0_full");
    return detail::f0_tensorized(amp, det.L, R, false, rel_tol);
}

// --- arrival-time density ---------------------------------------------------
// F0 of the freely evolved amplitude.  The transverse evolution phase drops
// out of |.|^2 and the transverse norm is conserved, so separable families
// only evolve their z-factor; for them the density coincides with the
// one-dimensional two-sided density of that factor.
inline double pi_kij(const WavePacketSpec& spec, PlaneDetector det,
                     double tau) {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2_v<double>;
    switch (spec.family) {
        case Family::free_gaussian:
            return f0_full(
                SeparableFreeState{
                    PacketZ::width_boost(spec.alpha, spec.beta).evolved(tau),
                    1.0 / (spec.alpha * std::numbers::sqrt2_v<double>)},
                det);
        case Family::right_moving_gaussian:
            return f0_full(
                SeparableFreeState{
                    PacketZ::right_half_gaussian(0.0, inv_sqrt2).evolved(tau),
                    inv_sqrt2},
                det);
        case Family::tabulated: {
            auto amp = [&](Vec3 p) { return evolve_free_momentum(spec, p, tau); };
            // trilinear tables limit the density to grid-squared accuracy;
            // integrating tighter than that only fights interpolation kinks
            return f0_full(amp, det, 1e-4);
        }
        case Family::magnetic_gaussian:
            throw UnsupportedFamily(
                "magnetic family does not evolve freely; use the flux module");
    }
    return 0.0;
}

// --- late-time counterexample ----------------------------------------------
// For the right-moving Gaussian at L = 0 the density decays like
// (1+t^2)^{-3/4}, so t^2 F0(phi_t) grows like sqrt|t| and no bound C/t^2
// holds (axiom v fails); the density still integrates to 1, but covering
// 99% of the mass takes |t| of order 1e4.
struct LateTimeReport {
    std::vector<double> t;          // log-spaced sample times
    std::vector<double> t2_f0;      // t^2 F0(phi_t) at those times
    double growth_exponent = 0.0;   // log-log least-squares slope of t2_f0
    double mass_1e3 = 0.0;          // arrival probability within |t| <= 1e3
    double mass_1e4 = 0.0;          // and within |t| <= 1e4
    bool unbounded = false;         // growth_exponent within 0.5 +/- 0.05
};

inline LateTimeReport axiom_v_counterexample_report() {
    const double sp = 1.0 / std::numbers::sqrt2_v<double>;
    const PacketZ phi0 = PacketZ::right_half_gaussian(0.0, sp);
    const PlaneDetector det{0.0};
    auto f0_at = [&](double t) {
        return f0_right(SeparableFreeState{phi0.evolved(t), sp}, det);
    };

    LateTimeReport rep;
    const int n = 61;
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double lt = std::log(10.0) * (1.0 + 3.0 * i / (n - 1.0));
        const double t = std::exp(lt);
        const double y = t * t * f0_at(t);
        rep.t.push_back(t);
        rep.t2_f0.push_back(y);
        sx += lt;
        sy += std::log(y);
        sxx += lt * lt;
        sxy += lt * std::log(y);
    }
    rep.growth_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    rep.unbounded = std::abs(rep.growth_exponent - 0.5) <= 0.05;

    QuadratureSpec spec;
    spec.abs_tol = 1e-14;
    spec.rel_tol = 1e-10;
    // phi_0 is real, so F0(phi_{-t}) = F0(phi_t) and the mass doubles
    rep.mass_1e3 = 2.0 * integrate(f0_at, 0.0, 1e3, spec);
    rep.mass_1e4 = rep.mass_1e3 + 2.0 * integrate(f0_at, 1e3, 1e4, spec);
    return rep;
}

}  // namespace tof

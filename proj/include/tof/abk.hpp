#pragma once

// Axiomatic arrival-time distribution for free motion toward a plane at
// distance L, plus its position-space cross-check form, mean arrival time,
// and supporting diagnostics.  Everything here works on the z factor of a
// separable state with unit-norm transverse part.

#include <cmath>
#include <complex>
#include <concepts>
#include <optional>

#include "tof/common.hpp"
#include "tof/curve.hpp"
#include "tof/gaussian1d.hpp"
#include "tof/quadrature.hpp"

namespace tof {

// Free classical crossing time of the plane z = L, if the particle ever
// reaches it.  Starting on the plane counts as immediate arrival.
inline std::optional<double> classical_tof(double z0, double vz, double L) {
    if (z0 == L) return 0.0;
    if (vz == 0.0) return std::nullopt;
    const double t = (L - z0) / vz;
    if (t < 0.0) return std::nullopt;
    return t;
}

// Momentum-space form: both momentum signs contribute incoherently.
//   Pi(tau) = (|I+|^2 + |I-|^2) / (2 pi),
//   I+ = Int_0^inf sqrt(p) psi~_tau(p) e^{+ipL} dp,
//   I- = Int_0^inf sqrt(p) psi~_tau(-p) e^{-ipL} dp.
inline double pi_ab(const PacketZ& psi0, double L, double tau) {
    const auto [ip, im] = psi0.evolved(tau).shifted_phase(L).halfline_pair();
    return (std::norm(ip) + std::norm(im)) / two_pi;
}

namespace detail {

// Second derivative by central differences at two step sizes; wildly
// inconsistent estimates flag a kink or jump in the wave function, which the
// subtraction below cannot regularize.
template <class Psi>
cplx fd_second(Psi& psi, double z, cplx at_z) {
    const double h = 1e-4;
    const cplx d2a = (psi(z + h) - 2.0 * at_z + psi(z - h)) / (h * h);
    const cplx d2b =
        (psi(z + 0.5 * h) - 2.0 * at_z + psi(z - 0.5 * h)) / (0.25 * h * h);
    const double scale = std::abs(d2a) + std::abs(d2b) + 1e-12 * std::abs(at_z);
    if (std::abs(d2a - d2b) > 0.3 * scale + 1e-300)
        throw SingularityNotRegularized(
            "wave function is not twice differentiable at the detector plane");
    return d2b;
}

}  // namespace detail

// Position-space form of the same density, following the half-line integral
// representation with the singular subtraction done analytically: a Taylor
// patch covers [0, v0] where the subtracted integrand loses all precision to
// cancellation, and the truncated tail is closed assuming the amplitude has
// levelled off beyond the window (to zero for normalizable states, to the
// constant itself for a constant amplitude).  psi_tau is the already-evolved
// position amplitude.
template <class Psi>
    requires std::invocable<Psi&, double>
double pi_ab_leavens(Psi&& psi_tau, double L, double v0 = 0.05) {
    const cplx pL = psi_tau(L);

    // grow the window until the amplitude stops varying beyond it
    auto mag = [&](double z) { return std::abs(psi_tau(z)); };
    const double ref =
        std::max({std::abs(pL), mag(L + 2.0), mag(L - 2.0), mag(L + 8.0),
                  mag(L - 8.0), 1e-300});
    double W = 16.0;
    while (std::abs(psi_tau(L + W) - psi_tau(L + 2.25 * W)) +
               std::abs(psi_tau(L - W) - psi_tau(L - 2.25 * W)) >
           1e-12 * ref * std::sqrt(W)) {
        W *= 2.0;
        if (W > 1e9)
            throw InsufficientTailCoverage(
                "position amplitude does not settle away from the detector");
    }

    // derivatives at the plane; fourth-order first derivative, the higher two
    // enter suppressed by v0^3 and v0^5.  Grouping as differences of mirrored
    // values keeps the stencils exactly zero on constant amplitudes.
    const double h1 = 1e-4;
    const cplx g1a = psi_tau(L + h1) - psi_tau(L - h1);
    const cplx g1b = psi_tau(L + 2.0 * h1) - psi_tau(L - 2.0 * h1);
    const cplx d1 = (8.0 * g1a - g1b) / (12.0 * h1);
    const cplx d2 = detail::fd_second(psi_tau, L, pL);
    const double h3 = 1e-3;
    const cplx g3a = psi_tau(L + h3) - psi_tau(L - h3);
    const cplx g3b = psi_tau(L + 2.0 * h3) - psi_tau(L - 2.0 * h3);
    const cplx d3 = (g3b - 2.0 * g3a) / (2.0 * h3 * h3 * h3);

    QuadratureSpec spec;
    spec.abs_tol = 1e-16 * ref;
    spec.rel_tol = 1e-9;
    spec.max_subdivisions = 3000;

    const double vmax = std::sqrt(W);
    cplx piece[2];
    for (int si = 0; si < 2; ++si) {
        const int sgn = si == 0 ? 1 : -1;
        const cplx patch =
            2.0 * (static_cast<double>(sgn) * d1 * v0 +
                   d2 * v0 * v0 * v0 / 6.0 +
                   static_cast<double>(sgn) * d3 * std::pow(v0, 5) / 30.0);
        auto f = [&](double v) {
            return (psi_tau(L + sgn * v * v) - pL) / (v * v);
        };
        // tail of the subtracted integrand beyond vmax, with the amplitude
        // frozen at its far value
        const cplx tail = 2.0 * (psi_tau(L + sgn * W) - pL) / vmax;
        piece[si] = patch + 2.0 * integrate(f, v0, vmax, spec) + tail;
    }

    double total = 0.0;
    for (int alpha : {1, -1}) {
        cplx acc{0.0, 0.0};
        for (int si = 0; si < 2; ++si) {
            const int sgn = si == 0 ? 1 : -1;
            acc += cplx{1.0, static_cast<double>(alpha * sgn)} * piece[si];
        }
        total += std::norm(acc);
    }
    return total / (32.0 * pi);
}

// Same density from a time-dependent position amplitude psi(z, t), evaluated
// at time tau.
template <class Psi>
    requires std::invocable<Psi&, double, double>
double pi_ab_leavens(Psi&& psi, double L, double tau) {
    return pi_ab_leavens([&](double z) { return psi(z, tau); }, L);
}

// Mean arrival time as the quadratic form of the arrival-time operator,
//   <tau> = -(1/4) Int dz dz' (2L - z - z') sgn(z - z') Im[psi0*(z) psi0(z')].
// psi0 is the initial position amplitude; real amplitudes give 0.
template <class Psi>
double abk_mean_arrival(Psi&& psi0, double L) {
    auto mag = [&](double z) { return std::abs(psi0(z)); };
    const double ref = std::max({mag(0.0), mag(1.0), mag(-1.0), 1e-300});
    double W = 8.0;
    while (mag(W) + mag(-W) > 1e-12 * ref) {
        W *= 2.0;
        if (W > 1e6)
            throw NonConvergence(
                "initial amplitude does not decay; mean arrival undefined");
    }

    QuadratureSpec inner;
    inner.abs_tol = 1e-15;
    inner.rel_tol = 1e-10;
    QuadratureSpec outer;
    outer.abs_tol = 1e-12;
    outer.rel_tol = 1e-8;

    auto row = [&](double z) {
        const cplx cz = std::conj(psi0(z));
        auto kern = [&](double zp) {
            return (2.0 * L - z - zp) * std::imag(cz * psi0(zp));
        };
        // sgn(z - z') splits the inner line at z' = z
        return integrate(kern, -W, z, inner) - integrate(kern, z, W, inner);
    };
    return -0.25 * integrate(row, -W, W, outer);
}

// Probability that the detector never fires: the mass the sampled density
// carries at negative times, Int_0^inf Pi(-tau) dtau.  The curve must reach
// far enough into tau < 0 for the truncated remainder to be negligible.
inline double nondetection_ab(const DistributionCurve& curve) {
    if (curve.tau_grid.empty() || curve.tau_grid.front() >= 0.0)
        throw InsufficientTailCoverage(
            "curve carries no negative-tau samples to integrate");
    // the generic tail falls like tau^{-3/2} (endpoint contribution of the
    // momentum integral), so the truncated remainder is about twice
    // T * density(-T)
    const double tail_estimate =
        std::abs(curve.tau_grid.front()) * curve.density.front();
    if (tail_estimate > 1e-4)
        throw InsufficientTailCoverage(
            "negative-tau tail estimate exceeds tolerance; extend the grid");
    double mass = 0.0;
    for (std::size_t i = 1; i < curve.tau_grid.size(); ++i) {
        if (curve.tau_grid[i] > 0.0) break;
        mass += 0.5 * (curve.density[i] + curve.density[i - 1]) *
                (curve.tau_grid[i] - curve.tau_grid[i - 1]);
    }
    return mass;
}

// Existence diagnostic for the mean arrival time: the first moment needs
// |psi~(p)| to vanish faster than p^{3/2} toward p = 0.  Probes the scaled
// magnitude on a ladder of small momenta; strict monotone decrease passes.
template <class Amp>
    requires std::invocable<Amp&, double>
bool moment_condition_check(Amp&& amp) {
    double prev = -1.0;
    for (int k = 2; k <= 8; ++k) {
        const double p = std::pow(10.0, -k);
        const double g = std::abs(amp(p)) * std::pow(p, -1.5);
        if (prev >= 0.0 && g >= prev) return false;
        prev = g;
    }
    return true;
}

inline bool moment_condition_check(const PacketZ& psi0) {
    return moment_condition_check(
        [&](double p) { return psi0.momentum_value(p); });
}

}  // namespace tof

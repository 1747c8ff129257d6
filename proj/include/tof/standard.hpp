#pragma once

// The gauge-dependent "standard" arrival-time density of the magnetic trap
// state, its closed parabolic-cylinder form and rotated-contour quadrature
// form, the gauge-dependence metric, the tail/normalizability report, and
// the delta-well bound-state constancy demonstration.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "tof/common.hpp"
#include "tof/halfline.hpp"
#include "tof/parallel.hpp"
#include "tof/quadrature.hpp"
#include "tof/special.hpp"
#include "tof/states.hpp"

namespace tof {

enum class StdMethod { closed_form, direct_quadrature };

struct StdConfig {
    GaugeGeometry geometry;
    std::vector<double> tau_grid;  // sorted, in [0, inf) for physical reporting
    // the quadrature route stays well-conditioned at detector offsets where
    // the cylinder-function arguments grow large, so it is the default
    StdMethod method = StdMethod::direct_quadrature;
};

// Density at the plane z = L: both half-line integrals of the eta-gauge
// z-factor, which is a single complex Gaussian of covariance sigma(tau).
// Negative tau is allowed for diagnostics; Re(1/sigma) > 0 holds throughout.
inline double pi_std_magnetic(const StdConfig& cfg, double tau) {
    const MagneticState st{cfg.geometry.eta};
    const PacketZ zf = st.z_factor_momentum(tau);
    const cplx sigma = zf.terms[0].a;
    const cplx m = zf.terms[0].m;
    double out = 0.0;
    for (int alpha : {1, -1}) {
        const cplx gamma{0.0, alpha * cfg.geometry.L};
        const cplx I = cfg.method == StdMethod::closed_form
                           ? halfline_sqrt_moment(sigma, gamma)
                           : halfline_sqrt_moment_quad(sigma, gamma, {});
        out += std::norm(m * I);
    }
    return out / two_pi;
}

// sup over the shared tau grid of |Pi_a - Pi_b| for two setups that differ
// only in the gauge parameter.
inline double gauge_dependence_metric(const StdConfig& a, const StdConfig& b) {
    if (a.tau_grid != b.tau_grid)
        throw GridMismatch("gauge comparison needs a shared tau grid");
    if (a.tau_grid.empty() || !std::is_sorted(a.tau_grid.begin(), a.tau_grid.end()))
        throw GridMismatch("tau grid must be nonempty and sorted");
    if (a.geometry.L != b.geometry.L || a.geometry.b0 != b.geometry.b0 ||
        a.geometry.q != b.geometry.q)
        throw GridMismatch("setups may differ only in eta");
    std::vector<double> diff(a.tau_grid.size());
    parallel_for(diff.size(), [&](std::size_t i) {
        diff[i] = std::abs(pi_std_magnetic(a, a.tau_grid[i]) -
                           pi_std_magnetic(b, b.tau_grid[i]));
    });
    return *std::max_element(diff.begin(), diff.end());
}

// Limit of tau * Pi_STD as tau -> inf: sigma tends to 1/(i eta), so the
// half-line integrals settle while the prefactor supplies the 1/tau.
inline double std_tail_coefficient(double eta, double L) {
    if (eta == 0.0) return 0.0;
    const cplx root = std::sqrt(cplx{0.0, eta});
    double s = 0.0;
    for (int a : {1, -1})
        s += std::norm(dhat_scaled(-1.5, cplx{0.0, static_cast<double>(a)} * L * root));
    return std::sqrt(std::abs(eta)) / (8.0 * sqrt_pi) * s;
}

// Cumulative mass at growing horizons plus a log-log tail fit over the last
// decade.  A 1/tau tail (eta != 0) makes the mass grow without bound, one
// log-2 step per doubling; at eta = 0 the tail steepens to tau^{-3/2} and
// the mass converges.
struct StdTailReport {
    std::vector<double> horizons;
    std::vector<double> mass;      // Int_0^T of the density
    double tail_exponent = 0.0;    // least-squares slope of log Pi vs log tau
    double coefficient = 0.0;      // c in Pi ~ c tau^exponent at the grid end
    bool divergent = false;
};

inline StdTailReport normalizability_report(const StdConfig& cfg) {
    StdTailReport rep;
    for (double t = 10.0; t <= 1.0001e4; t *= std::sqrt(10.0))
        rep.horizons.push_back(t);

    QuadratureSpec spec;
    spec.abs_tol = 1e-13;
    spec.rel_tol = 1e-8;
    auto density = [&](double t) { return pi_std_magnetic(cfg, t); };
    double acc = 0.0, lo = 0.0;
    for (double hi : rep.horizons) {
        acc += integrate(density, lo, hi, spec);
        rep.mass.push_back(acc);
        lo = hi;
    }

    // fit over the last decade of the horizon list
    const double tmax = rep.horizons.back();
    const int n = 25;
    std::vector<double> lt(n), lp(n);
    parallel_for(n, [&](std::size_t i) {
        const double t = tmax / 10.0 * std::pow(10.0, double(i) / (n - 1));
        lt[i] = std::log(t);
        lp[i] = std::log(pi_std_magnetic(cfg, t));
    });
    double sx = 0, sy = 0, sxx = 0, sxy = 0, st = 0;
    for (int i = 0; i < n; ++i) {
        sx += lt[i];
        sy += lp[i];
        sxx += lt[i] * lt[i];
        sxy += lt[i] * lp[i];
        st += lp[i] + lt[i];
    }
    rep.tail_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    // geometric mean of tau * density over the fitted decade: the 1/tau
    // coefficient whenever the tail exponent is -1
    rep.coefficient = std::exp(st / n);
    rep.divergent = rep.tail_exponent > -1.25;
    return rep;
}

namespace detail {

// Half-line integral of sqrt(p) psi(p) e^{i alpha p L} for the delta-well
// bound state psi(p) = sqrt(2/pi)/(1+p^2) evolved by its energy phase.
// The ray is rotated to alpha * pi/8, inside the pole-free sector where the
// arrival phase decays; p = v^2 removes the sqrt endpoint.
inline cplx delta_well_halfline(double L, double tau, int alpha) {
    const double theta = alpha * pi / 8.0;
    const cplx dir = exp_c(cplx{0.0, theta});
    const cplx rot = exp_c(cplx{0.0, 1.5 * theta});
    const double amp = std::sqrt(2.0 / pi);
    auto f = [&](double v) {
        const double s = v * v;
        const cplx p = dir * s;
        return 2.0 * v * v * amp / (1.0 + p * p) *
               exp_c(cplx{0.0, 0.5 * tau} + cplx{0.0, alpha * L} * p);
    };
    QuadratureSpec spec;
    spec.abs_tol = 1e-14;
    spec.rel_tol = 1e-11;
    return rot * integrate_halfline(f, 0.0, spec);
}

}  // namespace detail

// Bound-state check: for the normalized e^{-|z|} ground state the evolution
// is a pure phase, so the density at any L is the same at every time, a
// nonzero constant that cannot integrate to 1.
struct DeltaWellReport {
    std::vector<double> taus;
    std::vector<double> values;
    double spread = 0.0;  // max pairwise difference
    bool constant = false;
};

inline DeltaWellReport delta_well_constancy() {
    const double L = 1.0;
    DeltaWellReport rep;
    rep.taus = {0.0, 1.0, 5.0, 20.0};
    for (double tau : rep.taus) {
        double v = 0.0;
        for (int alpha : {1, -1})
            v += std::norm(detail::delta_well_halfline(L, tau, alpha));
        rep.values.push_back(v / two_pi);
    }
    const auto [mn, mx] = std::minmax_element(rep.values.begin(), rep.values.end());
    rep.spread = *mx - *mn;
    rep.constant = *mn > 0.0 && rep.spread <= 1e-8 * *mx;
    return rep;
}

}  // namespace tof

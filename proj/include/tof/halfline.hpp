#pragma once

// Half-line Gaussian-oscillatory integrals
//   I(sigma, gamma) = Int_0^inf sqrt(p) exp(-sigma p^2/2 + gamma p) dp
// and the p^{k+1/2} moment ladder built on them.  Closed form:
//   I = Gamma(3/2) sigma^{-3/4} dhat(-3/2, -gamma/sqrt(sigma)),
// principal branch of sqrt(sigma) (Re sqrt > 0), fixed by agreement with the
// direct-quadrature path.  Requires Re sigma >= 0 and sigma != 0.

#include <cmath>
#include <complex>
#include <vector>

#include "tof/common.hpp"
#include "tof/quadrature.hpp"
#include "tof/special.hpp"

namespace tof {

namespace detail {
inline void require_convergent_sigma(cplx sigma) {
    if (sigma.real() < 0.0 || sigma == cplx{0.0, 0.0})
        throw DivergentIntegral("half-line Gaussian integral needs Re sigma >= 0, sigma != 0");
}
}  // namespace detail

// e^{E} I(sigma, gamma); E is a log-scale amplitude folded in before
// exponentiation so large-|gamma| packets never overflow.
inline cplx halfline_sqrt_moment_scaled(cplx sigma, cplx gamma, cplx E) {
    detail::require_convergent_sigma(sigma);
    const cplx rs = std::sqrt(sigma);
    return gamma_3_2 * std::pow(sigma, cplx{-0.75, 0.0}) *
           dhat_scaled(-1.5, -gamma / rs, E);
}

inline cplx halfline_sqrt_moment(cplx sigma, cplx gamma) {
    return halfline_sqrt_moment_scaled(sigma, gamma, cplx{0.0, 0.0});
}

// Public integral with the oscillatory phase exp(i sign p L).
inline cplx halfline_sqrtp_gaussian_integral(cplx sigma, double L, int sign) {
    return halfline_sqrt_moment(sigma, cplx{0.0, sign >= 0 ? L : -L});
}

// Direct-quadrature evaluation on a two-segment contour.  The head runs along
// the real axis through the saddle region with the sqrt(p) endpoint handled
// by the u = v^2 map; the tail leaves the real axis along the steepest
// admissible ray theta = -arg(sigma)/2, where the Gaussian factor decays
// monotonically.  Serves as the independent oracle for the closed form and as
// the user-selectable direct method.
inline cplx halfline_sqrt_moment_quad(cplx sigma, cplx gamma, cplx E,
                                      QuadratureSpec spec = {}) {
    detail::require_convergent_sigma(sigma);
    spec.max_subdivisions = std::max(spec.max_subdivisions, 3000);
    spec.rel_tol = std::min(spec.rel_tol, 1e-9);
    spec.abs_tol = std::min(spec.abs_tol, 1e-200);

    const cplx saddle = gamma / sigma;
    const double p1 = std::max(0.0, saddle.real()) + 8.0 / std::sqrt(std::abs(sigma));

    // head: p = v^2 on [0, sqrt(p1)]
    auto head = [&](double v) {
        const double p = v * v;
        return (2.0 * v) * std::sqrt(p) * exp_c(E - 0.5 * sigma * p * p + gamma * p);
    };
    QuadratureSpec hspec = spec;
    const double vmax = std::sqrt(p1);
    hspec.oscillation_wavenumber =
        2.0 * vmax * std::abs(gamma.imag()) + 2.0 * std::abs(sigma.imag()) * vmax * p1;
    const cplx ihead = integrate(head, 0.0, vmax, hspec);

    // tail: p = p1 + r e^{i theta}
    const double theta = -0.5 * std::arg(sigma);
    const cplx dir = std::exp(cplx{0.0, theta});
    auto tail = [&](double r) {
        const cplx p = p1 + r * dir;
        return dir * std::sqrt(p) * exp_c(E - 0.5 * sigma * p * p + gamma * p);
    };
    const cplx itail = integrate_halfline(tail, 0.0, spec);
    return ihead + itail;
}

// Moment ladder Omega_k = e^{E} Int_0^inf p^{k+1/2} exp(-sigma p^2/2 + gamma p) dp
// for k = -1 .. kmax, returned with index shift result[k+1] <-> Omega_k.
// Upward recursion Omega_k = ((k - 1/2) Omega_{k-2} + gamma Omega_{k-1}) / sigma.
inline std::vector<cplx> omega_moments(cplx sigma, cplx gamma, cplx E, int kmax) {
    detail::require_convergent_sigma(sigma);
    const cplx rs = std::sqrt(sigma);
    const cplx zarg = -gamma / rs;
    std::vector<cplx> om(static_cast<size_t>(kmax) + 2);
    om[0] = sqrt_pi * std::pow(sigma, cplx{-0.25, 0.0}) * dhat_scaled(-0.5, zarg, E);
    if (kmax >= 0)
        om[1] = gamma_3_2 * std::pow(sigma, cplx{-0.75, 0.0}) * dhat_scaled(-1.5, zarg, E);
    for (int k = 1; k <= kmax; ++k)
        om[static_cast<size_t>(k) + 1] =
            ((k - 0.5) * om[static_cast<size_t>(k) - 1] + gamma * om[static_cast<size_t>(k)]) / sigma;
    return om;
}

}  // namespace tof

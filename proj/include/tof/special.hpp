#pragma once

// Parabolic cylinder function D_nu, carried internally in the scaled form
//   dhat(nu, z) = exp(z^2/4) D_nu(z)
// because the closed-form half-line Gaussian integrals produce exactly that
// combination and the bare D overflows first.  dhat_scaled additionally folds
// a caller-supplied log-prefactor E into every exponential so that products
// like e^{E} dhat(z) stay finite when both factors are out of double range.
//
// Branches:
//   |z| <= 4.5                  confluent hypergeometric series
//   |z| <= 35, right half       regularized integral representation
//   |z| >  35, right half       asymptotic series in 1/z^2
//   left half beyond the disk   reflection to the right half plane
// "Right half" means |arg z| <= pi/2 + 0.05; the overlap strip keeps the
// branch switch away from the reflection formula's sensitive region.

#include <cmath>
#include <complex>

#include "tof/common.hpp"
#include "tof/quadrature.hpp"

namespace tof {

namespace detail {

// 1/Gamma(x) for real x, zero at the poles of Gamma.
inline double recip_gamma(double x) {
    if (x <= 0.0 && x == std::floor(x)) return 0.0;
    return 1.0 / std::tgamma(x);
}

// Kummer's M(a, b, w) by direct series; |w| stays <= ~10 here.
inline cplx kummer_m(double a, double b, cplx w) {
    cplx term{1.0, 0.0}, sum{1.0, 0.0};
    for (int n = 0; n < 500; ++n) {
        term *= (a + n) / (b + n) * w / (n + 1.0);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) return sum;
    }
    throw NonConvergence("Kummer series did not converge");
}

}  // namespace detail

// exp(E) * exp(z^2/4) * D_nu(z).  E may be complex (a log-scale amplitude).
inline cplx dhat_scaled(double nu, cplx z, cplx E = cplx{0.0, 0.0}) {
    const double az = std::abs(z);

    if (az <= 4.5) {
        const cplx w = 0.5 * z * z;
        const cplx even = sqrt_pi * detail::recip_gamma(0.5 * (1.0 - nu)) *
                          detail::kummer_m(-0.5 * nu, 0.5, w);
        const cplx odd = sqrt_two_pi * detail::recip_gamma(-0.5 * nu) *
                         detail::kummer_m(0.5 * (1.0 - nu), 1.5, w);
        return exp_c(E) * std::pow(2.0, 0.5 * nu) * (even - z * odd);
    }

    // Nonnegative orders never have an integral representation here; step
    // down with D_{v}(z) = z D_{v-1}(z) - (v-1) D_{v-2}(z).
    if (nu >= 0.0) {
        return z * dhat_scaled(nu - 1.0, z, E) -
               (nu - 1.0) * dhat_scaled(nu - 2.0, z, E);
    }

    if (std::abs(std::arg(z)) <= 0.5 * pi + 0.05) {
        if (az > 35.0) {
            // D_nu(z) ~ e^{-z^2/4} z^nu sum_k a_k, a_0 = 1.
            cplx a{1.0, 0.0}, sum{1.0, 0.0};
            const cplx z2 = z * z;
            for (int k = 0; k < 64; ++k) {
                const cplx next = -a * ((nu - 2.0 * k) * (nu - 2.0 * k - 1.0)) /
                                  (2.0 * (k + 1.0) * z2);
                if (std::abs(next) >= std::abs(a)) break;
                a = next;
                sum += a;
                if (std::abs(a) < 1e-18 * std::abs(sum)) break;
            }
            return exp_c(E + nu * std::log(z)) * sum;
        }
        // dhat = (2/Gamma(-nu)) Int_0^inf u^{-2nu-1} e^{-u^4/2 - z u^2} du,
        // the t = u^2 substitution of the defining integral; regular at 0 for
        // the half-integer orders used here.
        const double rz = z.real();
        const double q = -rz + std::sqrt(rz * rz + 240.0);
        const double umax = std::sqrt(q);
        const double powu = -2.0 * nu - 1.0;
        auto f = [&](double u) {
            const double u2 = u * u;
            return std::pow(u, powu) * exp_c(E - 0.5 * u2 * u2 - z * u2);
        };
        QuadratureSpec spec;
        spec.abs_tol = 1e-200;
        spec.rel_tol = 1e-11;
        spec.max_subdivisions = 4000;
        spec.oscillation_wavenumber = 2.0 * std::abs(z.imag()) * umax;
        const cplx integral = integrate(f, 0.0, umax, spec);
        return 2.0 * detail::recip_gamma(-nu) * integral;
    }

    // Left half plane: reflect.  With s = sign(Im z), and both right-half
    // evaluations already scaled,
    //   dhat(nu, z) = e^{i s pi nu} dhat(nu, -z)
    //              + (sqrt(2 pi)/Gamma(-nu)) e^{i s pi (nu+1)/2}
    //                e^{z^2/2} dhat(-nu-1, -i s z)
    const double s = (z.imag() >= 0.0) ? 1.0 : -1.0;
    const cplx A = std::exp(cplx{0.0, s * pi * nu});
    const cplx B = sqrt_two_pi * detail::recip_gamma(-nu) *
                   std::exp(cplx{0.0, s * pi * (nu + 1.0) * 0.5});
    const cplx rotated = cplx{0.0, -s} * z;
    return A * dhat_scaled(nu, -z, E) +
           B * dhat_scaled(-nu - 1.0, rotated, E + 0.5 * z * z);
}

inline cplx dhat(double nu, cplx z) { return dhat_scaled(nu, z, cplx{0.0, 0.0}); }

// Bare D_nu(z); may overflow where |exp(z^2/4)| alone exceeds double range.
inline cplx parabolic_cylinder_D(double nu, cplx z) {
    return dhat_scaled(nu, z, -0.25 * z * z);
}

}  // namespace tof

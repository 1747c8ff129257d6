#pragma once

// One-dimensional momentum-space packets as finite sums of polynomial-times-
// Gaussian terms.  Free evolution, detector phase shifts, position-space
// values, and the half-line sqrt(p) integrals all stay closed-form for this
// family, which covers every packet the distributions are evaluated on.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tof/common.hpp"
#include "tof/halfline.hpp"
#include "tof/quadrature.hpp"

namespace tof {

namespace detail {
inline cplx pow_int(double p, int k) {
    cplx r{1.0, 0.0};
    for (int i = 0; i < k; ++i) r *= p;
    return r;
}

// Full-line Gaussian moments: mu_k = E[X^k] for the weight
// exp(-a p^2/2 + c p), normalized; mu_0 = 1, mu_1 = c/a,
// mu_k = (c mu_{k-1} + (k-1) mu_{k-2}) / a.
inline std::vector<cplx> gauss_mu(cplx a, cplx c, int kmax) {
    std::vector<cplx> mu(static_cast<size_t>(kmax) + 1);
    mu[0] = {1.0, 0.0};
    if (kmax >= 1) mu[1] = c / a;
    for (int k = 2; k <= kmax; ++k)
        mu[static_cast<size_t>(k)] =
            (c * mu[static_cast<size_t>(k) - 1] +
             (k - 1.0) * mu[static_cast<size_t>(k) - 2]) / a;
    return mu;
}
}  // namespace detail

// m e^{E} p^k exp(-a p^2/2 + b p); E is the log-scale part of the amplitude.
struct GaussTerm {
    int k = 0;
    cplx a{1.0, 0.0};
    cplx b{0.0, 0.0};
    cplx m{1.0, 0.0};
    double E = 0.0;
};

struct PacketZ {
    std::vector<GaussTerm> terms;
    bool right_half = false;  // support restricted to p >= 0

    cplx momentum_value(double p) const {
        if (right_half && p < 0.0) return {0.0, 0.0};
        cplx v{0.0, 0.0};
        for (const auto& t : terms)
            v += t.m * detail::pow_int(p, t.k) *
                 exp_c(cplx{t.E, 0.0} - 0.5 * t.a * p * p + t.b * p);
        return v;
    }

    PacketZ evolved(double tau) const {
        PacketZ out = *this;
        for (auto& t : out.terms) t.a += cplx{0.0, tau};
        return out;
    }

    PacketZ shifted_phase(double L) const {
        PacketZ out = *this;
        for (auto& t : out.terms) t.b += cplx{0.0, L};
        return out;
    }

    // Position-space conjugation: psi~(p) -> conj(psi~(-p)).
    PacketZ conjugate_flip() const {
        if (right_half)
            throw UnsupportedFamily("conjugate_flip of a half-line packet");
        PacketZ out = *this;
        for (auto& t : out.terms) {
            t.a = std::conj(t.a);
            t.b = -std::conj(t.b);
            t.m = std::conj(t.m) * ((t.k % 2) ? -1.0 : 1.0);
        }
        return out;
    }

    // (2 pi)^{-1/2} Int psi~(p) e^{ipz} dp, closed form.
    cplx position_value(double z) const {
        if (right_half)
            throw UnsupportedFamily("position_value of a half-line packet");
        cplx v{0.0, 0.0};
        for (const auto& t : terms) {
            const cplx c = t.b + cplx{0.0, z};
            const auto mu = detail::gauss_mu(t.a, c, t.k);
            v += t.m * std::pow(t.a, cplx{-0.5, 0.0}) * mu[static_cast<size_t>(t.k)] *
                 exp_c(cplx{t.E, 0.0} + 0.5 * c * c / t.a);
        }
        return v;
    }

    // d/dz of position_value, closed form.
    cplx position_derivative(double z) const {
        if (right_half)
            throw UnsupportedFamily("position_derivative of a half-line packet");
        cplx v{0.0, 0.0};
        for (const auto& t : terms) {
            const cplx c = t.b + cplx{0.0, z};
            const auto mu = detail::gauss_mu(t.a, c, t.k);
            // nu_k = d mu_k / dc
            std::vector<cplx> nu(static_cast<size_t>(t.k) + 1);
            nu[0] = {0.0, 0.0};
            if (t.k >= 1) nu[1] = 1.0 / t.a;
            for (int k = 2; k <= t.k; ++k)
                nu[static_cast<size_t>(k)] =
                    (mu[static_cast<size_t>(k) - 1] + c * nu[static_cast<size_t>(k) - 1] +
                     (k - 1.0) * nu[static_cast<size_t>(k) - 2]) / t.a;
            const cplx base = t.m * std::pow(t.a, cplx{-0.5, 0.0}) *
                              exp_c(cplx{t.E, 0.0} + 0.5 * c * c / t.a);
            v += base * cplx{0.0, 1.0} *
                 ((c / t.a) * mu[static_cast<size_t>(t.k)] + nu[static_cast<size_t>(t.k)]);
        }
        return v;
    }

    double norm2() const {
        auto density = [this](double p) {
            const cplx v = momentum_value(p);
            return std::norm(v);
        };
        QuadratureSpec spec;
        spec.abs_tol = 1e-13;
        spec.rel_tol = 1e-12;
        if (right_half) return integrate_halfline(density, 0.0, spec);
        return integrate_real_line(density, spec);
    }

    // Norm of the left-moving content, Int_{-inf}^0 |psi~|^2 dp.
    double left_norm2() const {
        if (right_half) return 0.0;
        auto density = [this](double p) { return std::norm(momentum_value(-p)); };
        QuadratureSpec spec;
        spec.abs_tol = 1e-13;
        spec.rel_tol = 1e-12;
        return integrate_halfline(density, 0.0, spec);
    }

    // I+ = Int_0^inf sqrt(p) psi~(p) dp, I- = Int_0^inf sqrt(p) psi~(-p) dp.
    std::pair<cplx, cplx> halfline_pair() const {
        cplx ip{0.0, 0.0}, im{0.0, 0.0};
        for (const auto& t : terms) {
            const auto om_p = omega_moments(t.a, t.b, cplx{t.E, 0.0}, t.k);
            ip += t.m * om_p[static_cast<size_t>(t.k) + 1];
            if (!right_half) {
                const auto om_m = omega_moments(t.a, -t.b, cplx{t.E, 0.0}, t.k);
                im += t.m * ((t.k % 2) ? -1.0 : 1.0) * om_m[static_cast<size_t>(t.k) + 1];
            }
        }
        return {ip, im};
    }

    // --- constructors ---

    // (2 pi s^2)^{-1/4} exp(-(p - pbar)^2 / (4 s^2))
    static PacketZ gaussian(double pbar, double s) {
        GaussTerm t;
        t.k = 0;
        t.a = {1.0 / (2.0 * s * s), 0.0};
        t.b = {pbar / (2.0 * s * s), 0.0};
        t.m = {std::pow(2.0 * pi * s * s, -0.25), 0.0};
        t.E = -pbar * pbar / (4.0 * s * s);
        return PacketZ{{t}, false};
    }

    // Position-space width alpha, boost beta: psi0(z) ~ e^{-z^2/(2 alpha^2) + i beta z}.
    static PacketZ width_boost(double alpha, double beta) {
        return gaussian(beta, 1.0 / (alpha * std::sqrt(2.0)));
    }

    // Normalized two-bump superposition g(pbar1) + ratio * g(pbar2), equal widths.
    static PacketZ two_bump(double p1, double p2, double ratio, double s) {
        const double ov = std::exp(-(p1 - p2) * (p1 - p2) / (8.0 * s * s));
        const double c = 1.0 / std::sqrt(1.0 + ratio * ratio + 2.0 * ratio * ov);
        PacketZ g1 = gaussian(p1, s), g2 = gaussian(p2, s);
        g1.terms[0].m *= c;
        g2.terms[0].m *= c * ratio;
        g1.terms.push_back(g2.terms[0]);
        return g1;
    }

    // n-th Hermite excitation of the Gaussian, physicists' H_n.
    static PacketZ hermite_excited(double pbar, double s, int n) {
        // H_j coefficient table up to n
        std::vector<std::vector<double>> h(static_cast<size_t>(n) + 1);
        h[0] = {1.0};
        if (n >= 1) h[1] = {0.0, 2.0};
        for (int j = 2; j <= n; ++j) {
            auto& cur = h[static_cast<size_t>(j)];
            cur.assign(static_cast<size_t>(j) + 1, 0.0);
            const auto& p1 = h[static_cast<size_t>(j) - 1];
            const auto& p2 = h[static_cast<size_t>(j) - 2];
            for (size_t i = 0; i < p1.size(); ++i) cur[i + 1] += 2.0 * p1[i];
            for (size_t i = 0; i < p2.size(); ++i) cur[i] -= 2.0 * (j - 1.0) * p2[i];
        }
        // substitute x = alpha (p - pbar) and collect powers of p
        const double alpha = 1.0 / (std::sqrt(2.0) * s);
        std::vector<double> coef(static_cast<size_t>(n) + 1, 0.0);
        const auto& hn = h[static_cast<size_t>(n)];
        for (size_t j = 0; j < hn.size(); ++j) {
            if (hn[j] == 0.0) continue;
            // (alpha (p - pbar))^j
            double binom = 1.0;
            for (size_t i = 0; i <= j; ++i) {
                const double term = hn[j] * std::pow(alpha, static_cast<double>(j)) *
                                    binom * std::pow(-pbar, static_cast<double>(j - i));
                coef[i] += term;
                binom = binom * static_cast<double>(j - i) / static_cast<double>(i + 1);
            }
        }
        double fact = 1.0;
        for (int i = 2; i <= n; ++i) fact *= i;
        const double norm =
            1.0 / std::sqrt(std::sqrt(2.0) * s * std::pow(2.0, n) * fact * sqrt_pi);
        PacketZ out;
        for (int i = 0; i <= n; ++i) {
            if (coef[static_cast<size_t>(i)] == 0.0) continue;
            GaussTerm t;
            t.k = i;
            t.a = {1.0 / (2.0 * s * s), 0.0};
            t.b = {pbar / (2.0 * s * s), 0.0};
            t.m = {norm * coef[static_cast<size_t>(i)], 0.0};
            t.E = -pbar * pbar / (4.0 * s * s);
            out.terms.push_back(t);
        }
        return out;
    }

    // Right-half restriction of a unit Gaussian bump, renormalized:
    // f(p) = N theta(p) exp(-(p - pbar)^2/(4 s^2)).
    static PacketZ right_half_gaussian(double pbar, double s) {
        PacketZ g = gaussian(pbar, s);
        g.right_half = true;
        const double n2 = g.norm2();
        g.terms[0].m /= std::sqrt(n2);
        return g;
    }
};

}  // namespace tof

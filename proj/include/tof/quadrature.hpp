#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "tof/common.hpp"

namespace tof {

enum class EndpointSingularity { none, sqrt_origin };

struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-8;
    int max_subdivisions = 2000;
    EndpointSingularity endpoint_singularity = EndpointSingularity::none;
    // Characteristic wavenumber of an oscillatory factor exp(i*k*p); used only
    // to pre-split the range so the adaptive rule starts resolved.
    double oscillation_wavenumber = 0.0;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1]; Gauss nodes are the odd
// Kronrod indices, the last entry is the midpoint.
inline constexpr double gk_x[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class R>
struct Segment {
    double a, b;
    R integral;
    double err;
};

template <class F, class R>
Segment<R> gk15(F& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const R mid = f(c);
    R gauss = gk_wg[3] * mid;
    R kronrod = gk_wk[7] * mid;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * gk_x[i];
        const R fsum = f(c - dx) + f(c + dx);
        kronrod += gk_wk[i] * fsum;
        if (i % 2 == 1) gauss += gk_wg[i / 2] * fsum;
    }
    kronrod *= h;
    gauss *= h;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

// Adaptive worklist over a fixed integrand; the public entry points below
// handle variable transforms so this never re-wraps the callable (each wrap
// is a fresh template instantiation, and wrapping recursively does not
// terminate).
template <class F>
auto adaptive(F& f, double a, double b, const QuadratureSpec& spec)
    -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    int pieces = 1;
    if (spec.oscillation_wavenumber > 0.0) {
        const double cycles = std::abs(b - a) * spec.oscillation_wavenumber / two_pi;
        pieces = std::clamp(static_cast<int>(cycles / 2.0), 1, 256);
    }

    std::vector<detail::Segment<R>> segs;
    segs.reserve(64);
    R total{};
    double err_total = 0.0;
    double l1 = 0.0;
    for (int i = 0; i < pieces; ++i) {
        const double sa = a + (b - a) * i / pieces;
        const double sb = a + (b - a) * (i + 1) / pieces;
        auto s = detail::gk15<F, R>(f, sa, sb);
        total += s.integral;
        err_total += s.err;
        l1 += std::abs(s.integral);
        segs.push_back(s);
    }

    // Cancellation floor: the summed error estimate of an oscillatory
    // integrand bottoms out near machine epsilon times its L1 mass, so a
    // tolerance below that floor is unreachable and refinement must stop
    // there.  The returned value is then the true integral up to the floor.
    auto tol = [&] {
        return std::max({spec.abs_tol, spec.rel_tol * std::abs(total),
                         50.0 * 2.2e-16 * l1});
    };
    while (err_total > tol()) {
        if (static_cast<int>(segs.size()) >= spec.max_subdivisions)
            throw NonConvergence("adaptive quadrature hit the subdivision cap");
        auto worst = std::max_element(
            segs.begin(), segs.end(),
            [](const auto& p, const auto& q) { return p.err < q.err; });
        const double sa = worst->a, sb = worst->b, sm = 0.5 * (sa + sb);
        total -= worst->integral;
        err_total -= worst->err;
        l1 -= std::abs(worst->integral);
        auto left = detail::gk15<F, R>(f, sa, sm);
        auto right = detail::gk15<F, R>(f, sm, sb);
        *worst = left;
        segs.push_back(right);
        total += left.integral + right.integral;
        err_total += left.err + right.err;
        l1 += std::abs(left.integral) + std::abs(right.integral);
    }
    return total;
}

}  // namespace detail

// Adaptive Gauss-Kronrod integration of f over [a, b].  Return type follows
// the integrand (double or cplx).  Converges when the summed error estimate
// drops below max(abs_tol, rel_tol * |I|) or below the cancellation floor of
// the integrand's L1 mass; throws NonConvergence at the subdivision cap.
template <class F>
auto integrate(F&& f, double a, double b, const QuadratureSpec& spec = {})
    -> decltype(f(0.0)) {
    using R = decltype(f(0.0));
    if (a == b) return R{};
    double sign = 1.0;
    if (b < a) {
        std::swap(a, b);
        sign = -1.0;
    }

    if (spec.endpoint_singularity == EndpointSingularity::sqrt_origin) {
        if (a != 0.0)
            throw SingularityNotRegularized(
                "sqrt_origin mapping requires the lower limit to be 0");
        auto g = [&f](double v) { return f(v * v) * (2.0 * v); };
        QuadratureSpec flat = spec;
        flat.endpoint_singularity = EndpointSingularity::none;
        return sign * detail::adaptive(g, 0.0, std::sqrt(b), flat);
    }

    return sign * detail::adaptive(f, a, b, spec);
}

// Integral over [a, infinity) through the rational map p = a + u/(1-u).
// The integrand must decay at least like 1/p^2 for the mapped integrand to
// stay bounded; all momentum-space tails here decay much faster.
template <class F>
auto integrate_halfline(F&& f, double a, const QuadratureSpec& spec = {})
    -> decltype(f(0.0)) {
    auto g = [&f, a](double u) {
        const double w = 1.0 - u;
        return f(a + u / w) / (w * w);
    };
    return integrate(g, 0.0, 1.0, spec);
}

// Integral over the whole real line via u in (-1, 1), p = u/(1-u^2).
template <class F>
auto integrate_real_line(F&& f, const QuadratureSpec& spec = {})
    -> decltype(f(0.0)) {
    auto g = [&f](double u) {
        const double w = 1.0 - u * u;
        return f(u / w) * ((1.0 + u * u) / (w * w));
    };
    return integrate(g, -1.0, 1.0, spec);
}

}  // namespace tof

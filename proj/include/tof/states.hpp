#pragma once

// Wave-packet families and their closed-form evolution, in dimensionless
// units (hbar = m = 1; the magnetic family additionally uses q B0 = 1 units).
// Every analytic family is a closed-form evaluator; no grid evolver.
// Fourier convention: psi~(p) = (2 pi)^{-3/2} Int d^3x e^{-i p.x} psi(x).

#include <cmath>
#include <memory>
#include <numbers>
#include <utility>
#include <vector>

#include "tof/common.hpp"
#include "tof/gaussian1d.hpp"
#include "tof/vec3.hpp"

namespace tof {

struct Vec3c {
    cplx x{0.0, 0.0}, y{0.0, 0.0}, z{0.0, 0.0};
};

struct UnitSystem {
    enum class Mode { free_units, magnetic_units };
    Mode mode = Mode::free_units;
    double B0 = 1.0;
    double q = 1.0;
};

// q A in dimensionless form.  Symmetric-gauge field plus the z-gauge term:
// q A(x) = b0 (-y, x, 0) - (0, 0, eta z).
struct VectorPotential {
    double b0 = 1.0;
    double eta = 0.0;
    Vec3 operator()(Vec3 x) const { return {-b0 * x.y, b0 * x.x, -eta * x.z}; }
};

// 1/sigma(t) = 1/(1 + i t) + i eta.
inline cplx magnetic_sigma(double t, double eta) {
    return 1.0 / (1.0 / cplx{1.0, t} + cplx{0.0, eta});
}

// Charged-particle setup: uniform field b0 zhat, charge q, gauge parameter
// eta, detector plane z = L.  The worked family uses units q b0 = 1.  The
// motion along z is field-free, so plane densities see b0 and q only through
// the transverse state, which integrates out of every distribution here.
struct GaugeGeometry {
    double eta = 0.0;
    double L = 1.0;
    double b0 = 1.0;
    double q = 1.0;
};

// Gaussian ground-state packet of the magnetic trap.  The eta gauge copy is
// psi' = psi exp(-i eta z^2 / 2); observables must not depend on eta.
struct MagneticState {
    double eta = 0.0;

    // position amplitude at time t; primed selects the eta-gauge wave function
    cplx value(Vec3 xv, double t, bool primed) const {
        const cplx c{1.0, t};
        cplx w = cplx{0.0, -t} - 0.5 * (xv.x * xv.x + xv.y * xv.y) -
                 0.5 * xv.z * xv.z / c;
        if (primed) w -= cplx{0.0, 0.5 * eta * xv.z * xv.z};
        return std::pow(pi, -0.75) * std::pow(c, cplx{-0.5, 0.0}) * exp_c(w);
    }

    Vec3c gradient(Vec3 xv, double t, bool primed) const {
        const cplx psi = value(xv, t, primed);
        const cplx c{1.0, t};
        cplx gz = -xv.z / c;
        if (primed) gz -= cplx{0.0, eta * xv.z};
        return {-xv.x * psi, -xv.y * psi, gz * psi};
    }

    // momentum amplitude of the primed wave function
    cplx momentum_value(Vec3 pv, double t, bool primed) const {
        const cplx c{1.0, t};
        const cplx a = 1.0 / c + (primed ? cplx{0.0, eta} : cplx{0.0, 0.0});
        const cplx pref = std::pow(pi, -0.75) * std::pow(c * a, cplx{-0.5, 0.0});
        const cplx w = cplx{0.0, -t} - 0.5 * (pv.x * pv.x + pv.y * pv.y) -
                       0.5 * pv.z * pv.z / a;
        return pref * exp_c(w);
    }

    // normalized z-factor of the primed momentum amplitude at time tau, as a
    // single-term packet: pi^{-1/4} e^{-i tau} [(1+i tau) a]^{-1/2} e^{-sigma p^2/2}
    PacketZ z_factor_momentum(double tau) const {
        const cplx c{1.0, tau};
        const cplx a = 1.0 / c + cplx{0.0, eta};
        GaussTerm t;
        t.k = 0;
        t.a = 1.0 / a;  // sigma(tau)
        t.b = {0.0, 0.0};
        t.m = std::pow(pi, -0.25) * exp_c(cplx{0.0, -tau}) *
              std::pow(c * a, cplx{-0.5, 0.0});
        t.E = 0.0;
        return PacketZ{{t}, false};
    }
};

// Separable free packet: transverse isotropic Gaussian of momentum width
// s_perp, z-factor an arbitrary PacketZ.  Covers boosted Gaussians,
// Hermite-excited packets, two-bump superpositions, and the right-moving
// family (half-line z support, momentum representation only).
struct SeparableFreeState {
    PacketZ zf;
    double s_perp = 1.0 / std::numbers::sqrt2_v<double>;

    PacketZ transverse_axis() const { return PacketZ::gaussian(0.0, s_perp); }

    cplx value(Vec3 xv, double t) const {
        const PacketZ gx = transverse_axis().evolved(t);
        const PacketZ fz = zf.evolved(t);
        return gx.position_value(xv.x) * gx.position_value(xv.y) *
               fz.position_value(xv.z);
    }

    Vec3c gradient(Vec3 xv, double t) const {
        const PacketZ gx = transverse_axis().evolved(t);
        const PacketZ fz = zf.evolved(t);
        const cplx vx = gx.position_value(xv.x), vy = gx.position_value(xv.y);
        const cplx vz = fz.position_value(xv.z);
        return {gx.position_derivative(xv.x) * vy * vz,
                vx * gx.position_derivative(xv.y) * vz,
                vx * vy * fz.position_derivative(xv.z)};
    }

    cplx momentum_value(Vec3 pv, double t) const {
        const PacketZ g = transverse_axis();
        const cplx phase =
            exp_c(cplx{0.0, -0.5 * t * (pv.x * pv.x + pv.y * pv.y + pv.z * pv.z)});
        return g.momentum_value(pv.x) * g.momentum_value(pv.y) *
               zf.momentum_value(pv.z) * phase;
    }
};

// Momentum amplitude tabulated on a regular grid, trilinear interpolation.
// Normalized by its Riemann sum at construction.
struct TabulatedAmplitude {
    std::vector<double> px, py, pz;  // strictly increasing, uniform
    std::vector<cplx> values;        // x-major: ((ix * ny) + iy) * nz + iz

    cplx operator()(Vec3 p) const {
        // compact support: the amplitude vanishes outside the tabulated box
        if (p.x < px.front() || p.x > px.back() || p.y < py.front() ||
            p.y > py.back() || p.z < pz.front() || p.z > pz.back())
            return {0.0, 0.0};
        auto locate = [](const std::vector<double>& ax, double v, double& w) {
            if (v >= ax.back()) { w = 1.0; return ax.size() - 2; }
            const double h = ax[1] - ax[0];
            size_t i = static_cast<size_t>((v - ax.front()) / h);
            if (i > ax.size() - 2) i = ax.size() - 2;
            w = (v - ax[i]) / h;
            return i;
        };
        double wx, wy, wz;
        const size_t ix = locate(px, p.x, wx), iy = locate(py, p.y, wy),
                     iz = locate(pz, p.z, wz);
        auto at = [&](size_t a, size_t b, size_t c) {
            return values[(a * py.size() + b) * pz.size() + c];
        };
        cplx out{0.0, 0.0};
        for (int dx = 0; dx < 2; ++dx)
            for (int dy = 0; dy < 2; ++dy)
                for (int dz = 0; dz < 2; ++dz) {
                    const double w = (dx ? wx : 1.0 - wx) * (dy ? wy : 1.0 - wy) *
                                     (dz ? wz : 1.0 - wz);
                    out += w * at(ix + dx, iy + dy, iz + dz);
                }
        return out;
    }

    void normalize() {
        const double hx = px[1] - px[0], hy = py[1] - py[0], hz = pz[1] - pz[0];
        double n2 = 0.0;
        for (const cplx& v : values) n2 += std::norm(v);
        n2 *= hx * hy * hz;
        const double s = 1.0 / std::sqrt(n2);
        for (cplx& v : values) v *= s;
    }
};

enum class Family { free_gaussian, magnetic_gaussian, right_moving_gaussian, tabulated };

struct WavePacketSpec {
    Family family = Family::free_gaussian;
    double alpha = 1.0;  // free_gaussian position width
    double beta = 0.0;   // free_gaussian z boost
    double eta = 0.0;    // magnetic_gaussian gauge parameter
    std::shared_ptr<const TabulatedAmplitude> table;
};

// psi~_t(p) = psi~_0(p) exp(-i t p^2 / 2) for the free families.
inline cplx evolve_free_momentum(const WavePacketSpec& spec, Vec3 p, double t) {
    const cplx phase = exp_c(cplx{0.0, -0.5 * t * p.norm2()});
    switch (spec.family) {
        case Family::free_gaussian: {
            SeparableFreeState st{PacketZ::width_boost(spec.alpha, spec.beta),
                                  1.0 / (spec.alpha * std::numbers::sqrt2_v<double>)};
            return st.momentum_value(p, t);
        }
        case Family::right_moving_gaussian: {
            SeparableFreeState st{PacketZ::right_half_gaussian(0.0, 1.0 / std::numbers::sqrt2_v<double>),
                                  1.0 / std::numbers::sqrt2_v<double>};
            return st.momentum_value(p, t);
        }
        case Family::tabulated:
            return (*spec.table)(p) * phase;
        case Family::magnetic_gaussian:
            throw UnsupportedFamily("magnetic family does not evolve freely");
    }
    return {0.0, 0.0};
}

// Primed-gauge magnetic wave function at x (eta enters as a pure phase).
inline cplx magnetic_state_position(Vec3 x, double t, double eta) {
    return MagneticState{eta}.value(x, t, true);
}

inline cplx magnetic_state_momentum(Vec3 p, double t, double eta) {
    return MagneticState{eta}.momentum_value(p, t, true);
}

struct PolarDecomposition {
    double rho = 0.0;
    Vec3 grad_S{};
};

inline constexpr double node_threshold = 1e-300;

inline PolarDecomposition polar_decompose(cplx psi, Vec3c grad) {
    const double rho = std::norm(psi);
    if (rho <= node_threshold)
        throw NodeEncountered("polar decomposition at a node of the wave function");
    const cplx cc = std::conj(psi);
    return {rho, Vec3{std::imag(cc * grad.x), std::imag(cc * grad.y),
                      std::imag(cc * grad.z)} / rho};
}

}  // namespace tof

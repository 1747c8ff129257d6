#pragma once

// Probability current density, the arrival-time distribution as a surface
// flux, the no-backflow scan, and the far-field current of free packets.

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "tof/quadrature.hpp"
#include "tof/states.hpp"
#include "tof/vec3.hpp"

namespace tof {

// --- surfaces ----------------------------------------------------------------

struct MeshFacet {
    Vec3 x;
    Vec3 normal;  // unit length after construction
    double area = 0.0;
};

// Oriented detector surface: the plane z = L carries the +zhat normal; a
// tabulated mesh lists sample points with normals and area weights.
struct SurfacePatch {
    double L = 0.0;
    std::vector<MeshFacet> mesh;  // plane kind when empty

    static SurfacePatch plane_z(double L) { return {L, {}}; }

    static SurfacePatch tabulated(std::vector<MeshFacet> m) {
        for (MeshFacet& f : m) {
            const double n = f.normal.norm();
            if (!(n > 0.0) || !(f.area > 0.0))
                throw GridMismatch(
                    "mesh facets need nonzero normals and positive areas");
            f.normal = f.normal / n;
        }
        return {0.0, std::move(m)};
    }

    bool is_plane() const { return mesh.empty(); }
};

struct CurrentSample {
    Vec3 x;
    double t = 0.0;
    Vec3 J;
};

// --- current density ---------------------------------------------------------

// J = Im[psi* grad psi] - qA |psi|^2, the minimally coupled current.  Total:
// no node can make it blow up, the current is simply zero there.
template <class State>
Vec3 current_density(const State& state, const VectorPotential& qa, Vec3 x,
                     double t) {
    const cplx psi = state.value(x, t);
    const Vec3c g = state.gradient(x, t);
    const double rho = std::norm(psi);
    const Vec3 a = qa(x);
    return {std::imag(std::conj(psi) * g.x) - a.x * rho,
            std::imag(std::conj(psi) * g.y) - a.y * rho,
            std::imag(std::conj(psi) * g.z) - a.z * rho};
}

// Velocity route J = rho (grad S - qA); throws where the phase gradient is
// undefined instead of dividing by a vanishing density.
template <class State>
Vec3 current_density_velocity(const State& state, const VectorPotential& qa,
                              Vec3 x, double t) {
    const PolarDecomposition pd =
        polar_decompose(state.value(x, t), state.gradient(x, t));
    return pd.rho * (pd.grad_S - qa(x));
}

// Gauge view of the trap state: the base view pairs the plain wave function
// with the symmetric potential, the primed view multiplies in the
// z-quadratic phase and shifts the potential by its gradient.
struct MagneticGauge {
    double eta = 0.0;
    bool primed = false;

    cplx value(Vec3 x, double t) const {
        return MagneticState{eta}.value(x, t, primed);
    }
    Vec3c gradient(Vec3 x, double t) const {
        return MagneticState{eta}.gradient(x, t, primed);
    }
    VectorPotential potential() const { return {1.0, primed ? eta : 0.0}; }
};

inline Vec3 magnetic_current(const MagneticGauge& view, Vec3 x, double t) {
    return current_density(view, view.potential(), x, t);
}

// Closed form for the same current: transverse drift rho (y, -x, 0) plus
// the axial spreading flow t z / (1 + t^2).  The gauge parameter never
// appears here, which is the invariance made literal.
inline Vec3 magnetic_current_exact(Vec3 x, double t) {
    const double s = 1.0 + t * t;
    const double rho = std::pow(pi, -1.5) / std::sqrt(s) *
                       std::exp(-x.x * x.x - x.y * x.y - x.z * x.z / s);
    return {x.y * rho, -x.x * rho, t * x.z / s * rho};
}

// one-dimensional line current Im[f* f'], the backflow workhorse
inline double current_1d(const PacketZ& f, double z, double t) {
    const PacketZ ft = f.evolved(t);
    return std::imag(std::conj(ft.position_value(z)) *
                     ft.position_derivative(z));
}

// --- surface flux -------------------------------------------------------------

// Arrival-time density as the flux through the surface.  May be negative
// where backflow occurs; the reporting layer is expected to show that
// rather than clamp it.
//
// On a plane the transverse integral runs in polar form: a fixed trapezoid
// over the periodic angle and an adaptive rule in u = r^2 that follows the
// Gaussian decay, with the radial box doubled until the outer annulus stops
// contributing.
template <class State>
double pi_qf(const State& state, const VectorPotential& qa,
             const SurfacePatch& surface, double tau, double rel_tol = 1e-8,
             int n_phi = 32) {
    if (!surface.is_plane()) {
        double s = 0.0;
        for (const MeshFacet& f : surface.mesh)
            s += f.area * current_density(state, qa, f.x, tau).dot(f.normal);
        return s;
    }
    QuadratureSpec spec;
    spec.abs_tol = 1e-300;  // relative accuracy even for tiny densities
    spec.rel_tol = 0.1 * rel_tol;
    auto ring = [&](double u) {
        const double r = std::sqrt(u);
        double s = 0.0;
        for (int i = 0; i < n_phi; ++i) {
            const Vec3 x = from_cylindrical(r, two_pi * i / n_phi, surface.L);
            s += current_density(state, qa, x, tau).z;
        }
        return pi * s / n_phi;
    };
    double acc = integrate(ring, 0.0, 16.0, spec);
    double scale = std::abs(acc);
    for (double lo = 16.0; lo < 4096.0; lo *= 2.0) {
        const double seg = integrate(ring, lo, 2.0 * lo, spec);
        acc += seg;
        scale = std::max(scale, std::abs(acc));
        if (std::abs(seg) <= rel_tol * scale + 1e-300) return acc;
    }
    throw NonConvergence("surface flux did not localize inside the radial box");
}

inline double pi_qf_magnetic(const GaugeGeometry& geom, double tau,
                             bool primed = false, double rel_tol = 1e-8) {
    const MagneticGauge view{geom.eta, primed};
    return pi_qf(view, view.potential(), SurfacePatch::plane_z(geom.L), tau,
                 rel_tol);
}

// tau L e^{-L^2/(1+tau^2)} / (sqrt(pi) (1+tau^2)^{3/2}); approaches
// L/(sqrt(pi) tau^2) at late times and integrates to erf(L)/2
inline double pi_qf_closed_magnetic(double L, double tau) {
    const double s = 1.0 + tau * tau;
    return tau * L / (std::sqrt(pi) * s * std::sqrt(s)) * std::exp(-L * L / s);
}

// argmax over tau of the closed form: positive root of
// 2u^2 - (2L^2 - 1)u - 1 = 0 in u = tau^2
inline double pi_qf_peak_time(double L) {
    const double w = 2.0 * L * L - 1.0;
    return std::sqrt(0.25 * (w + std::sqrt(w * w + 8.0)));
}

// --- no-backflow scan ----------------------------------------------------------

// Verdict of the current-positivity scan over surface x time samples.  A
// finite grid cannot certify every instant, so the sampling resolution
// rides along with the verdict.
struct CpcRecord {
    bool ok = true;
    CurrentSample worst{};   // most negative sample
    double min_flux = 0.0;   // J . n there
    std::size_t n_surface = 0;
    std::size_t n_time = 0;
};

template <class State>
CpcRecord cpc_check(const State& state, const VectorPotential& qa,
                    const SurfacePatch& surface,
                    const std::vector<double>& t_grid, double tol = 1e-12,
                    double r_max = 6.0, int n_r = 49, int n_phi = 16) {
    CpcRecord rec;
    rec.n_time = t_grid.size();
    bool first = true;
    auto visit = [&](Vec3 x, Vec3 n) {
        ++rec.n_surface;
        for (double t : t_grid) {
            const Vec3 J = current_density(state, qa, x, t);
            const double f = J.dot(n);
            if (first || f < rec.min_flux) {
                rec.min_flux = f;
                rec.worst = {x, t, J};
                first = false;
            }
        }
    };
    if (surface.is_plane()) {
        for (int i = 0; i < n_r; ++i) {
            const double r = r_max * i / (n_r - 1);
            for (int j = 0; j < n_phi; ++j)
                visit(from_cylindrical(r, two_pi * j / n_phi, surface.L),
                      {0.0, 0.0, 1.0});
        }
    } else {
        for (const MeshFacet& f : surface.mesh) visit(f.x, f.normal);
    }
    rec.ok = first || rec.min_flux >= -tol;
    return rec;
}

// --- far field -----------------------------------------------------------------

// Ballistic scale of a free packet: width over the larger of drift and
// spreading speed.  Times past a hundred of these are far-field.
inline double packet_crossing_time(const WavePacketSpec& spec) {
    switch (spec.family) {
        case Family::free_gaussian:
            return spec.alpha /
                   std::max(std::abs(spec.beta), 1.0 / spec.alpha);
        case Family::right_moving_gaussian:
            return 1.0;
        case Family::tabulated:
            return 1.0;  // tables are built from unit-scale packets
        case Family::magnetic_gaussian:
            throw UnsupportedFamily("far field needs free evolution");
    }
    return 1.0;
}

inline bool far_field_regime(const WavePacketSpec& spec, Vec3, double t) {
    return t >= 100.0 * packet_crossing_time(spec);
}

// Radial current (x/t^4) |psi0(x/t)|^2 carried by the ballistic momentum
// x/t.  Valid for t > 0; outside the regime it still evaluates, it is just
// a poor approximation there.
inline Vec3 far_field_flux(const WavePacketSpec& spec, Vec3 x, double t) {
    const cplx a = evolve_free_momentum(spec, x / t, 0.0);
    return x * (std::norm(a) / (t * t * t * t));
}

}  // namespace tof

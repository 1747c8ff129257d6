#pragma once

// Trajectory ensembles for the guided-particle reading of arrival times.
// Velocities come from the phase gradient minus the vector potential; the
// magnetic trap state has closed-form helices, everything else integrates
// the guiding field numerically. Initial conditions are drawn from the
// t = 0 position density so the ensemble stays density-distributed under
// the flow, and arrival statistics at z = L follow per trajectory.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "tof/common.hpp"
#include "tof/curve.hpp"
#include "tof/flux.hpp"
#include "tof/parallel.hpp"
#include "tof/rng.hpp"
#include "tof/states.hpp"
#include "tof/vec3.hpp"

namespace tof {

inline constexpr double never = std::numeric_limits<double>::infinity();

struct Cylindrical {
    double r = 0.0;
    double phi = 0.0;
    double z = 0.0;

    Vec3 cartesian() const { return from_cylindrical(r, phi, z); }
};

// v = grad S - qA at a point. Throws NodeEncountered where the density
// underflows and the phase gradient stops being defined.
template <class State>
Vec3 guiding_velocity(const State& psi, const VectorPotential& qa, Vec3 x,
                      double t) {
    const PolarDecomposition pd =
        polar_decompose(psi.value(x, t), psi.gradient(x, t));
    return pd.grad_S - qa(x);
}

// Trap-state velocity field in either gauge: rigid rotation at angular
// velocity -1 (clockwise seen from +z) plus the axial spreading drift.
inline Vec3 magnetic_velocity_exact(Vec3 x, double t) {
    return {x.y, -x.x, t * x.z / (1.0 + t * t)};
}

struct BohmianTrajectory {
    Cylindrical X0;
    std::function<Vec3(double)> path;  // t -> cartesian position
    double arrival_time = never;       // first crossing of the z = L plane
    double t_end = 0.0;                // horizon the path is defined up to
    bool truncated = false;            // stopped early at a node
    bool censored = false;             // horizon reached without a verdict
};

// R_t = R0, Phi_t = Phi0 - t, Z_t = Z0 sqrt(1+t^2); the radius and the
// angular speed are constants of the motion.
inline Vec3 magnetic_path_exact(const Cylindrical& x0, double t) {
    return from_cylindrical(x0.r, x0.phi - t, x0.z * std::sqrt(1.0 + t * t));
}

inline BohmianTrajectory magnetic_trajectory(const Cylindrical& x0,
                                             double t_max = never) {
    BohmianTrajectory tr;
    tr.X0 = x0;
    tr.path = [x0](double t) { return magnetic_path_exact(x0, t); };
    tr.t_end = t_max;
    return tr;
}

// Crossing time of z = L along the exact axial law: finite iff the point
// starts in (0, L], monotone decreasing in Z0 there.
inline double arrival_time_of(const Cylindrical& x0, double L) {
    if (!(x0.z > 0.0) || !(x0.z <= L)) return never;
    const double q = L / x0.z;
    return std::sqrt(q * q - 1.0);
}

struct StepPolicy {
    double dt0 = 1e-2;
    double dt_min = 1e-9;
    double dt_max = 0.1;   // keeps the dense output well inside the budget
    double tol = 1e-10;    // local error per unit time
};

namespace detail {

struct PathKnot {
    double t;
    Vec3 x;
    Vec3 v;
};

template <class V>
Vec3 rk4_step(V&& v, Vec3 x, double t, double dt) {
    const Vec3 k1 = v(x, t);
    const Vec3 k2 = v(x + k1 * (0.5 * dt), t + 0.5 * dt);
    const Vec3 k3 = v(x + k2 * (0.5 * dt), t + 0.5 * dt);
    const Vec3 k4 = v(x + k3 * dt, t + dt);
    return x + (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
}

// Cubic Hermite dense output over the stored knots, clamped to the ends.
inline Vec3 eval_knots(const std::vector<PathKnot>& ks, double t) {
    if (t <= ks.front().t) return ks.front().x;
    if (t >= ks.back().t) return ks.back().x;
    const auto hi = std::upper_bound(
        ks.begin(), ks.end(), t,
        [](double tv, const PathKnot& k) { return tv < k.t; });
    const PathKnot& b = *hi;
    const PathKnot& a = *(hi - 1);
    const double h = b.t - a.t;
    const double s = (t - a.t) / h;
    const double s2 = s * s, s3 = s2 * s;
    return a.x * (2 * s3 - 3 * s2 + 1) + a.v * ((s3 - 2 * s2 + s) * h) +
           b.x * (-2 * s3 + 3 * s2) + b.v * ((s3 - s2) * h);
}

}  // namespace detail

// Adaptive step-doubling RK4 for the guiding field. The dense path keeps
// every accepted knot with its velocity, so interpolation error stays far
// below the integration tolerance. A node mid-flight truncates the path
// and flags it; a step collapsing below dt_min is a hard failure.
template <class State>
BohmianTrajectory integrate_trajectory(const State& psi,
                                       const VectorPotential& qa,
                                       const Cylindrical& x0, double t_max,
                                       StepPolicy pol = {}) {
    const auto v = [&](Vec3 x, double t) {
        return guiding_velocity(psi, qa, x, t);
    };
    auto knots = std::make_shared<std::vector<detail::PathKnot>>();
    Vec3 x = x0.cartesian();
    double t = 0.0;
    double dt = pol.dt0;

    BohmianTrajectory tr;
    tr.X0 = x0;
    try {
        knots->push_back({0.0, x, v(x, 0.0)});
        while (t < t_max) {
            dt = std::min({dt, pol.dt_max, t_max - t});
            const Vec3 full = detail::rk4_step(v, x, t, dt);
            const Vec3 mid = detail::rk4_step(v, x, t, 0.5 * dt);
            const Vec3 half = detail::rk4_step(v, mid, t + 0.5 * dt, 0.5 * dt);
            const double err = (full - half).norm();
            const double budget =
                pol.tol * dt * std::max(1.0, x.norm());
            if (err <= budget) {
                x = half + (half - full) / 15.0;  // local extrapolation
                t += dt;
                knots->push_back({t, x, v(x, t)});
            } else if (dt <= pol.dt_min) {
                throw NonConvergence("guiding field step collapsed");
            }
            const double grow =
                err > 0.0 ? 0.9 * std::pow(budget / err, 0.2) : 5.0;
            dt *= std::clamp(grow, 0.2, 5.0);
            dt = std::max(dt, pol.dt_min);
        }
    } catch (const NodeEncountered&) {
        tr.truncated = true;
        // a node at the very first evaluation leaves a degenerate path
        if (knots->empty()) knots->push_back({0.0, x, Vec3{}});
    }
    tr.t_end = knots->back().t;
    tr.path = [knots](double tv) { return detail::eval_knots(*knots, tv); };
    return tr;
}

// Family dispatch: the trap state takes the exact helix, free Gaussians
// integrate their guiding field in empty space. Half-line and tabulated
// packets have no position-space evaluator to guide against.
inline BohmianTrajectory integrate_trajectory(const WavePacketSpec& spec,
                                              const Cylindrical& x0,
                                              double t_max,
                                              StepPolicy pol = {}) {
    switch (spec.family) {
        case Family::magnetic_gaussian:
            return magnetic_trajectory(x0, t_max);
        case Family::free_gaussian: {
            const SeparableFreeState st{
                PacketZ::width_boost(spec.alpha, spec.beta),
                1.0 / (spec.alpha * std::numbers::sqrt2_v<double>)};
            return integrate_trajectory(st, VectorPotential{0.0, 0.0}, x0,
                                        t_max, pol);
        }
        default:
            throw UnsupportedFamily(
                "trajectories need a position-space state");
    }
}

struct CrossingResult {
    double tau = never;
    bool censored = false;
};

// Generic arrival times: scan for a sign change of z(t) - L, then bisect
// the bracket. Without a sign change the verdict is "never" only when the
// endpoint is receding from the plane; otherwise the horizon censors it.
inline CrossingResult first_crossing(const std::function<Vec3(double)>& path,
                                     double L, double t_max,
                                     double dt_scan = 0.05) {
    CrossingResult out;
    double t0 = 0.0;
    double f0 = path(0.0).z - L;
    if (f0 == 0.0) {
        out.tau = 0.0;
        return out;
    }
    for (double t1 = dt_scan; t0 < t_max; t1 = std::min(t1 + dt_scan, t_max)) {
        const double f1 = path(t1).z - L;
        if ((f0 < 0.0) != (f1 < 0.0)) {
            double lo = t0, hi = t1, flo = f0;
            for (int i = 0; i < 200 && (hi - lo) > 1e-13 * std::max(1.0, hi);
                 ++i) {
                const double mid = 0.5 * (lo + hi);
                const double fm = path(mid).z - L;
                if ((flo < 0.0) == (fm < 0.0)) {
                    lo = mid;
                    flo = fm;
                } else {
                    hi = mid;
                }
            }
            out.tau = 0.5 * (lo + hi);
            return out;
        }
        t0 = t1;
        f0 = f1;
        if (t1 >= t_max) break;
    }
    const double back = path(t_max - dt_scan).z;
    const double vz = (path(t_max).z - back) / dt_scan;
    const bool receding = (f0 < 0.0) ? vz <= 0.0 : vz >= 0.0;
    out.censored = !receding;
    return out;
}

struct TrajectoryEnsemble {
    std::vector<BohmianTrajectory> samples;
    std::uint64_t seed = 0;
    std::size_t n = 0;
};

// Exact transforms from four uniform draws: the cylindrical radius of a
// unit 2-d Gaussian pair is the square root of an exponential variate,
// the angle is uniform, and z is a Gaussian variate of variance 1/2.
inline Cylindrical sample_rho0_magnetic(Splitmix64& rng) {
    const double u0 = rng.uniform01();
    const double u1 = rng.uniform01();
    const double u2 = rng.uniform01();
    const double u3 = rng.uniform01();
    Cylindrical x0;
    x0.r = std::sqrt(-std::log(u0));
    x0.phi = two_pi * u1;
    x0.z = std::sqrt(-std::log(u2)) * std::cos(two_pi * u3);
    return x0;
}

// Counter-based streams: sample k only touches stream k, so parallel and
// serial runs produce bit-identical ensembles.
inline TrajectoryEnsemble sample_ensemble(std::size_t n, std::uint64_t seed,
                                          double L) {
    TrajectoryEnsemble ens;
    ens.seed = seed;
    ens.n = n;
    ens.samples.resize(n);
    parallel_for(n, [&](std::size_t k) {
        Splitmix64 rng = rng_stream(seed, k);
        const Cylindrical x0 = sample_rho0_magnetic(rng);
        BohmianTrajectory tr = magnetic_trajectory(x0);
        tr.arrival_time = arrival_time_of(x0, L);
        ens.samples[k] = std::move(tr);
    });
    return ens;
}

inline double pi_bm_exact(double L, double tau) {
    return tau < 0.0 ? 0.0 : pi_qf_closed_magnetic(L, tau);
}

// Arrival mass up to tau; the full-line total is erf(L)/2 and the
// complement is the non-detection probability.
inline double pi_bm_mass(double L, double tau) {
    if (tau <= 0.0) return 0.0;
    return 0.5 * (std::erf(L) - std::erf(L / std::sqrt(1.0 + tau * tau)));
}

inline double pi_bm_p_infinity(double L) { return 1.0 - 0.5 * std::erf(L); }

// CDF of the arrival time conditioned on arrival, for ECDF comparisons.
inline double pi_bm_cdf_conditional(double L, double tau) {
    return pi_bm_mass(L, tau) / (0.5 * std::erf(L));
}

struct HistogramRow {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
    double density = 0.0;    // count / (n * width)
    double mc_stderr = 0.0;  // binomial standard error of the density
};

// Bin the stored arrival times on [lo, hi) cells; censored samples and
// times outside the edges are left out of every bin.
inline std::vector<HistogramRow> histogram_rows(
    const TrajectoryEnsemble& ens, const std::vector<double>& edges) {
    if (edges.size() < 2 || !std::is_sorted(edges.begin(), edges.end()))
        throw GridMismatch("histogram needs ascending bin edges");
    std::vector<HistogramRow> rows(edges.size() - 1);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].lo = edges[i];
        rows[i].hi = edges[i + 1];
    }
    for (const BohmianTrajectory& tr : ens.samples) {
        const double tau = tr.arrival_time;
        if (tr.censored || !std::isfinite(tau)) continue;
        if (tau < edges.front() || tau >= edges.back()) continue;
        const auto it =
            std::upper_bound(edges.begin(), edges.end(), tau) - 1;
        rows[static_cast<std::size_t>(it - edges.begin())].count += 1;
    }
    const double n = static_cast<double>(ens.n);
    for (HistogramRow& row : rows) {
        const double w = row.hi - row.lo;
        const double p = row.count / n;
        row.density = p / w;
        row.mc_stderr = std::sqrt(p * (1.0 - p) / n) / w;
    }
    return rows;
}

// Monte-Carlo arrival-time density at the bin centers, normalized against
// the full ensemble so the curve plus p_infinity carries the total mass.
inline DistributionCurve pi_bm_histogram(const TrajectoryEnsemble& ens,
                                         double L,
                                         const std::vector<double>& edges) {
    const std::vector<HistogramRow> rows = histogram_rows(ens, edges);
    DistributionCurve c;
    c.label = "pi_bm L=" + std::to_string(L);
    c.tau_grid.reserve(rows.size());
    c.density.reserve(rows.size());
    double binned = 0.0;
    std::size_t decided_never = 0;
    for (const HistogramRow& row : rows) {
        c.tau_grid.push_back(0.5 * (row.lo + row.hi));
        c.density.push_back(row.density);
        binned += row.density * (row.hi - row.lo);
    }
    // censored samples are undecided and belong to neither side
    for (const BohmianTrajectory& tr : ens.samples)
        if (!tr.censored && !std::isfinite(tr.arrival_time)) ++decided_never;
    c.norm = binned;
    c.p_infinity =
        static_cast<double>(decided_never) / static_cast<double>(ens.n);
    return c;
}

}  // namespace tof

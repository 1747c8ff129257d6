#pragma once

// Sampled arrival-time densities: the common exchange format between the
// distribution modules, the statistics helpers, and the writers.

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "tof/common.hpp"
#include "tof/parallel.hpp"

namespace tof {

struct DistributionCurve {
    std::vector<double> tau_grid;
    std::vector<double> density;
    double norm = 0.0;  // trapezoid mass over the sampled window, as recorded
    double p_infinity = std::numeric_limits<double>::quiet_NaN();
    std::string label;

    double trapezoid_norm() const {
        double m = 0.0;
        for (std::size_t i = 1; i < tau_grid.size(); ++i)
            m += 0.5 * (density[i] + density[i - 1]) *
                 (tau_grid[i] - tau_grid[i - 1]);
        return m;
    }

    std::size_t peak_index() const {
        return static_cast<std::size_t>(
            std::max_element(density.begin(), density.end()) - density.begin());
    }
    double peak_tau() const { return tau_grid[peak_index()]; }
    double peak_density() const { return density[peak_index()]; }
};

inline std::vector<double> linear_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i) g[i] = lo + (hi - lo) * i / (n - 1.0);
    return g;
}

// Linear spacing through the bulk, geometric beyond t_switch; long 1/tau
// tails need logarithmic coverage while the peak needs uniform coverage.
inline std::vector<double> hybrid_grid(double lo, double t_switch, double hi,
                                       int n_linear, int per_decade) {
    std::vector<double> g = linear_grid(lo, t_switch, n_linear);
    if (hi > t_switch) {
        const double step = std::pow(10.0, 1.0 / per_decade);
        for (double t = t_switch * step; t < hi; t *= step) g.push_back(t);
        g.push_back(hi);
    }
    return g;
}

// Mirror a nonnegative grid onto the negative axis (two-sided curves).
inline std::vector<double> two_sided(const std::vector<double>& half) {
    std::vector<double> g;
    g.reserve(2 * half.size());
    for (auto it = half.rbegin(); it != half.rend(); ++it)
        if (*it > 0.0) g.push_back(-*it);
    g.insert(g.end(), half.begin(), half.end());
    return g;
}

template <class F>
DistributionCurve sample_curve(F&& f, std::vector<double> grid, std::string label) {
    DistributionCurve c;
    c.tau_grid = std::move(grid);
    c.density.assign(c.tau_grid.size(), 0.0);
    parallel_for(c.tau_grid.size(),
                 [&](std::size_t i) { c.density[i] = f(c.tau_grid[i]); });
    c.label = std::move(label);
    c.norm = c.trapezoid_norm();
    return c;
}

}  // namespace tof

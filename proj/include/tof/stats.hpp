#pragma once

// Sample statistics shared by the property checks and the CLI report.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "tof/common.hpp"

namespace tof {

// Two-sided Kolmogorov-Smirnov distance between a sample and a model CDF.
template <class Cdf>
double ks_statistic(std::vector<double> sample, Cdf&& model_cdf) {
    if (sample.empty()) return 0.0;
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double f = model_cdf(sample[i]);
        d = std::max(d, std::max(f - i / n, (i + 1.0) / n - f));
    }
    return d;
}

// 99% acceptance band for the KS distance of n samples.
inline double ks_band_99(std::size_t n) {
    return 1.63 / std::sqrt(static_cast<double>(n));
}

inline double sample_mean(const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s / static_cast<double>(v.size());
}

// Standard error of a Bernoulli proportion estimated from n trials.
inline double proportion_stderr(double p, std::size_t n) {
    return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

}  // namespace tof

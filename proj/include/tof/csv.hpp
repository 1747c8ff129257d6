#pragma once

// CSV emission. Every file opens with '# key=value' provenance lines,
// then one RFC-4180 header row and data at 17 significant digits, so a
// rerun with the same configuration byte-compares equal. Values that
// failed to converge are written as literal nan and never interpolated.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tof/bohmian.hpp"
#include "tof/common.hpp"
#include "tof/curve.hpp"

namespace tof {

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using MetaRows = std::vector<std::pair<std::string, std::string>>;

inline std::string format_sig17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void write_csv(const std::string& path, const MetaRows& meta,
                      const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path, std::ios::binary);  // '\n' endings everywhere
    if (!out) throw IoFailure("cannot open for writing: " + path);
    for (const auto& [key, value] : meta)
        out << "# " << key << "=" << value << "\n";
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << "\n";
    for (const std::vector<double>& row : rows) {
        if (row.size() != header.size())
            throw GridMismatch("csv row width does not match the header");
        for (std::size_t i = 0; i < row.size(); ++i)
            out << (i ? "," : "") << format_sig17(row[i]);
        out << "\n";
    }
    if (!out) throw IoFailure("write failed: " + path);
}

inline void write_curve_csv(const std::string& path,
                            const DistributionCurve& curve, MetaRows meta) {
    meta.emplace_back("label", curve.label);
    meta.emplace_back("norm", format_sig17(curve.norm));
    if (std::isfinite(curve.p_infinity))
        meta.emplace_back("p_infinity", format_sig17(curve.p_infinity));
    std::vector<std::vector<double>> rows;
    rows.reserve(curve.tau_grid.size());
    for (std::size_t i = 0; i < curve.tau_grid.size(); ++i)
        rows.push_back({curve.tau_grid[i], curve.density[i]});
    write_csv(path, meta, {"tau", "density"}, rows);
}

inline void write_histogram_csv(const std::string& path,
                                const std::vector<HistogramRow>& rows,
                                const MetaRows& meta) {
    std::vector<std::vector<double>> table;
    table.reserve(rows.size());
    for (const HistogramRow& r : rows)
        table.push_back({r.lo, r.hi, r.density, r.mc_stderr});
    write_csv(path, meta, {"tau_lo", "tau_hi", "density", "mc_stderr"}, table);
}

// Decimated trajectory dump: every stride-th grid time per trajectory,
// in cylindrical coordinates.
inline void write_trajectory_csv(const std::string& path,
                                 const TrajectoryEnsemble& ens,
                                 const std::vector<double>& t_grid,
                                 std::size_t stride, const MetaRows& meta) {
    if (stride == 0 || t_grid.empty())
        throw GridMismatch("trajectory dump needs a stride and a time grid");
    std::vector<std::vector<double>> rows;
    for (std::size_t id = 0; id < ens.samples.size(); ++id) {
        const BohmianTrajectory& tr = ens.samples[id];
        for (std::size_t i = 0; i < t_grid.size(); i += stride) {
            const double t = t_grid[i];
            if (t > tr.t_end) break;
            const Vec3 x = tr.path(t);
            rows.push_back({static_cast<double>(id), t, x.rho(),
                            std::atan2(x.y, x.x), x.z});
        }
    }
    write_csv(path, meta, {"id", "t", "r", "phi", "z"}, rows);
}

}  // namespace tof

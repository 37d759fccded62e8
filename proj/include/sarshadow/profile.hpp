// 1D profile traces: terrain, projection line, and shadow flags for a single
// line of sight, plus CSV serialization.
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <span>

#include "sarshadow/shadow.hpp"

namespace sarshadow {

struct ProfileTrace {
    std::vector<double> ground_range_m;
    std::vector<double> z_m;
    std::vector<double> l_m;
    std::vector<CellState> mask; // Lit / Shadow only

    std::size_t size() const { return z_m.size(); }
};

/// Run the row scan on a gap-free elevation profile and collect the trace.
inline ProfileTrace trace_profile(std::span<const double> z, const RadarGeometry& geom) {
    RowDetection det = detect_row(z, geom);
    ProfileTrace trace;
    trace.ground_range_m.reserve(z.size());
    for (int j = 0; j < static_cast<int>(z.size()); ++j)
        trace.ground_range_m.push_back(geom.ground_range_m(j));
    trace.z_m.assign(z.begin(), z.end());
    trace.l_m = std::move(det.projection_line_m);
    trace.mask = std::move(det.mask);
    return trace;
}

/// CSV columns: range_m,z_m,l_m,shadow with 9 significant digits and a 0/1
/// shadow flag.
inline void write_profile_csv(const ProfileTrace& trace, const std::filesystem::path& path) {
    if (trace.z_m.size() != trace.ground_range_m.size() ||
        trace.z_m.size() != trace.l_m.size() || trace.z_m.size() != trace.mask.size())
        throw contract_error("write_profile_csv: trace arrays differ in length");
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
    out << "range_m,z_m,l_m,shadow\n";
    char buf[160];
    for (std::size_t j = 0; j < trace.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.9g,%.9g,%.9g,%d\n", trace.ground_range_m[j],
                      trace.z_m[j], trace.l_m[j],
                      trace.mask[j] == CellState::Shadow ? 1 : 0);
        out << buf;
    }
    out.flush();
    if (!out) throw io_error("failed writing '" + path.string() + "'");
}

} // namespace sarshadow

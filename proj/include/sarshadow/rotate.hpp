// Grid rotation into and out of radar row alignment.
//
// rotate_to_radar resamples the DEM so that, after rotating by the azimuth
// angle, every raster row runs along the radar look direction. The output
// covers the minimal axis-aligned bounding box of the rotated footprint;
// cells outside the source footprint are filled with nodata. Elevations are
// sampled bilinearly over valid neighbors, masks go back with
// nearest-neighbor sampling since their classes are categorical.
//
// Angles that are exact multiples of 90 degrees use integer cosine/sine so
// lattice-aligned rotations reproduce source cells exactly.
#pragma once

#include <cmath>
#include <utility>

#include "sarshadow/grid.hpp"

namespace sarshadow {

/// Everything needed to map between the source frame and the rotated frame.
struct RotationTransform {
    double angle_deg = 0.0; // normalized to [0, 360)
    int src_nrows = 0;
    int src_ncols = 0;
    int dst_nrows = 0;
    int dst_ncols = 0;
    double src_center_row = 0.0;
    double src_center_col = 0.0;
    double dst_center_row = 0.0;
    double dst_center_col = 0.0;
    double fill_value = kDefaultNodata; // nodata written outside the footprint

    bool is_identity() const { return angle_deg == 0.0; }
};

struct RotatedDem {
    DemGrid grid;
    RotationTransform transform;
};

namespace detail {

inline double normalize_angle_deg(double deg) {
    double a = std::fmod(deg, 360.0);
    if (a < 0.0) a += 360.0;
    if (a == 360.0) a = 0.0;
    return a;
}

inline std::pair<double, double> cos_sin_deg(double deg) {
    if (deg == 0.0) return {1.0, 0.0};
    if (deg == 90.0) return {0.0, 1.0};
    if (deg == 180.0) return {-1.0, 0.0};
    if (deg == 270.0) return {0.0, -1.0};
    const double rad = deg * 3.14159265358979323846 / 180.0;
    return {std::cos(rad), std::sin(rad)};
}

/// Bilinear sample at fractional (row, col) over valid neighbors only;
/// weights renormalize over the valid subset. NaN when no valid neighbor
/// carries weight.
inline double bilinear_valid(const DemGrid& g, double row, double col) {
    const double fr = std::floor(row);
    const double fc = std::floor(col);
    const int r0 = static_cast<int>(fr);
    const int c0 = static_cast<int>(fc);
    const double wy = row - fr;
    const double wx = col - fc;

    double acc = 0.0;
    double wsum = 0.0;
    const double weights[4] = {(1.0 - wy) * (1.0 - wx), (1.0 - wy) * wx, wy * (1.0 - wx),
                               wy * wx};
    const int rows[4] = {r0, r0, r0 + 1, r0 + 1};
    const int cols[4] = {c0, c0 + 1, c0, c0 + 1};
    for (int k = 0; k < 4; ++k) {
        const int r = rows[k];
        const int c = cols[k];
        if (r < 0 || r >= g.nrows || c < 0 || c >= g.ncols) continue;
        const double z = g.at(r, c);
        if (g.is_nodata(z)) continue;
        acc += weights[k] * z;
        wsum += weights[k];
    }
    if (wsum < 1e-12) return std::numeric_limits<double>::quiet_NaN();
    return acc / wsum;
}

} // namespace detail

inline RotatedDem rotate_to_radar(const DemGrid& grid, double azimuth_deg) {
    grid.validate();
    const double angle = detail::normalize_angle_deg(azimuth_deg);

    RotationTransform t;
    t.angle_deg = angle;
    t.src_nrows = grid.nrows;
    t.src_ncols = grid.ncols;
    t.src_center_row = (grid.nrows - 1) / 2.0;
    t.src_center_col = (grid.ncols - 1) / 2.0;
    t.fill_value = grid.nodata_value;

    if (angle == 0.0) {
        t.dst_nrows = grid.nrows;
        t.dst_ncols = grid.ncols;
        t.dst_center_row = t.src_center_row;
        t.dst_center_col = t.src_center_col;
        return {grid, t};
    }

    const auto [cosa, sina] = detail::cos_sin_deg(angle);
    const double ac = std::fabs(cosa);
    const double as = std::fabs(sina);
    const double w = grid.ncols * ac + grid.nrows * as;
    const double h = grid.ncols * as + grid.nrows * ac;
    t.dst_ncols = std::max(1, static_cast<int>(std::ceil(w - 1e-9)));
    t.dst_nrows = std::max(1, static_cast<int>(std::ceil(h - 1e-9)));
    t.dst_center_row = (t.dst_nrows - 1) / 2.0;
    t.dst_center_col = (t.dst_ncols - 1) / 2.0;

    DemGrid out;
    out.nrows = t.dst_nrows;
    out.ncols = t.dst_ncols;
    out.cell_size_m = grid.cell_size_m;
    out.nodata_value = grid.nodata_value;
    out.xll_m = grid.xll_m;
    out.yll_m = grid.yll_m;
    out.elevations.resize(out.cell_count());

    for (int r = 0; r < out.nrows; ++r) {
        for (int c = 0; c < out.ncols; ++c) {
            const double xr = c - t.dst_center_col;
            const double yr = r - t.dst_center_row;
            // inverse rotation back into the source frame
            const double sx = cosa * xr + sina * yr + t.src_center_col;
            const double sy = -sina * xr + cosa * yr + t.src_center_row;
            const double v = detail::bilinear_valid(grid, sy, sx);
            out.at(r, c) = std::isnan(v) ? grid.nodata_value : v;
        }
    }
    return {std::move(out), t};
}

inline ShadowMask rotate_mask_back(const ShadowMask& mask, const RotationTransform& t) {
    mask.validate();
    if (mask.nrows != t.dst_nrows || mask.ncols != t.dst_ncols) {
        std::ostringstream os;
        os << "rotate_mask_back: mask is " << mask.nrows << "x" << mask.ncols
           << " but transform expects " << t.dst_nrows << "x" << t.dst_ncols;
        throw contract_error(os.str());
    }
    if (t.is_identity()) return mask;

    const auto [cosa, sina] = detail::cos_sin_deg(t.angle_deg);
    ShadowMask out;
    out.nrows = t.src_nrows;
    out.ncols = t.src_ncols;
    out.cells.resize(out.cell_count());
    for (int r = 0; r < out.nrows; ++r) {
        for (int c = 0; c < out.ncols; ++c) {
            const double xr = c - t.src_center_col;
            const double yr = r - t.src_center_row;
            // forward rotation into the rotated frame
            const double dx = cosa * xr - sina * yr + t.dst_center_col;
            const double dy = sina * xr + cosa * yr + t.dst_center_row;
            const long j = std::lround(dx);
            const long i = std::lround(dy);
            if (i < 0 || i >= t.dst_nrows || j < 0 || j >= t.dst_ncols)
                out.at(r, c) = CellState::Invalid;
            else
                out.at(r, c) = mask.at(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return out;
}

} // namespace sarshadow

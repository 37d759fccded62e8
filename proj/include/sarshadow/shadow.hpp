// Scan-line radar shadow detection.
//
// The sensor sits at ground range 0 of every row at altitude H above the
// zero-elevation datum. Scanning outward, the grazing projection line
// l(g) = a*g + H tracks the steepest sight slope a seen so far, where the
// sight slope of a cell at ground range g and elevation z is (z - H) / g.
// A cell below the projection line is shadowed; a cell that reaches or
// grazes it is lit and becomes the new grazing point. One pass per row,
// constant auxiliary state.
#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <thread>
#include <vector>

#include "sarshadow/geometry.hpp"
#include "sarshadow/grid.hpp"
#include "sarshadow/rotate.hpp"

namespace sarshadow {

/// Classification of one line of sight plus the projection line heights
/// l = a*g + H that produced it.
struct RowDetection {
    std::vector<CellState> mask;
    std::vector<double> projection_line_m;
};

namespace detail {

/// Shared row kernel. nodata (when given) marks cells that neither cast nor
/// receive shadow; they are classified Invalid, leave the running slope
/// untouched, and take their line height from the current slope.
/// line_out may be null when only the mask is wanted.
inline void scan_row(const double* z, int n, const RadarGeometry& geom,
                     const double* nodata, CellState* mask_out, double* line_out) {
    const double H = geom.sensor_height_m;

    // The sensor must clear the whole row before any cell is classified.
    for (int j = 0; j < n; ++j) {
        if (nodata && z[j] == *nodata) continue;
        if (z[j] >= H) {
            std::ostringstream os;
            os << "sensor below terrain at col " << j << ": elevation " << z[j]
               << " m >= sensor height " << H << " m";
            throw contract_error(os.str());
        }
    }

    double slope = -std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) {
        const double g = geom.ground_range_m(j);
        if (nodata && z[j] == *nodata) {
            mask_out[j] = CellState::Invalid;
            if (line_out) line_out[j] = slope * g + H;
            continue;
        }
        const double m = (z[j] - H) / g;
        if (m >= slope) { // a grazing ray still illuminates the cell
            mask_out[j] = CellState::Lit;
            slope = m;
        } else {
            mask_out[j] = CellState::Shadow;
        }
        if (line_out) line_out[j] = slope * g + H;
    }
}

} // namespace detail

/// Classify a single line of sight. Ground range of column j is
/// ground_offset_m + j * cell_size_m.
inline RowDetection detect_row(std::span<const double> z, const RadarGeometry& geom,
                               std::optional<double> nodata = std::nullopt) {
    geom.validate();
    if (z.empty()) throw contract_error("detect_row: row must not be empty");
    RowDetection out;
    out.mask.resize(z.size());
    out.projection_line_m.resize(z.size());
    detail::scan_row(z.data(), static_cast<int>(z.size()), geom,
                     nodata ? &*nodata : nullptr, out.mask.data(),
                     out.projection_line_m.data());
    return out;
}

/// Brute-force reference classifier: a cell is shadowed iff some earlier
/// valid cell subtends a steeper sight line. Uses cross-multiplied slope
/// comparisons, no division, O(n^2). Kept deliberately independent of
/// detect_row so the two can check each other.
inline std::vector<CellState> detect_row_oracle(std::span<const double> z,
                                                const RadarGeometry& geom,
                                                std::optional<double> nodata = std::nullopt) {
    geom.validate();
    if (z.empty()) throw contract_error("detect_row_oracle: row must not be empty");
    const double H = geom.sensor_height_m;
    const int n = static_cast<int>(z.size());

    const auto is_nodata = [&](int j) { return nodata && z[j] == *nodata; };
    for (int j = 0; j < n; ++j) {
        if (!is_nodata(j) && z[j] >= H) {
            std::ostringstream os;
            os << "sensor below terrain at col " << j << ": elevation " << z[j]
               << " m >= sensor height " << H << " m";
            throw contract_error(os.str());
        }
    }

    std::vector<CellState> mask(z.size(), CellState::Lit);
    for (int j = 0; j < n; ++j) {
        if (is_nodata(j)) {
            mask[j] = CellState::Invalid;
            continue;
        }
        const double gj = geom.ground_range_m(j);
        for (int i = 0; i < j; ++i) {
            if (is_nodata(i)) continue;
            const double gi = geom.ground_range_m(i);
            if ((z[i] - H) * gj > (z[j] - H) * gi) {
                mask[j] = CellState::Shadow;
                break;
            }
        }
    }
    return mask;
}

/// Row-by-row detection over a grid already aligned with the radar look
/// direction. Rows are independent; with n_threads > 1 they are processed
/// in parallel with output identical to the sequential order.
inline ShadowMask detect_grid(const DemGrid& grid, const RadarGeometry& geom,
                              int n_threads = 1) {
    grid.validate();
    geom.validate();
    if (geom.cell_size_m != grid.cell_size_m)
        throw contract_error("detect_grid: geometry cell_size_m does not match the grid");
    ensure_sensor_above(grid, geom.sensor_height_m);

    ShadowMask mask;
    mask.nrows = grid.nrows;
    mask.ncols = grid.ncols;
    mask.cells.resize(grid.cell_count());

    const auto scan_rows = [&](int row_begin, int row_end) {
        for (int r = row_begin; r < row_end; ++r) {
            detail::scan_row(grid.elevations.data() + grid.index(r, 0), grid.ncols, geom,
                             &grid.nodata_value, mask.cells.data() + mask.index(r, 0),
                             nullptr);
        }
    };

    const int workers = std::max(1, std::min(n_threads, grid.nrows));
    if (workers == 1) {
        scan_rows(0, grid.nrows);
        return mask;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const int chunk = (grid.nrows + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const int begin = w * chunk;
        const int end = std::min(grid.nrows, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(scan_rows, begin, end);
    }
    for (auto& th : pool) th.join();
    return mask;
}

struct PipelineResult {
    ShadowMask mask;         // original orientation
    DemGrid rotated_dem;     // radar-aligned DEM
    ShadowMask rotated_mask; // mask in the radar frame
    RotationTransform transform;
};

/// Full chain: rotate the DEM into radar row alignment, detect shadows row
/// by row, rotate the mask back for superposition with the source grid.
/// Intermediate artifacts are returned for inspection and rendering.
inline PipelineResult detect_pipeline(const DemGrid& grid, const RadarGeometry& geom,
                                      int n_threads = 1) {
    RotatedDem rotated = rotate_to_radar(grid, geom.azimuth_deg);
    ShadowMask rotated_mask = detect_grid(rotated.grid, geom, n_threads);
    ShadowMask mask = rotate_mask_back(rotated_mask, rotated.transform);
    return {std::move(mask), std::move(rotated.grid), std::move(rotated_mask),
            rotated.transform};
}

/// Invert the flat-ground shadow relation L = R*h/(H - h): a target at
/// ground range R casting a shadow of length L under a sensor at height H
/// has height h = L*H/(R + L).
inline double estimate_target_height(double shadow_len_m, double ground_range_m,
                                     double sensor_height_m) {
    if (!(ground_range_m > 0.0))
        throw contract_error("estimate_target_height: ground_range_m must be positive");
    if (!(sensor_height_m > 0.0))
        throw contract_error("estimate_target_height: sensor_height_m must be positive");
    if (shadow_len_m < 0.0)
        throw contract_error("estimate_target_height: shadow_len_m must be non-negative");
    return shadow_len_m * sensor_height_m / (ground_range_m + shadow_len_m);
}

} // namespace sarshadow

// Core raster types: elevation grids, shadow masks, incidence-angle maps.
#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "sarshadow/errors.hpp"

namespace sarshadow {

inline constexpr double kDefaultNodata = -9999.0;

/// Georeferenced elevation raster in meters. Cells are stored row-major with
/// row 0 as the northernmost row. A cell holds either a finite elevation or
/// the exact nodata sentinel.
struct DemGrid {
    int nrows = 0;
    int ncols = 0;
    double cell_size_m = 1.0;
    double nodata_value = kDefaultNodata;
    double xll_m = 0.0;
    double yll_m = 0.0;
    std::vector<double> elevations;

    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(ncols) +
               static_cast<std::size_t>(c);
    }
    double at(int r, int c) const { return elevations[index(r, c)]; }
    double& at(int r, int c) { return elevations[index(r, c)]; }

    bool is_nodata(double v) const { return v == nodata_value; }
    bool cell_is_nodata(int r, int c) const { return is_nodata(at(r, c)); }

    std::size_t cell_count() const {
        return static_cast<std::size_t>(nrows) * static_cast<std::size_t>(ncols);
    }

    /// Min/max over valid cells; empty when the grid is all nodata.
    std::optional<std::pair<double, double>> valid_range() const {
        std::optional<std::pair<double, double>> range;
        for (double v : elevations) {
            if (is_nodata(v)) continue;
            if (!range) {
                range = {v, v};
            } else {
                if (v < range->first) range->first = v;
                if (v > range->second) range->second = v;
            }
        }
        return range;
    }

    void validate() const {
        if (nrows < 1 || ncols < 1) {
            std::ostringstream os;
            os << "DemGrid: dimensions must be at least 1x1, got " << nrows << "x" << ncols;
            throw contract_error(os.str());
        }
        if (!(cell_size_m > 0.0)) {
            throw contract_error("DemGrid: cell_size_m must be positive");
        }
        if (elevations.size() != cell_count()) {
            std::ostringstream os;
            os << "DemGrid: elevation array has " << elevations.size() << " values, expected "
               << cell_count();
            throw contract_error(os.str());
        }
        for (std::size_t i = 0; i < elevations.size(); ++i) {
            const double v = elevations[i];
            if (!std::isfinite(v) && !is_nodata(v)) {
                std::ostringstream os;
                os << "DemGrid: non-finite elevation at index " << i;
                throw contract_error(os.str());
            }
        }
    }
};

/// Per-cell illumination class.
enum class CellState : std::uint8_t { Lit = 0, Shadow = 1, Invalid = 2 };

/// Tri-state raster aligned with the grid it was derived from.
struct ShadowMask {
    int nrows = 0;
    int ncols = 0;
    std::vector<CellState> cells;

    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(ncols) +
               static_cast<std::size_t>(c);
    }
    CellState at(int r, int c) const { return cells[index(r, c)]; }
    CellState& at(int r, int c) { return cells[index(r, c)]; }

    std::size_t cell_count() const {
        return static_cast<std::size_t>(nrows) * static_cast<std::size_t>(ncols);
    }

    std::size_t count(CellState s) const {
        std::size_t n = 0;
        for (CellState c : cells)
            if (c == s) ++n;
        return n;
    }

    double shadow_fraction() const {
        return cells.empty() ? 0.0
                             : static_cast<double>(count(CellState::Shadow)) /
                                   static_cast<double>(cells.size());
    }

    void validate() const {
        if (nrows < 1 || ncols < 1)
            throw contract_error("ShadowMask: dimensions must be at least 1x1");
        if (cells.size() != cell_count())
            throw contract_error("ShadowMask: cell array size does not match dimensions");
    }
};

/// Per-cell incidence angles in degrees. Cells derived from nodata terrain
/// carry NaN and are reported by is_invalid().
struct IncidenceMap {
    int nrows = 0;
    int ncols = 0;
    std::vector<double> angles_deg;

    std::size_t index(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(ncols) +
               static_cast<std::size_t>(c);
    }
    double at(int r, int c) const { return angles_deg[index(r, c)]; }
    bool is_invalid(int r, int c) const { return std::isnan(at(r, c)); }

    static double invalid_marker() { return std::numeric_limits<double>::quiet_NaN(); }
};

/// Every valid cell must lie strictly below the sensor altitude. Names the
/// first offending cell in row-major order.
inline void ensure_sensor_above(const DemGrid& grid, double sensor_height_m) {
    for (int r = 0; r < grid.nrows; ++r) {
        for (int c = 0; c < grid.ncols; ++c) {
            const double z = grid.at(r, c);
            if (grid.is_nodata(z)) continue;
            if (z >= sensor_height_m) {
                std::ostringstream os;
                os << "sensor below terrain at row " << r << ", col " << c << ": elevation " << z
                   << " m >= sensor height " << sensor_height_m << " m";
                throw contract_error(os.str());
            }
        }
    }
}

} // namespace sarshadow

// Incidence-angle map: per-cell angle between the sensor vertical and the
// line of sight, computed row by row from ground range and elevation.
#pragma once

#include <cmath>

#include "sarshadow/geometry.hpp"
#include "sarshadow/grid.hpp"

namespace sarshadow {

/// theta = atan(ground_range / (H - z)) in degrees. Valid angles fall in
/// (0, 90) because ground range is positive and the sensor clears all
/// terrain; nodata cells carry the invalid marker.
inline IncidenceMap incidence_map(const DemGrid& grid, const RadarGeometry& geom) {
    grid.validate();
    geom.validate();
    if (geom.cell_size_m != grid.cell_size_m)
        throw contract_error("incidence_map: geometry cell_size_m does not match the grid");
    ensure_sensor_above(grid, geom.sensor_height_m);

    constexpr double rad_to_deg = 180.0 / 3.14159265358979323846;
    IncidenceMap map;
    map.nrows = grid.nrows;
    map.ncols = grid.ncols;
    map.angles_deg.resize(grid.cell_count());
    for (int r = 0; r < grid.nrows; ++r) {
        for (int c = 0; c < grid.ncols; ++c) {
            const double z = grid.at(r, c);
            if (grid.is_nodata(z)) {
                map.angles_deg[map.index(r, c)] = IncidenceMap::invalid_marker();
                continue;
            }
            const double g = geom.ground_range_m(c);
            map.angles_deg[map.index(r, c)] =
                std::atan(g / (geom.sensor_height_m - z)) * rad_to_deg;
        }
    }
    return map;
}

/// Incidence angles as a grid aligned with the source DEM, invalid cells as
/// nodata, ready for ESRI ASCII serialization.
inline DemGrid incidence_to_grid(const IncidenceMap& map, const DemGrid& source) {
    DemGrid out;
    out.nrows = map.nrows;
    out.ncols = map.ncols;
    out.cell_size_m = source.cell_size_m;
    out.nodata_value = kDefaultNodata;
    out.xll_m = source.xll_m;
    out.yll_m = source.yll_m;
    out.elevations.resize(map.angles_deg.size());
    for (std::size_t i = 0; i < map.angles_deg.size(); ++i) {
        const double a = map.angles_deg[i];
        out.elevations[i] = std::isnan(a) ? out.nodata_value : a;
    }
    return out;
}

} // namespace sarshadow

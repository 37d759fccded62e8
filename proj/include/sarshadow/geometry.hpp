// Radar acquisition geometry.
#pragma once

#include <sstream>

#include <json.hpp>

#include "sarshadow/errors.hpp"

namespace sarshadow {

/// Sensor placement for the per-row scan. The antenna sits at ground range 0
/// of every row at altitude sensor_height_m above the zero-elevation datum;
/// the first raster column lies ground_offset_m down-range of the nadir.
struct RadarGeometry {
    double sensor_height_m = 0.0;
    double azimuth_deg = 0.0;
    double ground_offset_m = 0.0;
    double cell_size_m = 1.0;

    double ground_range_m(int col) const { return ground_offset_m + col * cell_size_m; }

    void validate() const {
        if (!(sensor_height_m > 0.0))
            throw contract_error("RadarGeometry: sensor_height_m must be positive");
        if (!(ground_offset_m > 0.0))
            throw contract_error("RadarGeometry: ground_offset_m must be positive");
        if (!(cell_size_m > 0.0))
            throw contract_error("RadarGeometry: cell_size_m must be positive");
    }
};

/// Keeping the first column one cell away from the nadir avoids a zero
/// ground range and matches how near-nadir cells behave in practice.
inline RadarGeometry make_radar_geometry(double sensor_height_m, double cell_size_m,
                                         double azimuth_deg = 0.0,
                                         double ground_offset_m = 0.0) {
    RadarGeometry geom;
    geom.sensor_height_m = sensor_height_m;
    geom.cell_size_m = cell_size_m;
    geom.azimuth_deg = azimuth_deg;
    geom.ground_offset_m = ground_offset_m > 0.0 ? ground_offset_m : cell_size_m;
    return geom;
}

inline RadarGeometry geometry_from_json(const nlohmann::json& j) {
    RadarGeometry geom;
    if (!j.is_object()) throw format_error("geometry JSON must be an object");
    if (!j.contains("sensor_height_m"))
        throw format_error("geometry JSON is missing 'sensor_height_m'");
    geom.sensor_height_m = j.at("sensor_height_m").get<double>();
    geom.azimuth_deg = j.value("azimuth_deg", 0.0);
    geom.ground_offset_m = j.value("ground_offset_m", 0.0);
    geom.cell_size_m = j.value("cell_size_m", 0.0);
    return geom;
}

inline nlohmann::json geometry_to_json(const RadarGeometry& geom) {
    return nlohmann::json{{"sensor_height_m", geom.sensor_height_m},
                          {"azimuth_deg", geom.azimuth_deg},
                          {"ground_offset_m", geom.ground_offset_m},
                          {"cell_size_m", geom.cell_size_m}};
}

} // namespace sarshadow

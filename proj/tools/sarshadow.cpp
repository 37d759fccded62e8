// sarshadow: radar shadow masks, incidence maps, and synthetic terrains on
// elevation grids.
//
// Exit codes: 0 success, 1 usage, 2 I/O or file format, 3 domain constraint.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sarshadow/sarshadow.hpp"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitDomain = 3;

nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw sarshadow::io_error("cannot open '" + path + "' for reading");
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw sarshadow::format_error("'" + path + "': " + e.what());
    }
}

struct GeometryFlags {
    std::string geom_path;
    double height_m = 0.0;
    double azimuth_deg = 0.0;
    double ground_offset_m = 0.0;
    CLI::Option* height_opt = nullptr;
    CLI::Option* azimuth_opt = nullptr;
    CLI::Option* offset_opt = nullptr;

    void add_to(CLI::App& cmd, bool with_azimuth = true) {
        cmd.add_option("--geom", geom_path, "Radar geometry JSON file");
        height_opt = cmd.add_option("--height-m", height_m, "Sensor height above the datum [m]");
        if (with_azimuth)
            azimuth_opt = cmd.add_option("--azimuth-deg", azimuth_deg,
                                         "Rotation aligning rows with the look direction");
        offset_opt = cmd.add_option("--ground-offset-m", ground_offset_m,
                                    "Ground range of the first column [m]");
    }

    /// Geometry file first, individual flags override, offset defaults to one
    /// cell. cell_size comes from the raster being processed.
    sarshadow::RadarGeometry resolve(double cell_size_m) const {
        sarshadow::RadarGeometry geom;
        geom.cell_size_m = cell_size_m;
        if (!geom_path.empty()) {
            try {
                const sarshadow::RadarGeometry from_file =
                    sarshadow::geometry_from_json(load_json(geom_path));
                geom.sensor_height_m = from_file.sensor_height_m;
                geom.azimuth_deg = from_file.azimuth_deg;
                geom.ground_offset_m = from_file.ground_offset_m;
                if (from_file.cell_size_m > 0.0 && from_file.cell_size_m != cell_size_m)
                    throw sarshadow::contract_error(
                        "geometry file cell_size_m does not match the input raster");
            } catch (const nlohmann::json::exception& e) {
                throw sarshadow::format_error("'" + geom_path + "': " + e.what());
            }
        }
        if (height_opt && height_opt->count() > 0) geom.sensor_height_m = height_m;
        if (azimuth_opt && azimuth_opt->count() > 0) geom.azimuth_deg = azimuth_deg;
        if (offset_opt && offset_opt->count() > 0) geom.ground_offset_m = ground_offset_m;
        if (geom.ground_offset_m <= 0.0) geom.ground_offset_m = cell_size_m;
        geom.validate();
        return geom;
    }
};

std::optional<sarshadow::StretchRange> range_from_pair(const std::vector<double>& v) {
    if (v.empty()) return std::nullopt;
    return sarshadow::StretchRange{v[0], v[1]};
}

int run_synth(const std::string& spec_path, const std::string& out_path) {
    const sarshadow::SyntheticSpec spec = sarshadow::spec_from_json(load_json(spec_path));
    if (spec.is_1d()) {
        const std::vector<double> z = sarshadow::gen_profile_1d(spec);
        std::ofstream out(out_path);
        if (!out) throw sarshadow::io_error("cannot open '" + out_path + "' for writing");
        out << "x_m,z_m\n";
        char buf[80];
        for (std::size_t j = 0; j < z.size(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.9g,%.9g\n", j * spec.cell_size_m, z[j]);
            out << buf;
        }
        out.flush();
        if (!out) throw sarshadow::io_error("failed writing '" + out_path + "'");
    } else {
        sarshadow::write_esri_ascii(sarshadow::gen_gaussian_mix_2d(spec), out_path);
    }
    return 0;
}

int run_detect(const std::string& dem_path, const GeometryFlags& gflags,
               const std::string& out_mask, const std::string& out_overlay,
               const std::vector<double>& stretch, bool emit_intermediates, int threads) {
    const sarshadow::DemGrid dem = sarshadow::read_esri_ascii(dem_path);
    const sarshadow::RadarGeometry geom = gflags.resolve(dem.cell_size_m);
    const sarshadow::PipelineResult result = sarshadow::detect_pipeline(dem, geom, threads);

    if (!out_mask.empty()) sarshadow::write_mask_pbm(result.mask, out_mask);
    if (!out_overlay.empty())
        sarshadow::render_overlay(dem, result.mask, out_overlay, range_from_pair(stretch));
    if (emit_intermediates) {
        std::filesystem::path base(out_mask.empty() ? dem_path : out_mask);
        const std::filesystem::path rotated_dem =
            base.parent_path() / (base.stem().string() + "_rotated.asc");
        const std::filesystem::path rotated_mask =
            base.parent_path() / (base.stem().string() + "_rotated.pbm");
        sarshadow::write_esri_ascii(result.rotated_dem, rotated_dem);
        sarshadow::write_mask_pbm(result.rotated_mask, rotated_mask);
    }

    std::printf("rows=%d cols=%d shadow_cells=%zu shadow_fraction=%.6f\n", result.mask.nrows,
                result.mask.ncols, result.mask.count(sarshadow::CellState::Shadow),
                result.mask.shadow_fraction());
    return 0;
}

int run_incidence(const std::string& dem_path, const GeometryFlags& gflags,
                  const std::string& out_asc, const std::string& out_png,
                  const std::vector<double>& window) {
    const sarshadow::DemGrid dem = sarshadow::read_esri_ascii(dem_path);
    const sarshadow::RadarGeometry geom = gflags.resolve(dem.cell_size_m);
    const sarshadow::IncidenceMap map = sarshadow::incidence_map(dem, geom);
    if (!out_asc.empty())
        sarshadow::write_esri_ascii(sarshadow::incidence_to_grid(map, dem), out_asc);
    if (!out_png.empty()) {
        const sarshadow::StretchRange win =
            window.empty() ? sarshadow::StretchRange{30.0, 36.0}
                           : sarshadow::StretchRange{window[0], window[1]};
        sarshadow::render_incidence_png(map, win, out_png);
    }
    return 0;
}

int run_profile(const std::string& spec_path, const std::string& dem_path,
                const GeometryFlags& gflags, const std::string& out_path) {
    std::vector<double> z;
    double cell_size = 1.0;
    if (!spec_path.empty()) {
        const sarshadow::SyntheticSpec spec = sarshadow::spec_from_json(load_json(spec_path));
        if (!spec.is_1d())
            throw sarshadow::contract_error("profile requires a 1D synthetic spec");
        z = sarshadow::gen_profile_1d(spec);
        cell_size = spec.cell_size_m;
    } else {
        const sarshadow::DemGrid dem = sarshadow::read_esri_ascii(dem_path);
        if (dem.nrows != 1)
            throw sarshadow::contract_error("profile requires a single-row DEM (got " +
                                            std::to_string(dem.nrows) + " rows)");
        z = dem.elevations;
        cell_size = dem.cell_size_m;
    }
    const sarshadow::RadarGeometry geom = gflags.resolve(cell_size);
    sarshadow::write_profile_csv(sarshadow::trace_profile(z, geom), out_path);
    return 0;
}

int run_height(double shadow_len_m, double ground_range_m, double sensor_height_m) {
    const double h =
        sarshadow::estimate_target_height(shadow_len_m, ground_range_m, sensor_height_m);
    std::printf("%#.4g\n", h);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Radar shadow masks from digital elevation models"};
    app.require_subcommand(1);

    // synth
    auto* synth = app.add_subcommand("synth", "Generate synthetic terrain from a JSON spec");
    std::string synth_spec, synth_out;
    synth->add_option("--spec", synth_spec, "Synthetic spec JSON")->required();
    synth->add_option("--out", synth_out, "Output .asc (2D) or .csv (1D)")->required();

    // detect
    auto* detect = app.add_subcommand("detect", "Compute a shadow mask for a DEM");
    std::string detect_dem, detect_mask, detect_overlay;
    std::vector<double> detect_stretch;
    bool detect_emit = false;
    int detect_threads = 1;
    detect->add_option("--dem", detect_dem, "Input DEM (.asc)")->required();
    GeometryFlags detect_geom;
    detect_geom.add_to(*detect);
    detect->add_option("--out-mask", detect_mask, "Shadow mask output (.pbm)");
    detect->add_option("--out-overlay", detect_overlay, "Overlay output (.png)");
    detect->add_option("--stretch", detect_stretch, "Fixed grayscale range: lo hi [m]")
        ->expected(2);
    detect->add_flag("--emit-intermediates", detect_emit,
                     "Also write the rotated DEM and rotated mask");
    detect->add_option("--threads", detect_threads, "Row-processing threads")
        ->check(CLI::PositiveNumber);

    // incidence
    auto* incidence = app.add_subcommand("incidence", "Compute an incidence-angle map");
    std::string inc_dem, inc_asc, inc_png;
    std::vector<double> inc_window;
    incidence->add_option("--dem", inc_dem, "Input DEM (.asc)")->required();
    GeometryFlags inc_geom;
    inc_geom.add_to(*incidence, /*with_azimuth=*/false);
    incidence->add_option("--out-asc", inc_asc, "Angle grid output (.asc)");
    incidence->add_option("--out-png", inc_png, "Grayscale output (.png)");
    incidence->add_option("--window", inc_window, "Display window: lo hi [deg], default 30 36")
        ->expected(2);

    // profile
    auto* profile = app.add_subcommand("profile", "Trace one line of sight to CSV");
    std::string prof_spec, prof_dem, prof_out;
    auto* prof_spec_opt = profile->add_option("--spec", prof_spec, "1D synthetic spec JSON");
    profile->add_option("--dem", prof_dem, "Single-row DEM (.asc)")->excludes(prof_spec_opt);
    GeometryFlags prof_geom;
    prof_geom.add_to(*profile, /*with_azimuth=*/false);
    profile->add_option("--out", prof_out, "Trace CSV output")->required();

    // height
    auto* height = app.add_subcommand("height", "Estimate target height from a shadow length");
    double h_len = 0.0, h_range = 0.0, h_sensor = 0.0;
    height->add_option("--shadow-len-m", h_len, "Measured shadow length [m]")
        ->required()
        ->check(CLI::NonNegativeNumber);
    height->add_option("--ground-range-m", h_range, "Ground range of the target [m]")
        ->required()
        ->check(CLI::PositiveNumber);
    height->add_option("--height-m", h_sensor, "Sensor height [m]")
        ->required()
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        std::cerr << "Run with --help for usage.\n";
        return kExitUsage;
    }

    try {
        if (synth->parsed()) return run_synth(synth_spec, synth_out);
        if (detect->parsed())
            return run_detect(detect_dem, detect_geom, detect_mask, detect_overlay,
                              detect_stretch, detect_emit, detect_threads);
        if (incidence->parsed()) return run_incidence(inc_dem, inc_geom, inc_asc, inc_png,
                                                      inc_window);
        if (profile->parsed()) {
            if (prof_spec.empty() && prof_dem.empty()) {
                std::cerr << "profile: either --spec or --dem is required\n";
                return kExitUsage;
            }
            return run_profile(prof_spec, prof_dem, prof_geom, prof_out);
        }
        if (height->parsed()) return run_height(h_len, h_range, h_sensor);
    } catch (const sarshadow::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const sarshadow::contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return 0;
}

// Overlay and incidence-map rendering.
#pragma once

#include <cmath>
#include <optional>

#include "sarshadow/grid.hpp"
#include "sarshadow/png.hpp"

namespace sarshadow {

/// Fixed grayscale stretch range, e.g. 0..250 m or 30..36 degrees.
struct StretchRange {
    double lo = 0.0;
    double hi = 0.0;
};

namespace detail {

inline std::uint8_t gray_level(double v, double lo, double hi) {
    if (hi == lo) return 128; // degenerate stretch renders mid-gray
    const double t = 255.0 * (v - lo) / (hi - lo);
    const long g = std::lround(t);
    if (g < 0) return 0;
    if (g > 255) return 255;
    return static_cast<std::uint8_t>(g);
}

} // namespace detail

/// Superposition of terrain and mask as pixels: LIT cells are grayscale
/// terrain, SHADOW cells pure blue, INVALID cells pure red. The grayscale
/// stretch uses the given range, else the grid's own valid min/max.
inline ImageRGB8 render_overlay_image(const DemGrid& grid, const ShadowMask& mask,
                                      std::optional<StretchRange> stretch = std::nullopt) {
    grid.validate();
    mask.validate();
    if (grid.nrows != mask.nrows || grid.ncols != mask.ncols) {
        std::ostringstream os;
        os << "render_overlay: mask is " << mask.nrows << "x" << mask.ncols << " but grid is "
           << grid.nrows << "x" << grid.ncols;
        throw contract_error(os.str());
    }

    double lo = 0.0, hi = 0.0;
    if (stretch) {
        lo = stretch->lo;
        hi = stretch->hi;
    } else if (auto range = grid.valid_range()) {
        lo = range->first;
        hi = range->second;
    }

    ImageRGB8 img;
    img.width = grid.ncols;
    img.height = grid.nrows;
    img.pixels.assign(3 * grid.cell_count(), 0);
    for (int r = 0; r < grid.nrows; ++r) {
        for (int c = 0; c < grid.ncols; ++c) {
            switch (mask.at(r, c)) {
            case CellState::Shadow:
                img.set(r, c, 0, 0, 255);
                break;
            case CellState::Invalid:
                img.set(r, c, 255, 0, 0);
                break;
            case CellState::Lit: {
                const std::uint8_t g = detail::gray_level(grid.at(r, c), lo, hi);
                img.set(r, c, g, g, g);
                break;
            }
            }
        }
    }
    return img;
}

inline void render_overlay(const DemGrid& grid, const ShadowMask& mask,
                           const std::filesystem::path& path,
                           std::optional<StretchRange> stretch = std::nullopt) {
    write_png_rgb8(render_overlay_image(grid, mask, stretch), path);
}

/// Grayscale incidence-angle image over a fixed angle window; angles outside
/// the window clamp to black/white, invalid cells render red.
inline ImageRGB8 render_incidence_image(const IncidenceMap& map, StretchRange window) {
    if (map.nrows < 1 || map.ncols < 1)
        throw contract_error("render_incidence: map dimensions must be at least 1x1");
    ImageRGB8 img;
    img.width = map.ncols;
    img.height = map.nrows;
    img.pixels.assign(3 * static_cast<std::size_t>(map.nrows) * map.ncols, 0);
    for (int r = 0; r < map.nrows; ++r) {
        for (int c = 0; c < map.ncols; ++c) {
            if (map.is_invalid(r, c)) {
                img.set(r, c, 255, 0, 0);
            } else {
                const std::uint8_t g = detail::gray_level(map.at(r, c), window.lo, window.hi);
                img.set(r, c, g, g, g);
            }
        }
    }
    return img;
}

inline void render_incidence_png(const IncidenceMap& map, StretchRange window,
                                 const std::filesystem::path& path) {
    write_png_rgb8(render_incidence_image(map, window), path);
}

} // namespace sarshadow

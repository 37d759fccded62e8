// Plain PBM (P1) shadow-mask writer with an ".invalid" sidecar.
#pragma once

#include <filesystem>
#include <fstream>

#include "sarshadow/grid.hpp"

namespace sarshadow {

/// Writes SHADOW cells as 1 and everything else as 0. INVALID cell indices
/// go to a sidecar text file at "<path>.invalid", one "row col" pair per
/// line; the sidecar is created empty when the mask has no invalid cells.
inline void write_mask_pbm(const ShadowMask& mask, const std::filesystem::path& path) {
    mask.validate();
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
    out << "P1\n" << mask.ncols << ' ' << mask.nrows << '\n';
    for (int r = 0; r < mask.nrows; ++r) {
        for (int c = 0; c < mask.ncols; ++c) {
            if (c > 0) out << ' ';
            out << (mask.at(r, c) == CellState::Shadow ? '1' : '0');
        }
        out << '\n';
    }
    out.flush();
    if (!out) throw io_error("failed writing '" + path.string() + "'");

    std::filesystem::path sidecar = path;
    sidecar += ".invalid";
    std::ofstream side(sidecar);
    if (!side) throw io_error("cannot open '" + sidecar.string() + "' for writing");
    for (int r = 0; r < mask.nrows; ++r)
        for (int c = 0; c < mask.ncols; ++c)
            if (mask.at(r, c) == CellState::Invalid) side << r << ' ' << c << '\n';
    side.flush();
    if (!side) throw io_error("failed writing '" + sidecar.string() + "'");
}

} // namespace sarshadow

// Shared helpers for the test suites: temp dirs, CLI invocation, a tiny
// PNG decoder for the writer's fixed-filter output, and grid builders.
#pragma once

#include <array>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <zlib.h>

#include "sarshadow/grid.hpp"

namespace testutil {

class TempDir {
public:
    TempDir() {
        const auto base = std::filesystem::temp_directory_path();
        std::random_device rd;
        for (int attempt = 0; attempt < 64; ++attempt) {
            auto candidate = base / ("sarshadow_test_" + std::to_string(rd()));
            std::error_code ec;
            if (std::filesystem::create_directory(candidate, ec)) {
                path_ = candidate;
                return;
            }
        }
        throw std::runtime_error("could not create temp directory");
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path file(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

struct CliResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

inline CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SARSHADOW_CLI_PATH) + " " + args + " 2>&1";
    CliResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) result.output.append(buf, n);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

inline std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

struct DecodedPng {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> rgb;

    std::array<std::uint8_t, 3> pixel(int r, int c) const {
        const std::size_t o = 3 * (static_cast<std::size_t>(r) * width + c);
        return {rgb[o], rgb[o + 1], rgb[o + 2]};
    }
};

/// Decodes the subset of PNG this project writes: 8-bit RGB, no interlace,
/// filter 0 on every scanline.
inline DecodedPng decode_png_rgb8(const std::filesystem::path& p) {
    const std::string bytes = read_file(p);
    if (bytes.size() < 8) throw std::runtime_error("png too short");
    static const unsigned char sig[8] = {137, 80, 78, 71, 13, 10, 26, 10};
    for (int i = 0; i < 8; ++i)
        if (static_cast<unsigned char>(bytes[i]) != sig[i])
            throw std::runtime_error("bad png signature");

    auto be32 = [&](std::size_t off) {
        return (static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[off])) << 24) |
               (static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[off + 1])) << 16) |
               (static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[off + 2])) << 8) |
               static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[off + 3]));
    };

    DecodedPng out;
    std::vector<std::uint8_t> idat;
    bool saw_iend = false;
    std::size_t pos = 8;
    while (pos + 8 <= bytes.size()) {
        const std::uint32_t len = be32(pos);
        const std::string type = bytes.substr(pos + 4, 4);
        if (pos + 12 + len > bytes.size()) throw std::runtime_error("truncated png chunk");
        if (type == "IHDR") {
            out.width = static_cast<int>(be32(pos + 8));
            out.height = static_cast<int>(be32(pos + 12));
            if (bytes[pos + 16] != 8 || bytes[pos + 17] != 2)
                throw std::runtime_error("unexpected png bit depth or color type");
        } else if (type == "IDAT") {
            idat.insert(idat.end(), bytes.begin() + pos + 8, bytes.begin() + pos + 8 + len);
        } else if (type == "IEND") {
            saw_iend = true;
        }
        pos += 12 + len;
    }
    if (!saw_iend) throw std::runtime_error("png missing IEND");
    if (out.width < 1 || out.height < 1) throw std::runtime_error("png missing IHDR");

    const std::size_t stride = 3 * static_cast<std::size_t>(out.width);
    uLongf raw_len = static_cast<uLongf>(out.height * (stride + 1));
    std::vector<std::uint8_t> raw(raw_len);
    if (uncompress(raw.data(), &raw_len, idat.data(), static_cast<uLong>(idat.size())) != Z_OK ||
        raw_len != raw.size())
        throw std::runtime_error("png idat does not inflate to the expected size");

    out.rgb.reserve(stride * out.height);
    for (int r = 0; r < out.height; ++r) {
        const std::uint8_t* row = raw.data() + static_cast<std::size_t>(r) * (stride + 1);
        if (row[0] != 0) throw std::runtime_error("unexpected png filter type");
        out.rgb.insert(out.rgb.end(), row + 1, row + 1 + stride);
    }
    return out;
}

inline sarshadow::DemGrid make_grid(int nrows, int ncols, double cell_size,
                                    const std::vector<double>& z) {
    sarshadow::DemGrid g;
    g.nrows = nrows;
    g.ncols = ncols;
    g.cell_size_m = cell_size;
    g.elevations = z;
    return g;
}

inline sarshadow::DemGrid make_flat_grid(int nrows, int ncols, double cell_size, double z) {
    sarshadow::DemGrid g;
    g.nrows = nrows;
    g.ncols = ncols;
    g.cell_size_m = cell_size;
    g.elevations.assign(static_cast<std::size_t>(nrows) * ncols, z);
    return g;
}

inline sarshadow::DemGrid random_grid(std::mt19937_64& rng, int nrows, int ncols,
                                      double cell_size, double z_lo, double z_hi,
                                      double nodata_prob = 0.0) {
    sarshadow::DemGrid g = make_flat_grid(nrows, ncols, cell_size, 0.0);
    std::uniform_real_distribution<double> z_dist(z_lo, z_hi);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (auto& v : g.elevations)
        v = (nodata_prob > 0.0 && u(rng) < nodata_prob) ? g.nodata_value : z_dist(rng);
    return g;
}

} // namespace testutil

// ESRI ASCII grid (.asc) reader and writer.
//
// Header keys are matched case-insensitively on read. On write the header is
// emitted in the fixed order ncols, nrows, xllcorner, yllcorner, cellsize,
// NODATA_value, followed by one line per raster row, north first. Elevations
// are serialized with 6 significant digits; nodata cells reuse the exact
// NODATA_value token so they survive a round trip bit-for-bit.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sarshadow/grid.hpp"

namespace sarshadow {

namespace detail {

inline std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

inline bool parse_double(const std::string& token, double& out) {
    const char* begin = token.c_str();
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return end == begin + token.size() && !token.empty();
}

inline bool parse_int(const std::string& token, int& out) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const long v = std::strtol(begin, &end, 10);
    if (end != begin + token.size() || token.empty()) return false;
    out = static_cast<int>(v);
    return out == v;
}

/// Shortest decimal form that parses back to exactly the same double.
inline std::string format_exact(double v) {
    char buf[64];
    for (int prec = 15; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        if (std::strtod(buf, nullptr) == v) break;
    }
    return buf;
}

inline std::string format_sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace detail

inline DemGrid read_esri_ascii(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open '" + path.string() + "' for reading");

    // Header: alphabetic key tokens followed by a value token, then data.
    std::map<std::string, std::string> header;
    std::string token;
    std::vector<std::string> data_tokens;
    while (in >> token) {
        if (!token.empty() && (std::isalpha(static_cast<unsigned char>(token[0])) || token[0] == '_')) {
            if (!data_tokens.empty())
                throw format_error("'" + path.string() + "': header key '" + token +
                                   "' appears after data values");
            const std::string key = detail::lower(token);
            std::string value;
            if (!(in >> value))
                throw format_error("'" + path.string() + "': header key '" + token +
                                   "' has no value");
            header[key] = value;
        } else {
            data_tokens.push_back(token);
        }
    }

    static const char* required[] = {"ncols", "nrows", "xllcorner", "yllcorner", "cellsize"};
    for (const char* key : required) {
        if (header.find(key) == header.end())
            throw format_error("'" + path.string() + "': missing required header key '" +
                               std::string(key) + "'");
    }
    for (const auto& [key, value] : header) {
        if (key != "ncols" && key != "nrows" && key != "xllcorner" && key != "yllcorner" &&
            key != "cellsize" && key != "nodata_value")
            throw format_error("'" + path.string() + "': unknown header key '" + key + "'");
        (void)value;
    }

    DemGrid grid;
    if (!detail::parse_int(header["ncols"], grid.ncols))
        throw format_error("'" + path.string() + "': invalid value for header key 'ncols'");
    if (!detail::parse_int(header["nrows"], grid.nrows))
        throw format_error("'" + path.string() + "': invalid value for header key 'nrows'");
    if (!detail::parse_double(header["xllcorner"], grid.xll_m))
        throw format_error("'" + path.string() + "': invalid value for header key 'xllcorner'");
    if (!detail::parse_double(header["yllcorner"], grid.yll_m))
        throw format_error("'" + path.string() + "': invalid value for header key 'yllcorner'");
    if (!detail::parse_double(header["cellsize"], grid.cell_size_m))
        throw format_error("'" + path.string() + "': invalid value for header key 'cellsize'");
    grid.nodata_value = kDefaultNodata;
    if (auto it = header.find("nodata_value"); it != header.end()) {
        if (!detail::parse_double(it->second, grid.nodata_value))
            throw format_error("'" + path.string() +
                               "': invalid value for header key 'NODATA_value'");
    }

    if (grid.nrows < 1 || grid.ncols < 1 || !(grid.cell_size_m > 0.0))
        throw format_error("'" + path.string() + "': header describes an empty or degenerate grid");

    const std::size_t expected =
        static_cast<std::size_t>(grid.nrows) * static_cast<std::size_t>(grid.ncols);
    if (data_tokens.size() != expected) {
        std::ostringstream os;
        os << "'" << path.string() << "': expected " << expected << " elevation values ("
           << grid.nrows << " x " << grid.ncols << "), got " << data_tokens.size();
        throw format_error(os.str());
    }

    grid.elevations.resize(expected);
    for (std::size_t i = 0; i < expected; ++i) {
        double v = 0.0;
        if (!detail::parse_double(data_tokens[i], v))
            throw format_error("'" + path.string() + "': invalid elevation token '" +
                               data_tokens[i] + "' at index " + std::to_string(i));
        if (!std::isfinite(v) && v != grid.nodata_value)
            throw format_error("'" + path.string() + "': non-finite elevation at index " +
                               std::to_string(i));
        grid.elevations[i] = v;
    }
    return grid;
}

inline void write_esri_ascii(const DemGrid& grid, const std::filesystem::path& path) {
    grid.validate();
    std::ofstream out(path);
    if (!out) throw io_error("cannot open '" + path.string() + "' for writing");

    const std::string nodata_token = detail::format_exact(grid.nodata_value);
    out << "ncols " << grid.ncols << "\n";
    out << "nrows " << grid.nrows << "\n";
    out << "xllcorner " << detail::format_exact(grid.xll_m) << "\n";
    out << "yllcorner " << detail::format_exact(grid.yll_m) << "\n";
    out << "cellsize " << detail::format_exact(grid.cell_size_m) << "\n";
    out << "NODATA_value " << nodata_token << "\n";

    for (int r = 0; r < grid.nrows; ++r) {
        for (int c = 0; c < grid.ncols; ++c) {
            if (c > 0) out << ' ';
            const double v = grid.at(r, c);
            if (grid.is_nodata(v))
                out << nodata_token;
            else
                out << detail::format_sig6(v);
        }
        out << '\n';
    }
    out.flush();
    if (!out) throw io_error("failed writing '" + path.string() + "'");
}

} // namespace sarshadow

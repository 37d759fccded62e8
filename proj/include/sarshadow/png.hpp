// Minimal 8-bit RGB PNG writer on top of zlib.
//
// Emits non-interlaced truecolor images with filter type 0 on every
// scanline and a single IDAT chunk. Output is deterministic for a given
// pixel buffer, which the CLI relies on for reproducible runs.
#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <vector>

#include <zlib.h>

#include "sarshadow/errors.hpp"

namespace sarshadow {

struct ImageRGB8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels; // 3 bytes per pixel, row-major

    std::size_t offset(int r, int c) const {
        return 3 * (static_cast<std::size_t>(r) * static_cast<std::size_t>(width) +
                    static_cast<std::size_t>(c));
    }
    void set(int r, int c, std::uint8_t red, std::uint8_t green, std::uint8_t blue) {
        const std::size_t o = offset(r, c);
        pixels[o] = red;
        pixels[o + 1] = green;
        pixels[o + 2] = blue;
    }
};

namespace detail {

inline void put_be32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>((v >> 24) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 16) & 0xff));
    out.push_back(static_cast<std::uint8_t>((v >> 8) & 0xff));
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
}

inline void put_chunk(std::vector<std::uint8_t>& out, const char type[4],
                      const std::uint8_t* data, std::size_t len) {
    put_be32(out, static_cast<std::uint32_t>(len));
    const std::size_t start = out.size();
    out.insert(out.end(), type, type + 4);
    if (len > 0) out.insert(out.end(), data, data + len);
    const auto crc = ::crc32(0L, out.data() + start, static_cast<uInt>(4 + len));
    put_be32(out, static_cast<std::uint32_t>(crc));
}

} // namespace detail

inline std::vector<std::uint8_t> encode_png_rgb8(const ImageRGB8& img) {
    if (img.width < 1 || img.height < 1)
        throw contract_error("encode_png_rgb8: image dimensions must be at least 1x1");
    const std::size_t expected = 3 * static_cast<std::size_t>(img.width) *
                                 static_cast<std::size_t>(img.height);
    if (img.pixels.size() != expected)
        throw contract_error("encode_png_rgb8: pixel buffer size does not match dimensions");

    // Scanlines, each prefixed with filter byte 0.
    const std::size_t stride = 3 * static_cast<std::size_t>(img.width);
    std::vector<std::uint8_t> raw;
    raw.reserve(static_cast<std::size_t>(img.height) * (stride + 1));
    for (int r = 0; r < img.height; ++r) {
        raw.push_back(0);
        const std::uint8_t* row = img.pixels.data() + static_cast<std::size_t>(r) * stride;
        raw.insert(raw.end(), row, row + stride);
    }

    uLongf compressed_len = compressBound(static_cast<uLong>(raw.size()));
    std::vector<std::uint8_t> compressed(compressed_len);
    if (compress2(compressed.data(), &compressed_len, raw.data(),
                  static_cast<uLong>(raw.size()), 6) != Z_OK)
        throw io_error("encode_png_rgb8: zlib compression failed");
    compressed.resize(compressed_len);

    std::vector<std::uint8_t> out;
    static const std::uint8_t signature[8] = {137, 80, 78, 71, 13, 10, 26, 10};
    out.insert(out.end(), signature, signature + 8);

    std::vector<std::uint8_t> ihdr;
    detail::put_be32(ihdr, static_cast<std::uint32_t>(img.width));
    detail::put_be32(ihdr, static_cast<std::uint32_t>(img.height));
    ihdr.push_back(8);  // bit depth
    ihdr.push_back(2);  // truecolor
    ihdr.push_back(0);  // compression
    ihdr.push_back(0);  // filter
    ihdr.push_back(0);  // no interlace
    detail::put_chunk(out, "IHDR", ihdr.data(), ihdr.size());
    detail::put_chunk(out, "IDAT", compressed.data(), compressed.size());
    detail::put_chunk(out, "IEND", nullptr, 0);
    return out;
}

inline void write_png_rgb8(const ImageRGB8& img, const std::filesystem::path& path) {
    const std::vector<std::uint8_t> bytes = encode_png_rgb8(img);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open '" + path.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw io_error("failed writing '" + path.string() + "'");
}

} // namespace sarshadow

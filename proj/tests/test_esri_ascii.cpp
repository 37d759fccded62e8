#include <catch2/catch.hpp>

#include <cstdlib>
#include <fstream>
#include <random>

#include "sarshadow/esri_ascii.hpp"
#include "test_util.hpp"

using namespace sarshadow;
using testutil::TempDir;

namespace {

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p);
    out << text;
}

// What a value looks like after one trip through the 6-significant-digit
// serializer.
double sig6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::strtod(buf, nullptr);
}

} // namespace

TEST_CASE("read_esri_ascii parses a minimal well-formed file") {
    TempDir dir;
    const auto p = dir.file("tiny.asc");
    write_text(p, "ncols 2\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize 30\n5 7\n");

    const DemGrid g = read_esri_ascii(p);
    CHECK(g.nrows == 1);
    CHECK(g.ncols == 2);
    CHECK(g.cell_size_m == 30.0);
    CHECK(g.nodata_value == -9999.0); // default when the header omits it
    CHECK(g.elevations == std::vector<double>{5.0, 7.0});
}

TEST_CASE("read_esri_ascii accepts case-insensitive header keys") {
    TempDir dir;
    const auto p = dir.file("caps.asc");
    write_text(p, "NCOLS 1\nnRows 2\nXLLCORNER 10\nyllcorner -5\nCellSize 2.5\nNODATA_VALUE -1\n3 -1\n");
    const DemGrid g = read_esri_ascii(p);
    CHECK(g.ncols == 1);
    CHECK(g.nrows == 2);
    CHECK(g.xll_m == 10.0);
    CHECK(g.yll_m == -5.0);
    CHECK(g.nodata_value == -1.0);
    CHECK(g.is_nodata(g.at(1, 0)));
}

TEST_CASE("read_esri_ascii rejects a wrong cell count with expected/actual") {
    TempDir dir;
    const auto p = dir.file("short.asc");
    write_text(p, "ncols 2\nnrows 2\nxllcorner 0\nyllcorner 0\ncellsize 1\n1 2 3\n");
    try {
        read_esri_ascii(p);
        FAIL("expected format_error");
    } catch (const format_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("4") != std::string::npos);
        CHECK(msg.find("3") != std::string::npos);
    }
}

TEST_CASE("read_esri_ascii names the offending header key") {
    TempDir dir;

    SECTION("missing required key") {
        const auto p = dir.file("nokey.asc");
        write_text(p, "ncols 1\nxllcorner 0\nyllcorner 0\ncellsize 1\n1\n");
        try {
            read_esri_ascii(p);
            FAIL("expected format_error");
        } catch (const format_error& e) {
            CHECK(std::string(e.what()).find("nrows") != std::string::npos);
        }
    }
    SECTION("unparsable value") {
        const auto p = dir.file("badval.asc");
        write_text(p, "ncols 1\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize bogus\n1\n");
        try {
            read_esri_ascii(p);
            FAIL("expected format_error");
        } catch (const format_error& e) {
            CHECK(std::string(e.what()).find("cellsize") != std::string::npos);
        }
    }
    SECTION("unknown key") {
        const auto p = dir.file("unknown.asc");
        write_text(p, "ncols 1\nnrows 1\nxllcorner 0\nyllcorner 0\ncellsize 1\nbanana 3\n1\n");
        try {
            read_esri_ascii(p);
            FAIL("expected format_error");
        } catch (const format_error& e) {
            CHECK(std::string(e.what()).find("banana") != std::string::npos);
        }
    }
}

TEST_CASE("read_esri_ascii fails on a missing file") {
    CHECK_THROWS_AS(read_esri_ascii("/nonexistent/dir/zzz.asc"), io_error);
}

TEST_CASE("write_esri_ascii emits 1x1 data section '0'") {
    TempDir dir;
    const auto p = dir.file("one.asc");
    write_esri_ascii(testutil::make_grid(1, 1, 1.0, {0.0}), p);
    const auto lines = testutil::split_lines(testutil::read_file(p));
    REQUIRE(lines.size() == 7);
    CHECK(lines[0] == "ncols 1");
    CHECK(lines[1] == "nrows 1");
    CHECK(lines[2] == "xllcorner 0");
    CHECK(lines[3] == "yllcorner 0");
    CHECK(lines[4] == "cellsize 1");
    CHECK(lines[5] == "NODATA_value -9999");
    CHECK(lines[6] == "0");
}

TEST_CASE("write_esri_ascii serializes nodata cells as the sentinel token") {
    TempDir dir;
    const auto p = dir.file("nodata.asc");
    DemGrid g = testutil::make_grid(1, 3, 30.0, {1.25, 0.0, 0.0});
    g.nodata_value = -32768.5;
    g.at(0, 1) = g.nodata_value;
    write_esri_ascii(g, p);

    const auto lines = testutil::split_lines(testutil::read_file(p));
    CHECK(lines.back() == "1.25 -32768.5 0");

    const DemGrid back = read_esri_ascii(p);
    CHECK(back.nodata_value == g.nodata_value);
    CHECK(back.is_nodata(back.at(0, 1)));
    CHECK_FALSE(back.is_nodata(back.at(0, 0)));
}

TEST_CASE("write_esri_ascii fails on an unwritable path") {
    const DemGrid g = testutil::make_flat_grid(1, 1, 1.0, 0.0);
    CHECK_THROWS_AS(write_esri_ascii(g, "/nonexistent/dir/zzz.asc"), io_error);
}

TEST_CASE("esri ascii round-trip is the identity at serialization precision") {
    TempDir dir;
    std::mt19937_64 rng(20260808);
    std::uniform_real_distribution<double> coord(-1e5, 1e5);
    std::uniform_int_distribution<int> dim(1, 12);
    std::uniform_real_distribution<double> cell(0.1, 120.0);

    for (int trial = 0; trial < 25; ++trial) {
        DemGrid g = testutil::random_grid(rng, dim(rng), dim(rng), cell(rng), -500.0, 3000.0,
                                          trial % 3 == 0 ? 0.15 : 0.0);
        g.xll_m = coord(rng);
        g.yll_m = coord(rng);

        const auto p1 = dir.file("rt1.asc");
        const auto p2 = dir.file("rt2.asc");
        write_esri_ascii(g, p1);
        const DemGrid back = read_esri_ascii(p1);

        // Header fields round-trip exactly; elevations at 6 significant digits.
        CHECK(back.nrows == g.nrows);
        CHECK(back.ncols == g.ncols);
        CHECK(back.cell_size_m == g.cell_size_m);
        CHECK(back.nodata_value == g.nodata_value);
        CHECK(back.xll_m == g.xll_m);
        CHECK(back.yll_m == g.yll_m);
        REQUIRE(back.elevations.size() == g.elevations.size());
        for (std::size_t i = 0; i < g.elevations.size(); ++i) {
            if (g.is_nodata(g.elevations[i]))
                CHECK(back.is_nodata(back.elevations[i]));
            else
                CHECK(back.elevations[i] == sig6(g.elevations[i]));
        }

        // A second trip changes nothing: write(read(write(g))) == write(g).
        write_esri_ascii(back, p2);
        CHECK(testutil::read_file(p1) == testutil::read_file(p2));
    }
}

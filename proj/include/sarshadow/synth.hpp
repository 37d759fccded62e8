// Synthetic terrain generation: 1D test profiles and 2D Gaussian-mixture
// hills, with a JSON spec format for reproducible demo runs.
#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <json.hpp>

#include "sarshadow/grid.hpp"

namespace sarshadow {

enum class SyntheticKind { Sinusoid, Logarithm, Gaussian1D, GaussianMix2D };

struct GaussianComponent {
    double amplitude_m = 0.0;
    double cx_m = 0.0;
    double cy_m = 0.0;
    double sigma_x_m = 1.0;
    double sigma_y_m = 1.0;
};

struct SyntheticSpec {
    SyntheticKind kind = SyntheticKind::Sinusoid;
    int n = 0;     // 1D sample count
    int nrows = 0; // 2D dims
    int ncols = 0;
    double cell_size_m = 1.0;

    // sinusoid
    double amplitude_m = 0.0;
    double period_m = 1.0;
    double phase_rad = 0.0;
    double offset_m = 0.0;
    // logarithm
    double scale_m = 0.0;
    double shift = 1.0;
    // gaussian kinds
    std::vector<GaussianComponent> components;

    bool is_1d() const { return kind != SyntheticKind::GaussianMix2D; }

    void validate() const {
        if (!(cell_size_m > 0.0)) throw spec_error("synthetic spec: cell_size_m must be positive");
        if (is_1d() && n < 2) throw spec_error("synthetic spec: 1D kinds need n >= 2 samples");
        switch (kind) {
        case SyntheticKind::Sinusoid:
            if (amplitude_m < 0.0) throw spec_error("synthetic spec: amplitude_m must be >= 0");
            if (!(period_m > 0.0)) throw spec_error("synthetic spec: period_m must be positive");
            break;
        case SyntheticKind::Logarithm:
            if (scale_m < 0.0) throw spec_error("synthetic spec: scale_m must be >= 0");
            if (!(shift > 0.0)) throw spec_error("synthetic spec: shift must be positive");
            break;
        case SyntheticKind::Gaussian1D:
        case SyntheticKind::GaussianMix2D:
            if (components.empty())
                throw spec_error("synthetic spec: at least one gaussian component is required");
            for (const auto& comp : components) {
                if (comp.amplitude_m < 0.0)
                    throw spec_error("synthetic spec: component amplitude must be >= 0");
                if (!(comp.sigma_x_m > 0.0) ||
                    (kind == SyntheticKind::GaussianMix2D && !(comp.sigma_y_m > 0.0)))
                    throw spec_error("synthetic spec: component sigma must be positive");
            }
            if (kind == SyntheticKind::GaussianMix2D && (nrows < 1 || ncols < 1))
                throw spec_error("synthetic spec: 2D kind needs nrows >= 1 and ncols >= 1");
            break;
        }
    }
};

/// Elevation profile z[j] sampled at x = j * cell_size_m. Sinusoids are
/// clipped below at zero so profiles stay DEM-like.
inline std::vector<double> gen_profile_1d(const SyntheticSpec& spec) {
    if (!spec.is_1d()) throw spec_error("gen_profile_1d: spec kind is not 1D");
    spec.validate();
    constexpr double two_pi = 2.0 * 3.14159265358979323846;
    std::vector<double> z(static_cast<std::size_t>(spec.n), 0.0);
    for (int j = 0; j < spec.n; ++j) {
        const double x = j * spec.cell_size_m;
        switch (spec.kind) {
        case SyntheticKind::Sinusoid:
            z[j] = std::max(
                0.0, spec.offset_m +
                         spec.amplitude_m * std::sin(two_pi * x / spec.period_m + spec.phase_rad));
            break;
        case SyntheticKind::Logarithm:
            z[j] = spec.scale_m * std::log(1.0 + x / spec.shift);
            break;
        case SyntheticKind::Gaussian1D: {
            double acc = 0.0;
            for (const auto& comp : spec.components) {
                const double dx = x - comp.cx_m;
                acc += comp.amplitude_m *
                       std::exp(-dx * dx / (2.0 * comp.sigma_x_m * comp.sigma_x_m));
            }
            z[j] = acc;
            break;
        }
        default:
            break;
        }
    }
    return z;
}

/// Sum of 2D Gaussian hills on a grid with the lower-left corner at the
/// origin: cell (r, c) samples x = c * cell, y = (nrows-1-r) * cell.
inline DemGrid gen_gaussian_mix_2d(const SyntheticSpec& spec) {
    if (spec.kind != SyntheticKind::GaussianMix2D)
        throw spec_error("gen_gaussian_mix_2d: spec kind is not gaussian_mix_2d");
    spec.validate();

    DemGrid grid;
    grid.nrows = spec.nrows;
    grid.ncols = spec.ncols;
    grid.cell_size_m = spec.cell_size_m;
    grid.xll_m = 0.0;
    grid.yll_m = 0.0;
    grid.elevations.resize(grid.cell_count());
    for (int r = 0; r < grid.nrows; ++r) {
        const double y = (grid.nrows - 1 - r) * spec.cell_size_m;
        for (int c = 0; c < grid.ncols; ++c) {
            const double x = c * spec.cell_size_m;
            double acc = 0.0;
            for (const auto& comp : spec.components) {
                const double dx = x - comp.cx_m;
                const double dy = y - comp.cy_m;
                acc += comp.amplitude_m *
                       std::exp(-(dx * dx / (2.0 * comp.sigma_x_m * comp.sigma_x_m) +
                                  dy * dy / (2.0 * comp.sigma_y_m * comp.sigma_y_m)));
            }
            grid.at(r, c) = acc;
        }
    }
    return grid;
}

inline SyntheticKind synthetic_kind_from_string(const std::string& s) {
    if (s == "sinusoid") return SyntheticKind::Sinusoid;
    if (s == "logarithm") return SyntheticKind::Logarithm;
    if (s == "gaussian_1d") return SyntheticKind::Gaussian1D;
    if (s == "gaussian_mix_2d") return SyntheticKind::GaussianMix2D;
    throw spec_error("synthetic spec: unknown kind '" + s + "'");
}

inline std::string to_string(SyntheticKind kind) {
    switch (kind) {
    case SyntheticKind::Sinusoid: return "sinusoid";
    case SyntheticKind::Logarithm: return "logarithm";
    case SyntheticKind::Gaussian1D: return "gaussian_1d";
    case SyntheticKind::GaussianMix2D: return "gaussian_mix_2d";
    }
    return "?";
}

/// Spec document layout: top-level kind discriminator plus n / nrows+ncols /
/// cell_size_m, and params holding either the scalar fields of the 1D
/// analytic kinds or an array of {a, cx, cy, sx, sy} component objects.
inline SyntheticSpec spec_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw spec_error("synthetic spec: document must be a JSON object");
    if (!j.contains("kind")) throw spec_error("synthetic spec: missing 'kind'");
    SyntheticSpec spec;
    spec.kind = synthetic_kind_from_string(j.at("kind").get<std::string>());
    spec.n = j.value("n", 0);
    spec.nrows = j.value("nrows", 0);
    spec.ncols = j.value("ncols", 0);
    spec.cell_size_m = j.value("cell_size_m", 1.0);

    const nlohmann::json params = j.value("params", nlohmann::json::object());
    switch (spec.kind) {
    case SyntheticKind::Sinusoid:
        spec.amplitude_m = params.value("amplitude_m", 0.0);
        spec.period_m = params.value("period_m", 1.0);
        spec.phase_rad = params.value("phase_rad", 0.0);
        spec.offset_m = params.value("offset_m", 0.0);
        break;
    case SyntheticKind::Logarithm:
        spec.scale_m = params.value("scale_m", 0.0);
        spec.shift = params.value("shift", 1.0);
        break;
    case SyntheticKind::Gaussian1D:
    case SyntheticKind::GaussianMix2D:
        if (!params.is_array())
            throw spec_error("synthetic spec: gaussian kinds need a params array");
        for (const auto& p : params) {
            GaussianComponent comp;
            comp.amplitude_m = p.value("a", 0.0);
            comp.cx_m = p.value("cx", 0.0);
            comp.cy_m = p.value("cy", 0.0);
            comp.sigma_x_m = p.value("sx", 1.0);
            comp.sigma_y_m = p.value("sy", comp.sigma_x_m);
            spec.components.push_back(comp);
        }
        break;
    }
    spec.validate();
    return spec;
}

inline nlohmann::json spec_to_json(const SyntheticSpec& spec) {
    nlohmann::json j{{"kind", to_string(spec.kind)}, {"cell_size_m", spec.cell_size_m}};
    if (spec.is_1d())
        j["n"] = spec.n;
    else {
        j["nrows"] = spec.nrows;
        j["ncols"] = spec.ncols;
    }
    switch (spec.kind) {
    case SyntheticKind::Sinusoid:
        j["params"] = {{"amplitude_m", spec.amplitude_m},
                       {"period_m", spec.period_m},
                       {"phase_rad", spec.phase_rad},
                       {"offset_m", spec.offset_m}};
        break;
    case SyntheticKind::Logarithm:
        j["params"] = {{"scale_m", spec.scale_m}, {"shift", spec.shift}};
        break;
    case SyntheticKind::Gaussian1D:
    case SyntheticKind::GaussianMix2D: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& comp : spec.components)
            arr.push_back({{"a", comp.amplitude_m},
                           {"cx", comp.cx_m},
                           {"cy", comp.cy_m},
                           {"sx", comp.sigma_x_m},
                           {"sy", comp.sigma_y_m}});
        j["params"] = arr;
        break;
    }
    }
    return j;
}

} // namespace sarshadow

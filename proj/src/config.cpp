// SPDX-License-Identifier: Apache-2.0
#include "polyharm/config.hpp"

#include <cstdlib>

#include <json.hpp>

#include "polyharm/errors.hpp"
#include "polyharm/io.hpp"

namespace polyharm {

Defaults default_config() {
    Defaults d;
    d.grid = GridSpec{64, 256, 0.995};
    d.radii.clear();
    for (int i = 10; i <= 99; ++i) d.radii.push_back(i / 100.0);
    d.radii.push_back(0.995);
    // Mid-range radii plus a tail approaching 1; polynomial-type maps need
    // the tail to settle below the continuity threshold.
    d.boundary_radii = {0.5, 0.6, 0.7, 0.8, 0.9};
    double gap = 1e-2;
    for (int k = 2; k <= 11; ++k) {
        d.boundary_radii.push_back(1.0 - gap);
        gap /= 10.0;
    }
    d.curve_samples = 1024;
    d.cutoffs = {1e-2, 1e-3, 1e-4};
    d.gamma_samples = 262144;
    d.render = RenderSpec{};
    d.log_truncation_degree = 64;
    return d;
}

Defaults apply_config(Defaults base, const std::string& json_text) {
    Json j;
    try {
        j = Json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecParseError(std::string("config: ") + e.what());
    }
    if (!j.is_object()) throw SpecParseError("config: root must be an object");
    if (j.contains("grid")) {
        const auto& g = j["grid"];
        if (g.contains("radial")) base.grid.radial_count = g["radial"].get<int>();
        if (g.contains("angular")) base.grid.angular_count = g["angular"].get<int>();
        if (g.contains("max_radius"))
            base.grid.max_radius = g["max_radius"].get<double>();
    }
    if (j.contains("radii")) base.radii = j["radii"].get<std::vector<double>>();
    if (j.contains("boundary_radii"))
        base.boundary_radii = j["boundary_radii"].get<std::vector<double>>();
    if (j.contains("curve_samples"))
        base.curve_samples = j["curve_samples"].get<int>();
    if (j.contains("cutoffs"))
        base.cutoffs = j["cutoffs"].get<std::vector<double>>();
    if (j.contains("gamma_samples"))
        base.gamma_samples = j["gamma_samples"].get<int>();
    if (j.contains("log_truncation_degree"))
        base.log_truncation_degree = j["log_truncation_degree"].get<int>();
    if (j.contains("render")) {
        const auto& r = j["render"];
        if (r.contains("circles")) base.render.circles = r["circles"].get<int>();
        if (r.contains("rays")) base.render.rays = r["rays"].get<int>();
        if (r.contains("samples_per_curve"))
            base.render.samples_per_curve = r["samples_per_curve"].get<int>();
        if (r.contains("max_radius"))
            base.render.max_radius = r["max_radius"].get<double>();
        if (r.contains("canvas")) base.render.canvas = r["canvas"].get<double>();
    }
    return base;
}

Defaults load_config_from_env() {
    Defaults d = default_config();
    const char* path = std::getenv("POLYHARM_CONFIG");
    if (path && *path) d = apply_config(std::move(d), read_file(path));
    return d;
}

}  // namespace polyharm

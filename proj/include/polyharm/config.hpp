// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "polyharm/render.hpp"
#include "polyharm/types.hpp"

namespace polyharm {

/// One canonical defaults profile, overridable by a JSON config file
/// (POLYHARM_CONFIG) and then by command-line flags.
struct Defaults {
    GridSpec grid;                       // 64 x 256, max_radius 0.995
    std::vector<double> radii;           // 0.10 .. 0.99 step 0.01, plus 0.995
    std::vector<double> boundary_radii;  // mid-range plus a near-1 tail
    int curve_samples = 1024;
    std::vector<double> cutoffs{1e-2, 1e-3, 1e-4};
    int gamma_samples = 262144;  // per side
    RenderSpec render;
    int log_truncation_degree = 64;  // degree for log-type approximations
};

Defaults default_config();

/// Defaults, overridden by the JSON file named in POLYHARM_CONFIG when that
/// variable is set. Missing keys keep their defaults.
Defaults load_config_from_env();

/// Applies overrides from a parsed config JSON object.
Defaults apply_config(Defaults base, const std::string& json_text);

}  // namespace polyharm

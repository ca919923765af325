// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "polyharm/series.hpp"

namespace polyharm {

/// Polar grid to push through a map: concentric circles |z| = k*R/circles
/// and rays arg z = 2*pi*j/rays, each sampled with samples_per_curve points.
struct RenderSpec {
    int circles = 8;
    int rays = 16;
    int samples_per_curve = 512;
    double max_radius = 0.995;
    double canvas = 800.0;
};

enum class RenderTarget { slice_sum, full_map, dilatation };

/// "F1-sum" images the associated harmonic map g_1 = sum F_k, "f" the
/// polyharmonic map itself, "dilatation" the grid under a_f.
const char* render_target_name(RenderTarget t);

struct RenderProduct {
    std::string csv;  // header curve_id,t,re,im; one row per sample
    std::string svg;  // polylines mirroring the CSV after the recorded
                      // affine canvas transform
    int pole_skips = 0;  // dilatation samples dropped at degenerate points
};

/// Renders one target. Dilatation poles split the polyline and are counted,
/// never fatal.
RenderProduct render_map(const PolyharmonicMap& f, RenderTarget which,
                         const RenderSpec& spec);

}  // namespace polyharm

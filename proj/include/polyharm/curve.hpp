// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "polyharm/types.hpp"

namespace polyharm {

/// Polygonal curve: ordered parameter values with matching complex sample
/// points. For closed curves the last point is adjacent to the first.
struct Curve {
    std::vector<double> params;
    std::vector<Complex> points;
    bool closed = false;

    std::size_t size() const { return points.size(); }

    /// Builds a curve, dropping consecutive duplicate points (and, for
    /// closed curves, a trailing duplicate of the first point).
    static Curve closed_loop(std::vector<double> t, std::vector<Complex> pts);
    static Curve open_path(std::vector<double> t, std::vector<Complex> pts);
};

/// Image of the circle |z| = radius under F, sampled at n uniform angles.
Curve circle_image(const std::function<Complex(Complex)>& F, double radius,
                   int n);

/// Minimum distance from w0 to the polygonal curve (segments, not just
/// vertices).
double distance_to_curve(const Curve& c, Complex w0);

/// Curve with a midpoint inserted into every segment. The winding number of
/// a polygon is unchanged by this refinement.
Curve refine_midpoints(const Curve& c);

/// Total change of arg(point - w0) around a closed curve, divided by 2*pi.
///
/// Per-segment angle increments must stay below pi/2; if any segment exceeds
/// that after one midpoint-refinement pass, CurveTooCoarseError is thrown.
/// Throws PointOnCurveError when w0 is within 1e-10 of the curve.
/// The result is an exact integer.
int winding_number(const Curve& c, Complex w0);

struct CrossingWitness {
    std::size_t seg_a = 0;
    std::size_t seg_b = 0;
    Complex point{0.0, 0.0};
};

/// First crossing between non-adjacent segments of the curve, if any.
std::optional<CrossingWitness> curve_self_intersection(const Curve& c);

/// Whether any segment of `a` intersects any segment of `b`.
bool curves_intersect(const Curve& a, const Curve& b);

}  // namespace polyharm

// SPDX-License-Identifier: Apache-2.0
#include "polyharm/curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

constexpr double kOnCurveDistance = 1e-10;
constexpr double kCoarseAngle = std::numbers::pi / 2.0;

void dedup(std::vector<double>& t, std::vector<Complex>& pts, bool closed) {
    std::vector<double> t2;
    std::vector<Complex> p2;
    t2.reserve(t.size());
    p2.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!p2.empty() && pts[i] == p2.back()) continue;
        t2.push_back(t[i]);
        p2.push_back(pts[i]);
    }
    if (closed && p2.size() > 1 && p2.back() == p2.front()) {
        p2.pop_back();
        t2.pop_back();
    }
    t = std::move(t2);
    pts = std::move(p2);
}

double cross(Complex o, Complex a, Complex b) {
    return (a.real() - o.real()) * (b.imag() - o.imag()) -
           (a.imag() - o.imag()) * (b.real() - o.real());
}

double point_segment_distance(Complex p, Complex a, Complex b) {
    const Complex ab = b - a;
    const double denom = std::norm(ab);
    if (denom == 0.0) return std::abs(p - a);
    double t = ((p - a).real() * ab.real() + (p - a).imag() * ab.imag()) / denom;
    t = std::clamp(t, 0.0, 1.0);
    return std::abs(p - (a + t * ab));
}

bool on_segment_collinear(Complex a, Complex b, Complex q) {
    return std::min(a.real(), b.real()) <= q.real() &&
           q.real() <= std::max(a.real(), b.real()) &&
           std::min(a.imag(), b.imag()) <= q.imag() &&
           q.imag() <= std::max(a.imag(), b.imag());
}

bool segments_intersect(Complex a1, Complex a2, Complex b1, Complex b2,
                        Complex* where) {
    // Bounding-box reject first.
    if (std::max(a1.real(), a2.real()) < std::min(b1.real(), b2.real()) ||
        std::max(b1.real(), b2.real()) < std::min(a1.real(), a2.real()) ||
        std::max(a1.imag(), a2.imag()) < std::min(b1.imag(), b2.imag()) ||
        std::max(b1.imag(), b2.imag()) < std::min(a1.imag(), a2.imag()))
        return false;
    const double d1 = cross(b1, b2, a1);
    const double d2 = cross(b1, b2, a2);
    const double d3 = cross(a1, a2, b1);
    const double d4 = cross(a1, a2, b2);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        const double t = d1 / (d1 - d2);
        if (where) *where = a1 + t * (a2 - a1);
        return true;
    }
    // Collinear / touching cases.
    if (d1 == 0 && on_segment_collinear(b1, b2, a1)) { if (where) *where = a1; return true; }
    if (d2 == 0 && on_segment_collinear(b1, b2, a2)) { if (where) *where = a2; return true; }
    if (d3 == 0 && on_segment_collinear(a1, a2, b1)) { if (where) *where = b1; return true; }
    if (d4 == 0 && on_segment_collinear(a1, a2, b2)) { if (where) *where = b2; return true; }
    return false;
}

}  // namespace

Curve Curve::closed_loop(std::vector<double> t, std::vector<Complex> pts) {
    if (t.size() != pts.size())
        throw DomainError("Curve: params and points differ in length");
    dedup(t, pts, true);
    return Curve{std::move(t), std::move(pts), true};
}

Curve Curve::open_path(std::vector<double> t, std::vector<Complex> pts) {
    if (t.size() != pts.size())
        throw DomainError("Curve: params and points differ in length");
    dedup(t, pts, false);
    return Curve{std::move(t), std::move(pts), false};
}

Curve circle_image(const std::function<Complex(Complex)>& F, double radius,
                   int n) {
    if (n < 3) throw DomainError("circle_image: need at least 3 samples");
    std::vector<double> t(n);
    std::vector<Complex> pts(n);
    for (int j = 0; j < n; ++j) {
        t[j] = 2.0 * std::numbers::pi * j / n;
        pts[j] = F(std::polar(radius, t[j]));
    }
    return Curve::closed_loop(std::move(t), std::move(pts));
}

double distance_to_curve(const Curve& c, Complex w0) {
    const std::size_t n = c.size();
    if (n == 0) throw DomainError("distance_to_curve: empty curve");
    if (n == 1) return std::abs(w0 - c.points[0]);
    double best = std::numeric_limits<double>::infinity();
    const std::size_t segs = c.closed ? n : n - 1;
    for (std::size_t i = 0; i < segs; ++i) {
        best = std::min(best, point_segment_distance(w0, c.points[i],
                                                     c.points[(i + 1) % n]));
    }
    return best;
}

Curve refine_midpoints(const Curve& c) {
    const std::size_t n = c.size();
    std::vector<double> t;
    std::vector<Complex> pts;
    t.reserve(2 * n);
    pts.reserve(2 * n);
    const std::size_t segs = c.closed ? n : n - 1;
    for (std::size_t i = 0; i < segs; ++i) {
        const std::size_t j = (i + 1) % n;
        t.push_back(c.params[i]);
        pts.push_back(c.points[i]);
        // Parameter of the wrap-around midpoint is extrapolated past the end.
        const double tj = (j == 0) ? c.params[i] + (c.params[1] - c.params[0])
                                   : c.params[j];
        t.push_back(0.5 * (c.params[i] + tj));
        pts.push_back(0.5 * (c.points[i] + c.points[j]));
    }
    if (!c.closed) {
        t.push_back(c.params.back());
        pts.push_back(c.points.back());
    }
    return c.closed ? Curve::closed_loop(std::move(t), std::move(pts))
                    : Curve::open_path(std::move(t), std::move(pts));
}

int winding_number(const Curve& c, Complex w0) {
    if (!c.closed) throw DomainError("winding_number: curve must be closed");
    if (c.size() < 3)
        throw DomainError("winding_number: need at least 3 distinct points");
    if (distance_to_curve(c, w0) <= kOnCurveDistance)
        throw PointOnCurveError("winding_number: point within 1e-10 of curve");

    const auto accumulate = [&](const std::vector<Complex>& pts, double* total) {
        const std::size_t n = pts.size();
        double sum = 0.0;
        bool fine = true;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex a = pts[i] - w0;
            const Complex b = pts[(i + 1) % n] - w0;
            const double d = std::arg(b / a);
            if (std::abs(d) >= kCoarseAngle) fine = false;
            sum += d;
        }
        *total = sum;
        return fine;
    };

    double total = 0.0;
    if (!accumulate(c.points, &total)) {
        const Curve refined = refine_midpoints(c);
        if (!accumulate(refined.points, &total))
            throw CurveTooCoarseError(
                "winding_number: per-segment angle increment >= pi/2 after one "
                "refinement pass");
    }
    const double turns = total / (2.0 * std::numbers::pi);
    const long w = std::lround(turns);
    if (std::abs(turns - static_cast<double>(w)) > 0.25)
        throw CurveTooCoarseError("winding_number: accumulated turn not near an integer");
    return static_cast<int>(w);
}

std::optional<CrossingWitness> curve_self_intersection(const Curve& c) {
    const std::size_t n = c.size();
    if (n < 4) throw DomainError("curve_self_intersection: need at least 4 points");
    const std::size_t segs = c.closed ? n : n - 1;
    for (std::size_t i = 0; i + 1 < segs; ++i) {
        const Complex a1 = c.points[i];
        const Complex a2 = c.points[(i + 1) % n];
        for (std::size_t j = i + 2; j < segs; ++j) {
            if (c.closed && i == 0 && j == segs - 1) continue;  // wrap adjacency
            Complex where;
            if (segments_intersect(a1, a2, c.points[j], c.points[(j + 1) % n],
                                   &where))
                return CrossingWitness{i, j, where};
        }
    }
    return std::nullopt;
}

bool curves_intersect(const Curve& a, const Curve& b) {
    const std::size_t na = a.size(), nb = b.size();
    if (na < 2 || nb < 2) return false;
    const std::size_t sa = a.closed ? na : na - 1;
    const std::size_t sb = b.closed ? nb : nb - 1;
    for (std::size_t i = 0; i < sa; ++i) {
        const Complex a1 = a.points[i];
        const Complex a2 = a.points[(i + 1) % na];
        for (std::size_t j = 0; j < sb; ++j) {
            if (segments_intersect(a1, a2, b.points[j], b.points[(j + 1) % nb],
                                   nullptr))
                return true;
        }
    }
    return false;
}

}  // namespace polyharm

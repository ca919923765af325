// SPDX-License-Identifier: Apache-2.0
#include "polyharm/render.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <sstream>
#include <vector>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

struct Sample {
    double t;
    Complex w;
    bool pole;  // degenerate dilatation point; breaks the polyline
};

struct RenderCurve {
    std::string id;
    std::vector<Sample> samples;
};

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

}  // namespace

const char* render_target_name(RenderTarget t) {
    switch (t) {
        case RenderTarget::slice_sum: return "F1-sum";
        case RenderTarget::full_map: return "f";
        case RenderTarget::dilatation: return "dilatation";
    }
    return "f";
}

RenderProduct render_map(const PolyharmonicMap& f, RenderTarget which,
                         const RenderSpec& spec) {
    if (spec.circles < 1 || spec.rays < 1 || spec.samples_per_curve < 2)
        throw DomainError("render: counts must be positive");
    if (!(spec.max_radius > 0.0) || !(spec.max_radius < 1.0))
        throw DomainError("render: max_radius must lie in (0, 1)");

    const HarmonicMap g1 = slice(f, 1.0);
    int pole_skips = 0;
    const auto value = [&](Complex z, Complex* out) {
        switch (which) {
            case RenderTarget::slice_sum: *out = eval_harmonic(g1, z); return true;
            case RenderTarget::full_map: *out = eval_polyharmonic(f, z); return true;
            case RenderTarget::dilatation:
                try {
                    *out = dilatation(f, z);
                    return true;
                } catch (const DegeneratePointError&) {
                    ++pole_skips;
                    return false;
                }
        }
        return false;
    };

    std::vector<RenderCurve> curves;
    for (int k = 1; k <= spec.circles; ++k) {
        RenderCurve c;
        c.id = "circle_" + std::to_string(k);
        const double r = spec.max_radius * k / spec.circles;
        for (int j = 0; j < spec.samples_per_curve; ++j) {
            const double theta =
                2.0 * std::numbers::pi * j / spec.samples_per_curve;
            Complex w;
            const bool ok = value(std::polar(r, theta), &w);
            c.samples.push_back(Sample{theta, ok ? w : Complex{}, !ok});
        }
        curves.push_back(std::move(c));
    }
    for (int j = 0; j < spec.rays; ++j) {
        RenderCurve c;
        c.id = "ray_" + std::to_string(j);
        const double phi = 2.0 * std::numbers::pi * j / spec.rays;
        for (int i = 1; i <= spec.samples_per_curve; ++i) {
            const double t = spec.max_radius * i / spec.samples_per_curve;
            Complex w;
            const bool ok = value(std::polar(t, phi), &w);
            c.samples.push_back(Sample{t, ok ? w : Complex{}, !ok});
        }
        curves.push_back(std::move(c));
    }

    // CSV mirrors every retained sample exactly.
    std::ostringstream csv;
    csv << "curve_id,t,re,im\n";
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const RenderCurve& c : curves) {
        for (const Sample& s : c.samples) {
            if (s.pole) continue;
            csv << c.id << ',' << fmt(s.t) << ',' << fmt(s.w.real()) << ','
                << fmt(s.w.imag()) << '\n';
            xmin = std::min(xmin, s.w.real());
            xmax = std::max(xmax, s.w.real());
            ymin = std::min(ymin, s.w.imag());
            ymax = std::max(ymax, s.w.imag());
        }
    }
    if (!(xmin <= xmax)) { xmin = -1; xmax = 1; ymin = -1; ymax = 1; }

    // Auto-scaled canvas with a 5% margin; y is flipped for SVG.
    const double spanx = std::max(xmax - xmin, 1e-12);
    const double spany = std::max(ymax - ymin, 1e-12);
    const double scale = spec.canvas / (1.10 * std::max(spanx, spany));
    const double cx = 0.5 * (xmin + xmax), cy = 0.5 * (ymin + ymax);
    const double half = 0.5 * spec.canvas;
    const auto to_px = [&](Complex w) {
        return Complex{half + scale * (w.real() - cx),
                       half - scale * (w.imag() - cy)};
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(spec.canvas)
        << "\" height=\"" << fmt(spec.canvas) << "\" viewBox=\"0 0 "
        << fmt(spec.canvas) << ' ' << fmt(spec.canvas) << "\">\n";
    svg << "<!-- transform: px = " << fmt(half) << " + " << fmt(scale)
        << " * (re - " << fmt(cx) << "); py = " << fmt(half) << " - "
        << fmt(scale) << " * (im - " << fmt(cy) << ") -->\n";
    if (pole_skips > 0)
        svg << "<!-- " << pole_skips
            << " samples skipped at degenerate dilatation points; polylines "
               "split there -->\n";
    for (const RenderCurve& c : curves) {
        // Split the polyline wherever samples were dropped.
        std::vector<std::vector<Complex>> runs(1);
        for (const Sample& s : c.samples) {
            if (s.pole) {
                if (!runs.back().empty()) runs.emplace_back();
                continue;
            }
            runs.back().push_back(s.w);
        }
        for (const auto& run : runs) {
            if (run.size() < 2) continue;
            svg << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1\" "
                   "data-curve=\""
                << c.id << "\" points=\"";
            for (std::size_t i = 0; i < run.size(); ++i) {
                const Complex p = to_px(run[i]);
                if (i) svg << ' ';
                svg << fmt(p.real()) << ',' << fmt(p.imag());
            }
            svg << "\"/>\n";
        }
    }
    svg << "</svg>\n";

    RenderProduct out;
    out.csv = csv.str();
    out.svg = svg.str();
    out.pole_skips = pole_skips;
    return out;
}

}  // namespace polyharm

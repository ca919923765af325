// SPDX-License-Identifier: Apache-2.0
#include "polyharm/univalence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

constexpr double kJacobianFloor = 1e-12;

// Interior sample set for the degree check: five relative radii, five
// angles each.
std::vector<Complex> interior_samples(double r) {
    static const double rel[] = {0.1, 0.3, 0.5, 0.7, 0.9};
    std::vector<Complex> pts;
    pts.reserve(25);
    for (double q : rel)
        for (int j = 0; j < 5; ++j)
            pts.push_back(std::polar(q * r, 2.0 * std::numbers::pi * j / 5.0));
    return pts;
}

}  // namespace

Verdict Verdict::pass(const GridSpec& g, std::string notes) {
    return Verdict{VerdictStatus::certified_pass, {}, g, std::move(notes)};
}

Verdict Verdict::fail(const GridSpec& g, std::vector<Witness> w,
                      std::string notes) {
    if (w.empty())
        throw Error("Verdict: certified_fail requires at least one witness");
    return Verdict{VerdictStatus::certified_fail, std::move(w), g,
                   std::move(notes)};
}

Verdict Verdict::undecided(const GridSpec& g, std::string notes) {
    return Verdict{VerdictStatus::inconclusive, {}, g, std::move(notes)};
}

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::certified_pass: return "certified_pass";
        case VerdictStatus::certified_fail: return "certified_fail";
        case VerdictStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Verdict is_univalent_harmonic(const HarmonicMap& F, double r,
                              const GridSpec& grid, int curve_samples) {
    grid.validate();
    if (!(r > 0.0) || !(r < 1.0))
        throw DomainError("is_univalent_harmonic: radius must lie in (0, 1)");
    if (curve_samples < 8)
        throw DomainError("is_univalent_harmonic: too few curve samples");

    // Sense-preserving, non-degenerate Jacobian on the grid scaled into D_r.
    for (const Complex& z : grid.points(r)) {
        const double J = jacobian(F, z);
        if (J < kJacobianFloor) {
            const char* why = (std::abs(J) < kJacobianFloor)
                                  ? "jacobian vanishes at grid point"
                                  : "jacobian negative at grid point";
            return Verdict::fail(grid, {Witness{z, J}}, why);
        }
    }

    const auto eval = [&](Complex z) { return eval_harmonic(F, z); };
    Curve boundary = circle_image(eval, r, curve_samples);

    if (auto crossing = curve_self_intersection(boundary)) {
        return Verdict::fail(grid, {Witness{crossing->point, 0.0}},
                             "boundary image self-intersects");
    }

    // Degree check: the boundary image must wind exactly once around each
    // sampled interior image. One automatic 2x resampling on coarse curves.
    bool refined = false;
    for (const Complex& z0 : interior_samples(r)) {
        const Complex w0 = eval_harmonic(F, z0);
        int w = 0;
        for (;;) {
            try {
                w = winding_number(boundary, w0);
                break;
            } catch (const CurveTooCoarseError&) {
                if (refined)
                    return Verdict::undecided(
                        grid, "boundary curve too coarse after one 2x refinement");
                boundary = circle_image(eval, r, 2 * curve_samples);
                refined = true;
            } catch (const PointOnCurveError&) {
                return Verdict::undecided(
                    grid, "interior image within 1e-10 of the boundary image");
            }
        }
        if (w != 1) {
            return Verdict::fail(grid, {Witness{z0, static_cast<double>(w)}},
                                 "winding about an interior image differs from 1");
        }
    }

    if (grid.radial_count < 4 || grid.angular_count < 16)
        return Verdict::undecided(grid,
                                  "grid below the 4x16 minimum for a certified pass");
    return Verdict::pass(grid, "no violation found at this resolution");
}

Verdict lemma1_slice_test(const PolyharmonicMap& f,
                          const std::vector<double>& radii,
                          const GridSpec& grid, int curve_samples) {
    grid.validate();
    if (radii.empty()) throw DomainError("lemma1_slice_test: empty radii list");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0) || !(radii[i] < 1.0))
            throw DomainError("lemma1_slice_test: radii must lie in (0, 1)");
        if (i > 0 && radii[i] <= radii[i - 1])
            throw DomainError("lemma1_slice_test: radii must be strictly increasing");
    }

    // Sense-preserving hypothesis for f itself over the full grid.
    for (const Complex& z : grid.points(1.0)) {
        const double J = jacobian(f, z);
        if (J < kJacobianFloor)
            return Verdict::fail(grid, {Witness{z, J}},
                                 "polyharmonic map is not sense-preserving on the grid");
    }

    bool any_inconclusive = false;
    double first_inconclusive = 0.0;
    std::string inconclusive_notes;
    for (double r : radii) {
        Verdict v = is_univalent_harmonic(slice(f, r), r, grid, curve_samples);
        if (v.failed()) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "slice failed at r = %.6g: ", r);
            return Verdict::fail(grid, v.witnesses, buf + v.notes);
        }
        if (!v.passed() && !any_inconclusive) {
            any_inconclusive = true;
            first_inconclusive = r;
            inconclusive_notes = v.notes;
        }
    }
    if (any_inconclusive) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "inconclusive at r = %.6g: ",
                      first_inconclusive);
        return Verdict::undecided(grid, buf + inconclusive_notes);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "all %zu slice radii certified", radii.size());
    return Verdict::pass(grid, buf);
}

RadoReport rado_consistency_probe(const PolyharmonicMap& f,
                                  const std::vector<double>& radii,
                                  int samples) {
    if (samples < 8) throw DomainError("rado_consistency_probe: too few samples");
    RadoReport report;
    report.radii = radii;
    report.max_modulus.reserve(radii.size());
    bool all_finite = true;
    double peak = 0.0;
    for (double r : radii) {
        if (!(r > 0.0) || !(r < 1.0))
            throw DomainError("rado_consistency_probe: radii must lie in (0, 1)");
        double m = 0.0;
        for (int j = 0; j < samples; ++j) {
            const Complex z =
                std::polar(r, 2.0 * std::numbers::pi * j / samples);
            m = std::max(m, std::abs(eval_polyharmonic(f, z)));
        }
        if (!std::isfinite(m)) all_finite = false;
        peak = std::max(peak, m);
        report.max_modulus.push_back(m);
    }
    report.bounded = all_finite && peak <= 1e6;
    report.notes = report.bounded
                       ? "boundary maxima bounded on all sampled radii; image "
                         "cannot cover the plane if the growth stays bounded"
                       : "boundary maxima grow past 1e6; flagged for manual review";
    return report;
}

}  // namespace polyharm

// SPDX-License-Identifier: Apache-2.0
#include "polyharm/classes.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

constexpr double kNormalizationTol = 1e-12;
constexpr double kDilatationMargin = 1e-9;
constexpr double kFzFloor = 1e-12;
constexpr int kRayFan = 64;

bool ray_hits_segment(Complex origin, Complex dir, Complex a, Complex b) {
    // Solve origin + t dir = a + s (b - a), t > 0, s in [0, 1].
    const Complex e = b - a;
    const double denom = dir.real() * e.imag() - dir.imag() * e.real();
    if (denom == 0.0) return false;  // parallel rays grazing an edge do not block
    const Complex d = a - origin;
    const double t = (d.real() * e.imag() - d.imag() * e.real()) / denom;
    const double s = (d.real() * dir.imag() - d.imag() * dir.real()) / denom;
    return t > 1e-9 && s >= 0.0 && s <= 1.0;
}

// True when at least one of the 64 fan directions leaves the polygon from
// vertex i without meeting a non-adjacent edge again.
bool vertex_ray_accessible(const std::vector<Complex>& poly, std::size_t i,
                           Complex centroid) {
    const std::size_t n = poly.size();
    const Complex v = poly[i];
    const double base = std::arg(v - centroid);  // try outward-ish first
    for (int k = 0; k < kRayFan; ++k) {
        const double ang = base + 2.0 * std::numbers::pi * k / kRayFan;
        const Complex dir = std::polar(1.0, ang);
        bool blocked = false;
        for (std::size_t j = 0; j < n && !blocked; ++j) {
            if (j == i || (j + 1) % n == i) continue;  // edges touching v
            blocked = ray_hits_segment(v, dir, poly[j], poly[(j + 1) % n]);
        }
        if (!blocked) return true;
    }
    return false;
}

}  // namespace

const char* to_string(CtcConclusion c) {
    switch (c) {
        case CtcConclusion::fully_close_to_convex: return "fully_close_to_convex";
        case CtcConclusion::failed: return "failed";
        case CtcConclusion::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

KhReport kh_coefficient_test(const HarmonicMap& F) {
    KhReport report;
    const auto& a = F.h.coeffs;
    const auto& b = F.g.coeffs;
    report.normalized =
        std::abs(a[0]) <= kNormalizationTol &&
        (a.size() > 1 && std::abs(a[1] - Complex{1.0, 0.0}) <= kNormalizationTol);
    double sum = 0.0;
    for (std::size_t n = 2; n < a.size(); ++n)
        sum += static_cast<double>(n) * static_cast<double>(n) * std::abs(a[n]);
    for (std::size_t n = 1; n < b.size(); ++n)
        sum += static_cast<double>(n) * static_cast<double>(n) * std::abs(b[n]);
    report.sum_value = sum;
    report.passes = report.normalized && sum < 1.0;
    return report;
}

PolyharmonicMap build_ctc_biharmonic(const HarmonicMap& F) {
    HarmonicMap first{F.h, AnalyticSeries{}};
    HarmonicMap second{AnalyticSeries{}, F.g};
    return PolyharmonicMap{std::vector<HarmonicMap>{std::move(first),
                                                    std::move(second)}};
}

CtcCertificate certify_ctc(const HarmonicMap& F, const GridSpec& grid,
                           const std::vector<double>& radii,
                           int curve_samples) {
    CtcCertificate cert;
    cert.kh = kh_coefficient_test(F);

    const PolyharmonicMap f = build_ctc_biharmonic(F);

    // Condition (ii): f_z nonzero and sup |a_f| strictly below 1 on the grid.
    double sup = 0.0;
    std::vector<Witness> bad;
    std::string why;
    for (const Complex& z : grid.points(1.0)) {
        const auto d = wirtinger(f, z);
        const double fz = std::abs(d.df_dz);
        if (fz <= kFzFloor) {
            bad.push_back(Witness{z, fz});
            why = "f_z vanishes on the grid";
            break;
        }
        const double a = std::abs(d.df_dzbar) / fz;
        sup = std::max(sup, a);
        if (a >= 1.0 - kDilatationMargin) {
            bad.push_back(Witness{z, a});
            why = "|a_f| reaches 1 on the grid";
            break;
        }
    }
    cert.sup_dilatation = sup;
    cert.local_univalence =
        bad.empty()
            ? Verdict::pass(grid, "sup |a_f| < 1 and f_z nonzero on the grid")
            : Verdict::fail(grid, std::move(bad), why);

    cert.slice = cert.local_univalence.failed()
                     ? Verdict::undecided(grid, "skipped: local univalence failed")
                     : lemma1_slice_test(f, radii, grid, curve_samples);

    if (cert.kh.passes && cert.local_univalence.passed() && cert.slice.passed())
        cert.conclusion = CtcConclusion::fully_close_to_convex;
    else if (cert.local_univalence.failed() || cert.slice.failed())
        cert.conclusion = CtcConclusion::failed;
    else
        cert.conclusion = CtcConclusion::inconclusive;
    return cert;
}

std::vector<Complex> default_eps_samples() {
    std::vector<Complex> eps;
    eps.reserve(17);
    eps.push_back(Complex{0.0, 0.0});
    for (int k = 0; k < 16; ++k)
        eps.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / 16.0));
    return eps;
}

Verdict epsilon_family_probe(const AnalyticSeries& H, const AnalyticSeries& G,
                             const std::vector<Complex>& eps_samples, double r,
                             const GridSpec& grid) {
    grid.validate();
    if (!(r > 0.0) || !(r < 1.0))
        throw DomainError("epsilon_family_probe: radius must lie in (0, 1)");
    for (const Complex& eps : eps_samples)
        if (std::abs(eps) > 1.0 + 1e-12)
            throw DomainError("epsilon_family_probe: |eps| must be <= 1");

    bool any_inconclusive = false;
    std::string notes;
    for (const Complex& eps : eps_samples) {
        std::vector<Complex> combo(std::max(H.coeffs.size(), G.coeffs.size()),
                                   Complex{0.0, 0.0});
        for (std::size_t n = 0; n < H.coeffs.size(); ++n) combo[n] += H.coeffs[n];
        for (std::size_t n = 0; n < G.coeffs.size(); ++n)
            combo[n] += eps * G.coeffs[n];
        const HarmonicMap m{AnalyticSeries(combo), AnalyticSeries{}};

        Verdict v = is_univalent_harmonic(m, r, grid);
        if (v.failed()) {
            v.notes = "analytic combination not univalent: " + v.notes;
            return v;
        }
        if (!v.passed()) {
            any_inconclusive = true;
            notes = v.notes;
            continue;
        }

        // Ray-accessibility surrogate on the boundary image polygon.
        const int poly_samples = std::max(grid.angular_count, 64);
        Curve boundary = circle_image(
            [&](Complex z) { return eval_harmonic(m, z); }, r, poly_samples);
        Complex centroid{0.0, 0.0};
        for (const Complex& p : boundary.points) centroid += p;
        centroid /= static_cast<double>(boundary.size());
        for (std::size_t i = 0; i < boundary.size(); ++i) {
            if (!vertex_ray_accessible(boundary.points, i, centroid)) {
                return Verdict::fail(
                    grid, {Witness{boundary.points[i], std::abs(eps)}},
                    "no escaping ray from a boundary-image vertex");
            }
        }
    }
    if (any_inconclusive) return Verdict::undecided(grid, notes);
    char buf[96];
    std::snprintf(buf, sizeof buf,
                  "all %zu eps samples univalent with ray-accessible boundaries",
                  eps_samples.size());
    return Verdict::pass(grid, buf);
}

}  // namespace polyharm

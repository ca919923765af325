// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "polyharm/series.hpp"
#include "polyharm/univalence.hpp"
#include "polyharm/verdict.hpp"

namespace polyharm {

/// Coefficient test for convexity of a normalized harmonic map:
/// sum_{n>=2} n^2 |a_n| + sum_{n>=1} n^2 |b_n| < 1 is sufficient for
/// membership in K_H. Normalization means a_0 = 0 and a_1 = 1.
struct KhReport {
    double sum_value = 0.0;
    bool normalized = false;
    bool passes = false;
};

KhReport kh_coefficient_test(const HarmonicMap& F);

/// The biharmonic lift f(z) = H(z) + |z|^2 conj(G(z)) of F = H + conj(G):
/// component 1 carries H, component 2 carries G as its co-analytic part.
/// Pure coefficient transfer, no arithmetic.
PolyharmonicMap build_ctc_biharmonic(const HarmonicMap& F);

enum class CtcConclusion { fully_close_to_convex, failed, inconclusive };

const char* to_string(CtcConclusion c);

/// Certificate for the close-to-convex construction. The conclusion is
/// fully_close_to_convex only when the coefficient test passes and both
/// verdicts are certified passes; a failed hypothesis that is merely
/// unverified (kh) yields inconclusive, a witnessed violation yields failed.
struct CtcCertificate {
    KhReport kh;
    Verdict local_univalence;
    Verdict slice;
    double sup_dilatation = 0.0;
    CtcConclusion conclusion = CtcConclusion::inconclusive;
};

/// Full pipeline: coefficient test, biharmonic lift, local-univalence check
/// (sup |a_f| < 1 - 1e-9 and |f_z| > 1e-12 over the grid), slice test.
CtcCertificate certify_ctc(const HarmonicMap& F, const GridSpec& grid,
                           const std::vector<double>& radii,
                           int curve_samples = 1024);

/// Univalence and ray-accessibility probe of the analytic family H + eps*G
/// over sampled |eps| <= 1 on D_r. The accessibility check requires every
/// boundary-image vertex to emit at least one ray, from a 64-direction fan,
/// that leaves the image polygon without re-entering it; this is a numerical
/// surrogate for close-to-convexity and is advisory only.
Verdict epsilon_family_probe(const AnalyticSeries& H, const AnalyticSeries& G,
                             const std::vector<Complex>& eps_samples, double r,
                             const GridSpec& grid);

/// 16 unimodular samples plus eps = 0.
std::vector<Complex> default_eps_samples();

}  // namespace polyharm

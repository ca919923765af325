// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "polyharm/curve.hpp"
#include "polyharm/series.hpp"
#include "polyharm/verdict.hpp"

namespace polyharm {

/// Numerical univalence test for a harmonic map on the sub-disk D_r,
/// 0 < r < 1.
///
/// certified_fail when the Jacobian drops below 1e-12 (vanishing or
/// sense-reversing) at a grid point scaled into D_r, when the image of
/// |z| = r self-intersects, or when the winding of the boundary image about
/// the image of a sampled interior point differs from 1. certified_pass when
/// none of these occur at the given resolution; a pass from a grid below
/// 4 x 16 samples is downgraded to inconclusive. Coarse-curve and
/// near-curve conditions from the winding count propagate as inconclusive.
Verdict is_univalent_harmonic(const HarmonicMap& F, double r,
                              const GridSpec& grid, int curve_samples = 1024);

/// Slice criterion for polyharmonic univalence: f is one-to-one iff every
/// associated harmonic map g_r is univalent in D_r. Runs
/// is_univalent_harmonic(slice(f, r), r, grid) for each radius and also
/// checks that f itself is sense-preserving on the grid. The first failing
/// radius is aggregated into the witness list.
Verdict lemma1_slice_test(const PolyharmonicMap& f,
                          const std::vector<double>& radii,
                          const GridSpec& grid, int curve_samples = 1024);

/// Growth report for the boundary maximum M(r) = max_{|z|=r} |f(z)|.
///
/// A certified-univalent map whose M(r) stays bounded as r -> 1 cannot cover
/// the whole plane; unbounded growth is flagged for manual review. This is a
/// consistency probe, not a decision procedure, and assumes the caller has
/// already certified f via lemma1_slice_test.
struct RadoReport {
    std::vector<double> radii;
    std::vector<double> max_modulus;
    bool bounded = false;
    std::string notes;
};

RadoReport rado_consistency_probe(const PolyharmonicMap& f,
                                  const std::vector<double>& radii,
                                  int samples = 1024);

}  // namespace polyharm

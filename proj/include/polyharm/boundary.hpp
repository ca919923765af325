// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "polyharm/curve.hpp"
#include "polyharm/series.hpp"
#include "polyharm/verdict.hpp"

namespace polyharm {

// Decision thresholds for the boundary criteria. Calibrated so that the
// geometric-derivative fixture and polynomial fixtures land three orders of
// magnitude apart.
inline constexpr double kJumpThreshold = 1e-3;
inline constexpr double kContinuityThreshold = 1e-6;
inline constexpr double kJumpBandRelativeWidth = 0.10;
inline constexpr double kSmallOThreshold = 1e-3;
inline constexpr double kCauchyThreshold = 1e-4;

/// Radial estimate of the boundary function f*(e^{it}).
///
/// The unrestricted limit is approximated by evaluation along the radius;
/// cauchy_diagnostic is the largest successive difference over the last five
/// radii and records how trustworthy that weakening is.
struct RadialLimit {
    Complex value{0.0, 0.0};
    double cauchy_diagnostic = 0.0;
    std::vector<Complex> trace;
};

/// Requires radii strictly increasing with last >= 0.999.
RadialLimit boundary_function_radial(const PolyharmonicMap& f, double t,
                                     const std::vector<double>& radii);

enum class JumpVerdict { jump, continuous, inconclusive };

const char* to_string(JumpVerdict v);

/// Jump criterion data along a radius: values[i] = (1 - r_i) |H1' + H2'| at
/// r_i e^{i theta0}. Verdict is `jump` when the last five values sit in a
/// band of relative width 10% around a mean above kJumpThreshold,
/// `continuous` when they are all below kContinuityThreshold and
/// non-increasing, else `inconclusive`. c_estimate is the mean of the tail.
struct JumpReport {
    double theta0 = 0.0;
    double c_estimate = 0.0;
    std::vector<double> r_sequence;
    std::vector<double> values;
    JumpVerdict verdict = JumpVerdict::inconclusive;
};

JumpReport jump_indicator(const AnalyticSeries& H1, const AnalyticSeries& H2,
                          double theta0, const std::vector<double>& radii);

/// Advisory probe of the hypothesis F2(z) = o(1/(1-z)): tracks
/// |1 - r e^{i theta0}| * |F2(r e^{i theta0})| and reports whether the tail
/// is non-increasing and ends below kSmallOThreshold.
struct SmallOReport {
    bool holds = false;
    std::vector<double> trace;
};

SmallOReport small_o_probe(const HarmonicMap& F2, double theta0,
                           const std::vector<double>& radii);

/// In-disk curve (1 - m|theta - theta0|) e^{i theta} approaching the
/// boundary point e^{i theta0} from both sides, with
/// 0 < |theta - theta0| <= T = min{pi, 1/m}.
struct GammaCurve {
    double m = 0.0;
    double theta0 = 0.0;
    Curve samples;  // open; ordered by theta, theta0 itself excluded
};

/// 2n samples, n per side, theta-uniform over each side of theta0.
/// Requires m > 0 and n >= 16.
GammaCurve gamma_curve(double m, double theta0, int n);

/// phi(z) = (G1'(z) + G2'(z)) / (H1'(z) + H2'(z)).
/// Throws DegeneratePointError when the denominator modulus is <= 1e-14.
Complex phi_quotient(const HarmonicMap& F1, const HarmonicMap& F2, Complex z);

enum class IntegralVerdict { divergent, convergent, inconclusive };

const char* to_string(IntegralVerdict v);

/// Partial curve integrals of (1 - |phi|^2)/(1 - |z|^2) over Gamma with the
/// near-corner piece |theta - theta0| < delta removed, one per cutoff.
///
/// divergent: the last three partials fit alpha * log(1/delta) + beta with
/// alpha > 0 and relative residual below 20% (or grow faster than that).
/// convergent: successive partials are Cauchy below kCauchyThreshold.
/// Samples with |phi| > 1 violate the criterion's hypothesis and are
/// flagged, never silently used.
struct DivergenceReport {
    std::vector<double> cutoffs;
    std::vector<double> partial_integrals;
    double slope = 0.0;
    double residual = 0.0;
    IntegralVerdict verdict = IntegralVerdict::inconclusive;
    bool phi_exceeds_one = false;
    std::vector<Witness> flags;
};

/// Requires gamma.m < 1/pi (the criterion's stated range) and cutoffs
/// strictly decreasing toward 0.
DivergenceReport continuity_integral(const HarmonicMap& F1,
                                     const HarmonicMap& F2,
                                     const GammaCurve& gamma,
                                     const std::vector<double>& cutoffs);

/// Same quadrature with an externally supplied phi; evaluation seam for
/// contrived integrand shapes.
DivergenceReport continuity_integral(
    const std::function<Complex(Complex)>& phi, const GammaCurve& gamma,
    const std::vector<double>& cutoffs);

}  // namespace polyharm

// SPDX-License-Identifier: Apache-2.0
#include "polyharm/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <numbers>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

constexpr double kPhiDenominatorFloor = 1e-14;

void check_increasing(const std::vector<double>& radii, const char* who) {
    if (radii.empty()) throw DomainError(std::string(who) + ": empty radii list");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0.0) || !(radii[i] < 1.0))
            throw DomainError(std::string(who) + ": radii must lie in (0, 1)");
        if (i > 0 && radii[i] <= radii[i - 1])
            throw DomainError(std::string(who) + ": radii must be strictly increasing");
    }
}

std::size_t tail_start(std::size_t n) { return n > 5 ? n - 5 : 0; }

}  // namespace

const char* to_string(JumpVerdict v) {
    switch (v) {
        case JumpVerdict::jump: return "jump";
        case JumpVerdict::continuous: return "continuous";
        case JumpVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

const char* to_string(IntegralVerdict v) {
    switch (v) {
        case IntegralVerdict::divergent: return "divergent";
        case IntegralVerdict::convergent: return "convergent";
        case IntegralVerdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

RadialLimit boundary_function_radial(const PolyharmonicMap& f, double t,
                                     const std::vector<double>& radii) {
    check_increasing(radii, "boundary_function_radial");
    if (radii.back() < 0.999)
        throw DomainError("boundary_function_radial: last radius must be >= 0.999");
    RadialLimit out;
    out.trace.reserve(radii.size());
    for (double r : radii)
        out.trace.push_back(eval_polyharmonic(f, std::polar(r, t)));
    out.value = out.trace.back();
    double diag = 0.0;
    for (std::size_t i = tail_start(out.trace.size()); i + 1 < out.trace.size(); ++i)
        diag = std::max(diag, std::abs(out.trace[i + 1] - out.trace[i]));
    out.cauchy_diagnostic = diag;
    return out;
}

JumpReport jump_indicator(const AnalyticSeries& H1, const AnalyticSeries& H2,
                          double theta0, const std::vector<double>& radii) {
    check_increasing(radii, "jump_indicator");
    JumpReport report;
    report.theta0 = theta0;
    report.r_sequence = radii;
    report.values.reserve(radii.size());
    for (double r : radii) {
        const Complex z = std::polar(r, theta0);
        const double v = (1.0 - r) * std::abs(eval_analytic_derivative(H1, z) +
                                              eval_analytic_derivative(H2, z));
        report.values.push_back(v);
    }

    const std::size_t n = report.values.size();
    if (n < 5) {
        report.verdict = JumpVerdict::inconclusive;
        report.c_estimate =
            std::accumulate(report.values.begin(), report.values.end(), 0.0) / n;
        return report;
    }
    const std::size_t start = tail_start(n);
    double mean = 0.0;
    for (std::size_t i = start; i < n; ++i) mean += report.values[i];
    mean /= static_cast<double>(n - start);
    report.c_estimate = mean;

    bool in_band = mean > kJumpThreshold;
    for (std::size_t i = start; in_band && i < n; ++i)
        in_band = std::abs(report.values[i] - mean) <=
                  0.5 * kJumpBandRelativeWidth * mean;
    if (in_band) {
        report.verdict = JumpVerdict::jump;
        return report;
    }

    bool small_and_decaying = true;
    for (std::size_t i = start; i < n; ++i) {
        if (report.values[i] >= kContinuityThreshold) small_and_decaying = false;
        if (i > start && report.values[i] > report.values[i - 1])
            small_and_decaying = false;
    }
    report.verdict =
        small_and_decaying ? JumpVerdict::continuous : JumpVerdict::inconclusive;
    return report;
}

SmallOReport small_o_probe(const HarmonicMap& F2, double theta0,
                           const std::vector<double>& radii) {
    check_increasing(radii, "small_o_probe");
    SmallOReport report;
    report.trace.reserve(radii.size());
    for (double r : radii) {
        const Complex z = std::polar(r, theta0);
        report.trace.push_back(std::abs(1.0 - z) * std::abs(eval_harmonic(F2, z)));
    }
    const std::size_t n = report.trace.size();
    const std::size_t start = tail_start(n);
    bool ok = report.trace.back() < kSmallOThreshold;
    for (std::size_t i = start + 1; ok && i < n; ++i)
        ok = report.trace[i] <= report.trace[i - 1];
    report.holds = ok;
    return report;
}

GammaCurve gamma_curve(double m, double theta0, int n) {
    if (!(m > 0.0)) throw DomainError("gamma_curve: slope m must be positive");
    if (n < 16) throw DomainError("gamma_curve: need at least 16 samples per side");
    const double T = std::min(std::numbers::pi, 1.0 / m);
    std::vector<double> t;
    std::vector<Complex> pts;
    t.reserve(2 * static_cast<std::size_t>(n));
    pts.reserve(2 * static_cast<std::size_t>(n));
    for (int j = n; j >= 1; --j) {
        const double theta = theta0 - T * j / n;
        t.push_back(theta);
        pts.push_back(std::polar(1.0 - m * (T * j / n), theta));
    }
    for (int j = 1; j <= n; ++j) {
        const double theta = theta0 + T * j / n;
        t.push_back(theta);
        pts.push_back(std::polar(1.0 - m * (T * j / n), theta));
    }
    return GammaCurve{m, theta0, Curve::open_path(std::move(t), std::move(pts))};
}

Complex phi_quotient(const HarmonicMap& F1, const HarmonicMap& F2, Complex z) {
    const Complex denom = eval_analytic_derivative(F1.h, z) +
                          eval_analytic_derivative(F2.h, z);
    if (std::abs(denom) <= kPhiDenominatorFloor)
        throw DegeneratePointError("phi_quotient: H1' + H2' vanishes at the sample");
    return (eval_analytic_derivative(F1.g, z) +
            eval_analytic_derivative(F2.g, z)) /
           denom;
}

DivergenceReport continuity_integral(
    const std::function<Complex(Complex)>& phi, const GammaCurve& gamma,
    const std::vector<double>& cutoffs) {
    if (!(gamma.m > 0.0) || !(gamma.m < 1.0 / std::numbers::pi))
        throw DomainError("continuity_integral: criterion requires 0 < m < 1/pi");
    if (cutoffs.empty())
        throw DomainError("continuity_integral: empty cutoff list");
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        if (!(cutoffs[i] > 0.0))
            throw DomainError("continuity_integral: cutoffs must be positive");
        if (i > 0 && cutoffs[i] >= cutoffs[i - 1])
            throw DomainError("continuity_integral: cutoffs must decrease");
    }

    const Curve& c = gamma.samples;
    const std::size_t n = c.size();
    std::vector<double> u(n), w(n);
    DivergenceReport report;
    report.cutoffs = cutoffs;
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = std::abs(c.params[i] - gamma.theta0);
        const Complex ph = phi(c.points[i]);
        const double mod2 = std::norm(ph);
        if (mod2 > 1.0) {
            report.phi_exceeds_one = true;
            if (report.flags.size() < 8)
                report.flags.push_back(Witness{c.points[i], std::sqrt(mod2)});
        }
        w[i] = (1.0 - mod2) / (1.0 - std::norm(c.points[i]));
    }

    // The two arms of Gamma meet only in the limit; never integrate across
    // the gap at theta0.
    const auto arm_split = std::lower_bound(c.params.begin(), c.params.end(),
                                            gamma.theta0) -
                           c.params.begin();
    report.partial_integrals.reserve(cutoffs.size());
    for (double delta : cutoffs) {
        double total = 0.0;
        const auto add_arm = [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i + 1 < hi; ++i) {
                if (u[i] < delta || u[i + 1] < delta) continue;
                total += 0.5 * (w[i] + w[i + 1]) *
                         std::abs(c.points[i + 1] - c.points[i]);
            }
        };
        add_arm(0, static_cast<std::size_t>(arm_split));
        add_arm(static_cast<std::size_t>(arm_split), n);
        report.partial_integrals.push_back(total);
    }

    const std::vector<double>& I = report.partial_integrals;
    const std::size_t k = I.size();

    bool cauchy = k >= 2;
    for (std::size_t i = 0; i + 1 < k && cauchy; ++i)
        cauchy = std::abs(I[i + 1] - I[i]) < kCauchyThreshold;
    if (cauchy) {
        report.verdict = IntegralVerdict::convergent;
        return report;
    }

    if (k >= 3) {
        // Least-squares fit of the last three partials against log(1/delta).
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const std::size_t lo = k - 3;
        for (std::size_t i = lo; i < k; ++i) {
            const double x = std::log(1.0 / cutoffs[i]);
            sx += x; sy += I[i]; sxx += x * x; sxy += x * I[i];
        }
        const double denom = 3.0 * sxx - sx * sx;
        const double alpha = (3.0 * sxy - sx * sy) / denom;
        const double beta = (sy - alpha * sx) / 3.0;
        report.slope = alpha;
        double max_dev = 0.0, span = 0.0;
        double fit_min = std::numeric_limits<double>::infinity();
        double fit_max = -fit_min;
        for (std::size_t i = lo; i < k; ++i) {
            const double x = std::log(1.0 / cutoffs[i]);
            const double fit = alpha * x + beta;
            max_dev = std::max(max_dev, std::abs(I[i] - fit));
            fit_min = std::min(fit_min, fit);
            fit_max = std::max(fit_max, fit);
        }
        span = std::max(fit_max - fit_min, 1e-300);
        report.residual = max_dev / span;
        const bool accelerating =
            I[k - 1] - I[k - 2] > I[k - 2] - I[k - 3];
        if (alpha > 0.0 && (report.residual < 0.20 || accelerating)) {
            report.verdict = IntegralVerdict::divergent;
            return report;
        }
    }
    report.verdict = IntegralVerdict::inconclusive;
    return report;
}

DivergenceReport continuity_integral(const HarmonicMap& F1,
                                     const HarmonicMap& F2,
                                     const GammaCurve& gamma,
                                     const std::vector<double>& cutoffs) {
    return continuity_integral(
        [&](Complex z) { return phi_quotient(F1, F2, z); }, gamma, cutoffs);
}

}  // namespace polyharm

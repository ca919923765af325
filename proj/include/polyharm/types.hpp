// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "polyharm/errors.hpp"

namespace polyharm {

using Complex = std::complex<double>;

/// Truncated complex power series c_0 + c_1 z + ... + c_N z^N.
///
/// Coefficients are stored densely; trailing zeros are permitted and do not
/// affect evaluation. All evaluation happens on the closed unit disk.
struct AnalyticSeries {
    std::vector<Complex> coeffs;

    AnalyticSeries() : coeffs{Complex{0.0, 0.0}} {}
    explicit AnalyticSeries(std::vector<Complex> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) coeffs.push_back(Complex{0.0, 0.0});
    }

    std::size_t degree() const { return coeffs.size() - 1; }

    /// Coefficient-wise derivative: sum n c_n z^{n-1}.
    AnalyticSeries derivative() const;

    bool is_zero() const;
};

/// Harmonic map F(z) = h(z) + conj(g(z)) on the unit disk.
struct HarmonicMap {
    AnalyticSeries h;
    AnalyticSeries g;
};

/// Polyharmonic map f(z) = sum_{k=1..p} |z|^{2(k-1)} F_k(z) with harmonic
/// components F_k. p = 1 is the harmonic case, p = 2 the biharmonic one.
struct PolyharmonicMap {
    std::vector<HarmonicMap> components;

    explicit PolyharmonicMap(std::vector<HarmonicMap> comps)
        : components(std::move(comps)) {
        if (components.empty())
            throw DomainError("PolyharmonicMap: at least one component required");
    }
    explicit PolyharmonicMap(HarmonicMap single)
        : components{std::move(single)} {}

    int order() const { return static_cast<int>(components.size()); }
};

/// Polar sample grid {r_i e^{i theta_j}} with r_i uniform in
/// (0, max_radius] and theta_j uniform in [0, 2pi).
struct GridSpec {
    int radial_count = 64;
    int angular_count = 256;
    double max_radius = 0.995;

    void validate() const;

    /// Sample points, optionally scaled into the sub-disk of radius `scale`.
    std::vector<Complex> points(double scale = 1.0) const;
};

}  // namespace polyharm

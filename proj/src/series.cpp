// SPDX-License-Identifier: Apache-2.0
#include "polyharm/series.hpp"

#include <cmath>
#include <numbers>

#include "polyharm/errors.hpp"

namespace polyharm {

namespace {

constexpr double kDomainSlack = 1e-12;
constexpr double kDilatationFloor = 1e-14;

void check_disk(Complex z, const char* who) {
    if (std::abs(z) > 1.0 + kDomainSlack)
        throw DomainError(std::string(who) + ": |z| exceeds the unit disk");
}

Complex ipow(Complex z, int n) {
    Complex r{1.0, 0.0};
    for (int i = 0; i < n; ++i) r *= z;
    return r;
}

double pow_int(double x, int n) {
    double r = 1.0;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

AnalyticSeries AnalyticSeries::derivative() const {
    if (coeffs.size() <= 1) return AnalyticSeries{};
    std::vector<Complex> d(coeffs.size() - 1);
    for (std::size_t n = 1; n < coeffs.size(); ++n)
        d[n - 1] = static_cast<double>(n) * coeffs[n];
    return AnalyticSeries(std::move(d));
}

bool AnalyticSeries::is_zero() const {
    for (const Complex& c : coeffs)
        if (c != Complex{0.0, 0.0}) return false;
    return true;
}

void GridSpec::validate() const {
    if (radial_count < 1 || angular_count < 1)
        throw DomainError("GridSpec: sample counts must be positive");
    if (!(max_radius > 0.0) || !(max_radius < 1.0))
        throw DomainError("GridSpec: max_radius must lie in (0, 1)");
}

std::vector<Complex> GridSpec::points(double scale) const {
    validate();
    std::vector<Complex> pts;
    pts.reserve(static_cast<std::size_t>(radial_count) * angular_count);
    const double rmax = max_radius * scale;
    for (int i = 1; i <= radial_count; ++i) {
        const double r = rmax * i / radial_count;
        for (int j = 0; j < angular_count; ++j) {
            const double theta = 2.0 * std::numbers::pi * j / angular_count;
            pts.push_back(std::polar(r, theta));
        }
    }
    return pts;
}

Complex eval_analytic(const AnalyticSeries& s, Complex z) {
    check_disk(z, "eval_analytic");
    Complex acc{0.0, 0.0};
    for (std::size_t i = s.coeffs.size(); i-- > 0;) acc = acc * z + s.coeffs[i];
    return acc;
}

Complex eval_analytic_derivative(const AnalyticSeries& s, Complex z) {
    check_disk(z, "eval_analytic_derivative");
    Complex acc{0.0, 0.0};
    for (std::size_t i = s.coeffs.size(); i-- > 1;)
        acc = acc * z + static_cast<double>(i) * s.coeffs[i];
    return acc;
}

Complex eval_harmonic(const HarmonicMap& F, Complex z) {
    return eval_analytic(F.h, z) + std::conj(eval_analytic(F.g, z));
}

Complex eval_polyharmonic(const PolyharmonicMap& f, Complex z) {
    check_disk(z, "eval_polyharmonic");
    const double rr = std::norm(z);
    Complex acc{0.0, 0.0};
    double weight = 1.0;
    for (std::size_t k = 0; k < f.components.size(); ++k) {
        if (k > 0) weight *= rr;
        acc += weight * eval_harmonic(f.components[k], z);
    }
    return acc;
}

HarmonicMap slice(const PolyharmonicMap& f, double r) {
    if (!(r > 0.0) || r > 1.0)
        throw DomainError("slice: radius must lie in (0, 1]");
    std::size_t hn = 1, gn = 1;
    for (const HarmonicMap& c : f.components) {
        hn = std::max(hn, c.h.coeffs.size());
        gn = std::max(gn, c.g.coeffs.size());
    }
    std::vector<Complex> h(hn, Complex{0.0, 0.0});
    std::vector<Complex> g(gn, Complex{0.0, 0.0});
    const double rr = r * r;
    double weight = 1.0;
    for (std::size_t k = 0; k < f.components.size(); ++k) {
        if (k > 0) weight *= rr;
        const HarmonicMap& c = f.components[k];
        for (std::size_t n = 0; n < c.h.coeffs.size(); ++n)
            h[n] += weight * c.h.coeffs[n];
        for (std::size_t n = 0; n < c.g.coeffs.size(); ++n)
            g[n] += weight * c.g.coeffs[n];
    }
    return HarmonicMap{AnalyticSeries(std::move(h)), AnalyticSeries(std::move(g))};
}

WirtingerDerivatives wirtinger(const PolyharmonicMap& f, Complex z) {
    check_disk(z, "wirtinger");
    const Complex zb = std::conj(z);
    const double rr = std::norm(z);
    Complex fz{0.0, 0.0}, fzb{0.0, 0.0};
    for (std::size_t k = 1; k <= f.components.size(); ++k) {
        const HarmonicMap& Fk = f.components[k - 1];
        const double w = pow_int(rr, static_cast<int>(k) - 1);
        fz += w * eval_analytic_derivative(Fk.h, z);
        fzb += w * std::conj(eval_analytic_derivative(Fk.g, z));
        if (k >= 2) {
            const Complex Fk_val = eval_harmonic(Fk, z);
            const double km1 = static_cast<double>(k - 1);
            fz += km1 * ipow(z, static_cast<int>(k) - 2) *
                  ipow(zb, static_cast<int>(k) - 1) * Fk_val;
            fzb += km1 * ipow(z, static_cast<int>(k) - 1) *
                   ipow(zb, static_cast<int>(k) - 2) * Fk_val;
        }
    }
    return {fz, fzb};
}

double jacobian(const PolyharmonicMap& f, Complex z) {
    const auto d = wirtinger(f, z);
    return std::norm(d.df_dz) - std::norm(d.df_dzbar);
}

double jacobian(const HarmonicMap& F, Complex z) {
    return std::norm(eval_analytic_derivative(F.h, z)) -
           std::norm(eval_analytic_derivative(F.g, z));
}

Complex dilatation(const PolyharmonicMap& f, Complex z) {
    const auto d = wirtinger(f, z);
    if (std::abs(d.df_dz) < kDilatationFloor)
        throw DegeneratePointError("dilatation: f_z vanishes at the sample point");
    return d.df_dzbar / d.df_dz;
}

Complex laplacian_power_probe(const PolyharmonicMap& f, int q, Complex z,
                              double step) {
    if (q < 1) throw DomainError("laplacian_power_probe: q must be positive");
    if (step < 1e-3 || step > 1e-1)
        throw DomainError("laplacian_power_probe: step outside [1e-3, 1e-1]");
    if (std::abs(z) + q * step >= 1.0)
        throw StencilError("laplacian_power_probe: stencil leaves the unit disk");
    const double s2 = step * step;
    const auto stencil = [&](auto&& self, int level, Complex at) -> Complex {
        if (level == 0) return eval_polyharmonic(f, at);
        const Complex dx{step, 0.0}, dy{0.0, step};
        return (self(self, level - 1, at + dx) + self(self, level - 1, at - dx) +
                self(self, level - 1, at + dy) + self(self, level - 1, at - dy) -
                4.0 * self(self, level - 1, at)) /
               s2;
    };
    return stencil(stencil, q, z);
}

AnalyticSeries truncated_log(int degree) {
    if (degree < 1) throw DomainError("truncated_log: degree must be >= 1");
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, Complex{0.0, 0.0});
    for (int n = 1; n <= degree; ++n) c[n] = Complex{1.0 / n, 0.0};
    return AnalyticSeries(std::move(c));
}

AnalyticSeries truncated_geometric(int degree) {
    if (degree < 0) throw DomainError("truncated_geometric: degree must be >= 0");
    std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, Complex{1.0, 0.0});
    return AnalyticSeries(std::move(c));
}

}  // namespace polyharm

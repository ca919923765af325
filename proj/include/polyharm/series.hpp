// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "polyharm/types.hpp"

namespace polyharm {

/// Horner evaluation of a truncated series at |z| <= 1.
/// Throws DomainError for |z| > 1 + 1e-12.
Complex eval_analytic(const AnalyticSeries& s, Complex z);

/// Derivative value sum n c_n z^{n-1}, evaluated without building the
/// derivative series.
Complex eval_analytic_derivative(const AnalyticSeries& s, Complex z);

/// F(z) = h(z) + conj(g(z)).
Complex eval_harmonic(const HarmonicMap& F, Complex z);

/// f(z) = sum_k |z|^{2(k-1)} F_k(z).
Complex eval_polyharmonic(const PolyharmonicMap& f, Complex z);

/// Associated harmonic map g_r(z) = sum_k r^{2(k-1)} F_k(z), formed by
/// coefficient-wise weighted sums. g_r coincides with f on |z| = r.
/// Requires 0 < r <= 1.
HarmonicMap slice(const PolyharmonicMap& f, double r);

struct WirtingerDerivatives {
    Complex df_dz;
    Complex df_dzbar;
};

/// Closed-form Wirtinger derivatives of f = sum_k (z zbar)^{k-1} F_k(z):
///   f_z    = sum_k [(k-1) z^{k-2} zbar^{k-1} F_k + (z zbar)^{k-1} h_k']
///   f_zbar = sum_k [(k-1) z^{k-1} zbar^{k-2} F_k + (z zbar)^{k-1} conj(g_k')]
/// The k >= 2 radial terms are evaluated with nonnegative integer powers, so
/// z = 0 needs no special casing.
WirtingerDerivatives wirtinger(const PolyharmonicMap& f, Complex z);

/// Jacobian |f_z|^2 - |f_zbar|^2. For a harmonic map this reduces exactly to
/// |h'|^2 - |g'|^2.
double jacobian(const PolyharmonicMap& f, Complex z);
double jacobian(const HarmonicMap& F, Complex z);

/// Dilatation f_zbar / f_z. Throws DegeneratePointError when |f_z| < 1e-14.
Complex dilatation(const PolyharmonicMap& f, Complex z);

/// Finite-difference estimate of the q-fold Laplacian at z, using the
/// 5-point stencil applied q times. Purely a numerical oracle: a map of
/// order p must be annihilated by q = p up to stencil error.
/// Requires step in [1e-3, 1e-1] and |z| + q*step < 1.
Complex laplacian_power_probe(const PolyharmonicMap& f, int q, Complex z,
                              double step);

/// Degree-N partial sum of -log(1-z): sum_{n=1..N} z^n / n. The standard
/// log-type fixture; its derivative is the geometric partial sum
/// (1 - z^N)/(1 - z).
AnalyticSeries truncated_log(int degree);

/// Degree-N partial sum of 1/(1-z): all coefficients 1.
AnalyticSeries truncated_geometric(int degree);

}  // namespace polyharm

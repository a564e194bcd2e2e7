// quadrature.hpp — Oscillatory (Filon-type) and adaptive quadrature kernels
//
// Two families of tools used by the transform and line-shape layers:
//
//  * Filon quadrature of a piecewise-linear interpolant against cos(kx),
//    sin(kx) or exp(ikx). The trigonometric moments of each linear segment
//    are evaluated in closed form (with a series switchover at small phase),
//    so the oscillation never limits the panel width — only the sampling of
//    the amplitude does.
//
//  * An adaptive Gauss-Kronrod 15(7) integrator with user seed breakpoints,
//    plus helpers for the integrable power-law endpoint ω^{s-1} at ω → 0 and
//    for the oscillatory algebraic tail integral ∫_x^∞ u^{-s} cos u du.

#pragma once

#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "sdx/errors.hpp"

namespace sdx::quadrature {

using Eigen::ArrayXcd;
using Eigen::ArrayXd;
using Complex = std::complex<double>;

// Normalized moments over one panel, theta = k*h:
//   c0 = ∫₀¹ cos(θy) dy    s0 = ∫₀¹ sin(θy) dy
//   c1 = ∫₀¹ y cos(θy) dy  s1 = ∫₀¹ y sin(θy) dy
// Stable from θ = 0 to |θ| ~ 1e9 (series below |θ| = 0.5, closed form above).
struct FilonKernels {
    double c0, s0, c1, s1;
};
FilonKernels filon_kernels(double theta);

// ∫ f_pl(x) cos(kx) dx over [x.front(), x.back()] for the piecewise-linear
// interpolant f_pl of the samples (x, f). x strictly increasing.
double filon_cos(const Eigen::Ref<const ArrayXd>& x, const Eigen::Ref<const ArrayXd>& f, double k);
double filon_sin(const Eigen::Ref<const ArrayXd>& x, const Eigen::Ref<const ArrayXd>& f, double k);

// Complex-amplitude version: ∫ f_pl(x) exp(ikx) dx.
Complex filon_exp(const Eigen::Ref<const ArrayXd>& x, const Eigen::Ref<const ArrayXcd>& f, double k);

// Exact moment of a single linear segment against cos(kx) (exposed for the
// panel-correctness property test).
double filon_panel_cos(double u, double v, double fu, double fv, double k);

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int evaluations = 0;
};

// Globally adaptive GK15 over the union of [breakpoints[i], breakpoints[i+1]].
// Refines the worst panel until the summed error estimate meets
// max(abs_tol, rel_tol*|value|) or max_panels is reached.
QuadratureResult adaptive_gk(const std::function<double(double)>& f,
                             const std::vector<double>& breakpoints,
                             double abs_tol, double rel_tol, int max_panels = 4000);

// Convenience wrapper that throws AccuracyError when the target is missed.
double integrate(const std::function<double(double)>& f, const std::vector<double>& breakpoints,
                 double abs_tol, double rel_tol, int max_panels = 4000);

// ∫₀^a ω^{s-1} Φ(ω) dω for s > 0 and smooth bounded Φ. For s < 1 the
// integrable endpoint singularity is flattened exactly by the substitution
// v = ω^s before adaptive integration.
QuadratureResult power_law_head(double s, double a, const std::function<double(double)>& phi,
                                double abs_tol, double rel_tol);

// F(s, x) = ∫_x^∞ u^{-s} cos u du for 0 < s < 2, x > 0. Numeric panels up to
// the asymptotic regime, then repeated integration by parts.
double cosine_tail_integral(double s, double x);

// ∫₀^a ω^{s-1} e^{-pω} dω by the lower-incomplete-gamma power series,
// a^s Σ_n (-pa)^n / (n! (s+n)). Intended for |p|·a ≲ 4.
Complex lower_incomplete_series(double s, Complex p, double a);

} // namespace sdx::quadrature

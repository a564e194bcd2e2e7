// transforms.hpp — Forward transform J(ω) → S(t) and direct inversion
// S(t) → J(ω) on sampled, finite-horizon, nonuniform data
//
// Both directions are one-sided cosine transforms of K(ω) = ω J(ω):
//
//   S(t) = (1/λ̃) ∫₀^∞ K(ω) cos(ωt) dω,        λ̃ = λ/ħ = ∫₀^∞ K(ω) dω
//   K(ω) = (2 λ̃/π) ∫₀^∞ S(t) cos(ωt) dt
//
// which form an exact inverse pair. Data-region integrals use Filon
// quadrature of the piecewise-linear interpolant on the data's own
// breakpoints; the t → ∞ region is covered by an explicit TailModel.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sdx/subohmic.hpp"

namespace sdx {

using Eigen::ArrayXd;

// A sampled response function: strictly increasing times starting at 0,
// dimensionless values, optional per-point standard uncertainties.
struct SampledResponse {
    ArrayXd times;  // ps
    ArrayXd values; // dimensionless
    std::optional<ArrayXd> sigma;
    std::string label;

    // Enforces hard invariants; returns soft warnings (e.g. S(0) far from 1).
    std::vector<std::string> validate() const;

    double t_max() const { return times.size() ? times[times.size() - 1] : 0.0; }
};

// Tabulated K(ω) = ω J(ω) on a strictly increasing positive frequency grid,
// together with the reorganization energy used for normalization.
struct TabulatedSpectralFunction {
    ArrayXd omegas;   // rad/ps, > 0, strictly increasing
    ArrayXd k_values; // dimensionless
    double lambda = 0.0; // hbar·(rad/ps)

    // Construction diagnostics.
    double normalization_defect = 0.0; // |hbar·trapz(K) - lambda| / lambda
    bool has_negative_lobes = false;   // inversion-noise indicator
    std::vector<std::string> notes;

    void validate() const;

    // trapezoid(K) over the grid — the grid's own λ estimate.
    double grid_lambda() const;

    // J(ω) = K(ω)/ω at a grid point; frequencies below `floor_omega` are not
    // evaluable (the 1/ω recovery amplifies noise there).
    double j_at(Eigen::Index i, double floor_omega = 1e-4) const;

    // Builds the tabulation of a sub-Ohmic model on a given grid; lambda from
    // the closed form, defect from the grid trapezoid.
    static TabulatedSpectralFunction from_subohmic(const SubOhmicParams& p,
                                                   const ArrayXd& omega_grid);

    // Same for the Gaussian+biexponential model; K is the unnormalized form
    // and lambda is taken to be the grid trapezoid (shape-only scale).
    static TabulatedSpectralFunction from_gauss_biexp(const GaussBiexpParams& g,
                                                      const ArrayXd& omega_grid);
};

// Extrapolation model for t beyond the data horizon.
struct TailModel {
    enum class Kind { none, algebraic, exponential };
    Kind kind = Kind::none;
    double t_splice = 0.0; // model replaces data beyond this time

    // algebraic: amplitude * (omega_scale * t)^(-exponent)
    // exponential: amplitude * exp(-rate * t)
    double amplitude = 0.0;
    double exponent = 0.0;    // algebraic decay power
    double omega_scale = 1.0; // rad/ps, fixes the algebraic normalization
    double rate = 0.0;        // 1/ps, exponential decay

    double value(double t) const;

    // ∫_{t_splice}^∞ model(t) cos(ωt) dt.
    double cosine_integral(double omega) const;
};

// Least-squares fit of a tail family to the final 20% of the samples. The
// fitted amplitude is snapped so the model passes through the last sample
// (hence the splice is continuous by construction). Throws FitError for
// non-decaying tail data.
TailModel fit_tail(const SampledResponse& s_data, TailModel::Kind kind);

// Forward transform on a caller-supplied time grid. S(0) = 1 by construction
// (the normalization λ̃ is recomputed from the same quadrature).
//
// The analytic overload integrates K of the sub-Ohmic family with a series
// head below the first Filon node (the ω^{s-1} endpoint is not piecewise-
// linear representable); the tabulated overload integrates exactly what the
// grid carries, so mass outside [ω_min, ω_max] is the caller's concern.
SampledResponse forward_stokes(const SubOhmicParams& p, const ArrayXd& t_grid);
SampledResponse forward_stokes(const TabulatedSpectralFunction& j, const ArrayXd& t_grid);

// A-priori bound on the absolute error of forward_stokes(j, ·) caused by the
// piecewise-linear representation of K (relative to the S(0) = 1 scale).
// Grid-refinement changes stay below this bound.
double forward_error_estimate(const TabulatedSpectralFunction& j);

// Direct inversion onto a positive increasing omega grid. `lambda` is the
// (externally supplied) reorganization energy in hbar·(rad/ps). Throws
// TailNeededError if kind = none while the data has not decayed
// (|S(t_max)| > 0.05), and ResolutionError if the omega grid is too coarse
// for the data horizon.
TabulatedSpectralFunction invert_density(const SampledResponse& s_data, double lambda,
                                         const ArrayXd& omega_grid, const TailModel& tail);

// Default inversion grid: logarithmic, `points` nodes over
// [cutoff_hint/100, 20*cutoff_hint] when a cutoff estimate is available,
// otherwise scaled from the data horizon.
ArrayXd default_omega_grid(double cutoff_hint, double t_max, int points = 400);

// Log-spaced helper grid (endpoints included).
ArrayXd log_grid(double lo, double hi, int points);

} // namespace sdx

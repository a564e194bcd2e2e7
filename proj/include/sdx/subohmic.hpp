// subohmic.hpp — Closed-form evaluation of the sub-Ohmic spectral-density
// family and the Gaussian+biexponential reference model
//
// The sub-Ohmic family J(ω) = 2 c ω_ph^{1-s} ω^{s-2} exp(-ω/ω_c) carries all
// downstream quantities in closed form: the Stokes response, its short- and
// long-time limits, the reorganization energy and the Huang-Rhys factor.
// J itself diverges at ω → 0 for s < 2; numerical consumers integrate
// K(ω) = ω J(ω) instead, which is integrable for every s > 0.

#pragma once

#include <string>
#include <vector>

#include "sdx/errors.hpp"

namespace sdx {

enum class SpectralRegime { sub_ohmic, ohmic, super_ohmic };

// Parameters of the sub-Ohmic family. Frequencies in rad/ps.
struct SubOhmicParams {
    double coupling = 1.0;     // dimensionless coupling strength
    double phonon_omega = 1.0; // auxiliary phononic scale (rad/ps)
    double cutoff_omega = 1.0; // exponential cutoff (rad/ps)
    double exponent = 0.5;     // s; (0,1) sub-Ohmic, 1 Ohmic, >1 super-Ohmic

    void validate() const;
    SpectralRegime regime() const {
        if (exponent < 1.0) return SpectralRegime::sub_ohmic;
        if (exponent == 1.0) return SpectralRegime::ohmic;
        return SpectralRegime::super_ohmic;
    }
};

// Gaussian + two-exponential response model. gauss_rate is the Gaussian decay
// parameter in 1/ps^2 (the model contains exp(-gauss_rate*t^2/2)).
struct GaussBiexpParams {
    double gauss_amp = 0.0;
    double gauss_rate = 1.0; // 1/ps^2
    double amp1 = 0.0;
    double tau1 = 1.0; // ps
    double amp2 = 0.0;
    double tau2 = 1.0; // ps

    double amplitude_sum() const { return gauss_amp + amp1 + amp2; }

    // Basic invariants (amplitudes >= 0, scales > 0). Returns human-readable
    // warnings such as a non-unit amplitude sum; throws on hard violations.
    std::vector<std::string> validate() const;

    // Constructor for user-built normalized models: enforces
    // |gauss_amp + amp1 + amp2 - 1| <= 1e-9.
    static GaussBiexpParams normalized(double gauss_amp, double gauss_rate, double amp1,
                                       double tau1, double amp2, double tau2);
};

// J(ω) of the sub-Ohmic family, units 1/(rad/ps). Requires ω > 0.
double eval_subohmic_density(const SubOhmicParams& p, double omega);

// K(ω) = ω J(ω); the singularity-free object integrated everywhere.
double eval_subohmic_k(const SubOhmicParams& p, double omega);

// Closed-form Stokes response (1 + t²ω_c²)^{-s/2} cos(s·arctan(ω_c t)).
// Independent of `coupling` and `phonon_omega`. Requires t >= 0.
double eval_subohmic_stokes(const SubOhmicParams& p, double t);

// Short-time expansion 1 - s(1+s)(ω_c t)²/2.
double stokes_short_time(const SubOhmicParams& p, double t);

// Long-time algebraic law cos(πs/2)(ω_c t)^{-s}; requires ω_c t >= 1.
double stokes_long_time(const SubOhmicParams& p, double t);

// Reorganization energy λ as hbar·(rad/ps): 2 c Γ(s) (ω_c/ω_ph)^{s-1} ω_c.
double reorganization_energy(const SubOhmicParams& p);

// Huang-Rhys factor: finite only in the super-Ohmic regime. The s = 1
// boundary diverges logarithmically and is classified as divergent.
struct HuangRhysFactor {
    enum class Kind { finite, infrared_divergent };
    Kind kind = Kind::infrared_divergent;
    double value = 0.0; // meaningful only when kind == finite
    bool is_finite() const { return kind == Kind::finite; }
};
HuangRhysFactor huang_rhys(const SubOhmicParams& p);

// Baseline-augmented response [S(t) + b0]/(1 + b0). Requires b0 != -1.
double eval_stokes_with_baseline(const SubOhmicParams& p, double baseline, double t);

// Gaussian+biexponential response a_g e^{-r t²/2} + a_1 e^{-t/τ1} + a_2 e^{-t/τ2}.
double eval_gauss_biexp_stokes(const GaussBiexpParams& g, double t);

// The corresponding spectral density, unnormalized (defined up to the
// constant 2λ/hbar; absolute scale is supplied externally via λ):
//   sqrt(1/(2π r)) (a_g/ω) e^{-ω²/(2r)} + Σ_i a_i τ_i / (π ω (1 + τ_i² ω²)).
double eval_gauss_biexp_density(const GaussBiexpParams& g, double omega);

// ω times the above; finite at ω → 0.
double eval_gauss_biexp_k(const GaussBiexpParams& g, double omega);

} // namespace sdx

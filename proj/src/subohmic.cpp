// subohmic.cpp

#include "sdx/subohmic.hpp"

#include <cmath>
#include <limits>

#include "sdx/specfun.hpp"

namespace sdx {

void SubOhmicParams::validate() const {
    if (!(coupling > 0.0) || !std::isfinite(coupling))
        throw DomainError("SubOhmicParams: coupling must be > 0");
    if (!(phonon_omega > 0.0) || !std::isfinite(phonon_omega))
        throw DomainError("SubOhmicParams: phonon_omega must be > 0");
    if (!(cutoff_omega > 0.0) || !std::isfinite(cutoff_omega))
        throw DomainError("SubOhmicParams: cutoff_omega must be > 0");
    if (!(exponent > 0.0) || !std::isfinite(exponent))
        throw DomainError("SubOhmicParams: exponent must be > 0");
}

std::vector<std::string> GaussBiexpParams::validate() const {
    if (gauss_amp < 0.0 || amp1 < 0.0 || amp2 < 0.0)
        throw DomainError("GaussBiexpParams: amplitudes must be >= 0");
    if (!(gauss_rate > 0.0) || !(tau1 > 0.0) || !(tau2 > 0.0))
        throw DomainError("GaussBiexpParams: gauss_rate, tau1, tau2 must be > 0");
    std::vector<std::string> warnings;
    const double sum = amplitude_sum();
    if (std::abs(sum - 1.0) > 1e-9)
        warnings.push_back("amplitude sum " + std::to_string(sum) +
                           " differs from 1; S(0) != 1 for this model");
    return warnings;
}

GaussBiexpParams GaussBiexpParams::normalized(double gauss_amp, double gauss_rate, double amp1,
                                              double tau1, double amp2, double tau2) {
    GaussBiexpParams g{gauss_amp, gauss_rate, amp1, tau1, amp2, tau2};
    g.validate();
    if (std::abs(g.amplitude_sum() - 1.0) > 1e-9)
        throw DomainError("GaussBiexpParams::normalized: amplitudes must sum to 1 within 1e-9");
    return g;
}

double eval_subohmic_density(const SubOhmicParams& p, double omega) {
    p.validate();
    if (!(omega > 0.0))
        throw DomainError("eval_subohmic_density: requires omega > 0 (J diverges at 0 for s < 2;"
                          " integrate K(omega) = omega*J(omega) instead)");
    return 2.0 * p.coupling * std::pow(p.phonon_omega, 1.0 - p.exponent) *
           std::pow(omega, p.exponent - 2.0) * std::exp(-omega / p.cutoff_omega);
}

double eval_subohmic_k(const SubOhmicParams& p, double omega) {
    p.validate();
    if (!(omega >= 0.0))
        throw DomainError("eval_subohmic_k: requires omega >= 0");
    if (omega == 0.0)
        return p.exponent > 1.0 ? 0.0
                                : (p.exponent == 1.0 ? 2.0 * p.coupling
                                                     : std::numeric_limits<double>::infinity());
    return 2.0 * p.coupling * std::pow(p.phonon_omega, 1.0 - p.exponent) *
           std::pow(omega, p.exponent - 1.0) * std::exp(-omega / p.cutoff_omega);
}

double eval_subohmic_stokes(const SubOhmicParams& p, double t) {
    p.validate();
    if (!(t >= 0.0))
        throw DomainError("eval_subohmic_stokes: requires t >= 0");
    const double x = p.cutoff_omega * t;
    return std::pow(1.0 + x * x, -0.5 * p.exponent) * std::cos(p.exponent * std::atan(x));
}

double stokes_short_time(const SubOhmicParams& p, double t) {
    p.validate();
    if (!(t >= 0.0))
        throw DomainError("stokes_short_time: requires t >= 0");
    const double x = p.cutoff_omega * t;
    return 1.0 - 0.5 * p.exponent * (1.0 + p.exponent) * x * x;
}

double stokes_long_time(const SubOhmicParams& p, double t) {
    p.validate();
    const double x = p.cutoff_omega * t;
    if (!(x >= 1.0))
        throw DomainError("stokes_long_time: asymptotic regime requires omega_c * t >= 1");
    return std::cos(0.5 * M_PI * p.exponent) * std::pow(x, -p.exponent);
}

double reorganization_energy(const SubOhmicParams& p) {
    p.validate();
    return 2.0 * p.coupling * specfun::gamma_fn(p.exponent) *
           std::pow(p.cutoff_omega / p.phonon_omega, p.exponent - 1.0) * p.cutoff_omega;
}

HuangRhysFactor huang_rhys(const SubOhmicParams& p) {
    p.validate();
    HuangRhysFactor hr;
    if (p.exponent <= 1.0) {
        hr.kind = HuangRhysFactor::Kind::infrared_divergent;
        return hr;
    }
    hr.kind = HuangRhysFactor::Kind::finite;
    hr.value = 2.0 * p.coupling * specfun::gamma_fn(p.exponent - 1.0) *
               std::pow(p.cutoff_omega / p.phonon_omega, p.exponent - 1.0);
    return hr;
}

double eval_stokes_with_baseline(const SubOhmicParams& p, double baseline, double t) {
    if (baseline == -1.0)
        throw DomainError("eval_stokes_with_baseline: baseline must differ from -1");
    return (eval_subohmic_stokes(p, t) + baseline) / (1.0 + baseline);
}

double eval_gauss_biexp_stokes(const GaussBiexpParams& g, double t) {
    if (!(t >= 0.0))
        throw DomainError("eval_gauss_biexp_stokes: requires t >= 0");
    return g.gauss_amp * std::exp(-0.5 * g.gauss_rate * t * t) + g.amp1 * std::exp(-t / g.tau1) +
           g.amp2 * std::exp(-t / g.tau2);
}

double eval_gauss_biexp_density(const GaussBiexpParams& g, double omega) {
    if (!(omega > 0.0))
        throw DomainError("eval_gauss_biexp_density: requires omega > 0");
    return eval_gauss_biexp_k(g, omega) / omega;
}

double eval_gauss_biexp_k(const GaussBiexpParams& g, double omega) {
    if (!(omega >= 0.0))
        throw DomainError("eval_gauss_biexp_k: requires omega >= 0");
    const double gauss =
        std::sqrt(1.0 / (2.0 * M_PI * g.gauss_rate)) * g.gauss_amp *
        std::exp(-omega * omega / (2.0 * g.gauss_rate));
    const double l1 = g.amp1 * g.tau1 / (M_PI * (1.0 + g.tau1 * g.tau1 * omega * omega));
    const double l2 = g.amp2 * g.tau2 / (M_PI * (1.0 + g.tau2 * g.tau2 * omega * omega));
    return gauss + l1 + l2;
}

} // namespace sdx

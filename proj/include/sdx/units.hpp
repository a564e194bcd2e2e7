// units.hpp — Unit conventions, physical constants and thermodynamic context
//
// Conventions used throughout sdx:
//   * all frequencies are angular, in rad/ps;
//   * all times are in ps;
//   * energies are reported as hbar*omega, i.e. as numbers in rad/ps
//     (equivalently: hbar = 1 in internal formulas);
//   * conversions to/from wavenumbers (1/cm) are explicit, never implicit.

#pragma once

#include <cmath>

#include "sdx/errors.hpp"

namespace sdx {

namespace constants {

// CODATA 2018 values.
inline constexpr double hbar_J_s = 1.054571817e-34;
inline constexpr double k_boltzmann_J_per_K = 1.380649e-23; // exact (SI 2019)
inline constexpr double c_cm_per_ps = 0.0299792458;         // exact

// hbar/k_B in ps*K: converts temperature to the thermal time hbar*beta.
inline constexpr double hbar_over_kB_ps_K = hbar_J_s / k_boltzmann_J_per_K * 1e12;

// One wavenumber (1/cm) expressed as an angular frequency: 2*pi*c * (1 1/cm).
inline const double radps_per_wavenumber = 2.0 * M_PI * c_cm_per_ps;

} // namespace constants

inline double wavenumber_to_radps(double nu_per_cm) {
    return nu_per_cm * constants::radps_per_wavenumber;
}

inline double radps_to_wavenumber(double omega_radps) {
    return omega_radps / constants::radps_per_wavenumber;
}

// Thermodynamic context for the thermal quantities (line shapes, FDT, the
// classical-limit check). Temperature in kelvin; 0 K is allowed only where a
// zero-temperature limit exists (callers enforce their own preconditions).
struct PhysicalContext {
    double temperature_K = 300.0;

    void validate() const {
        if (!(temperature_K >= 0.0) || !std::isfinite(temperature_K))
            throw DomainError("PhysicalContext: temperature must be finite and >= 0 K");
    }

    // hbar*beta in ps. Diverges at T = 0; callers requiring T > 0 must check.
    double thermal_time_ps() const {
        if (temperature_K <= 0.0)
            throw DomainError("thermal_time_ps: requires temperature > 0 K");
        return constants::hbar_over_kB_ps_K / temperature_K;
    }

    // k_B*T as an angular frequency (energy in hbar units), rad/ps.
    double thermal_omega() const { return temperature_K / constants::hbar_over_kB_ps_K; }
};

// Bose occupation 1/(exp(x) - 1) with x = hbar*beta*omega, stable for small x.
inline double bose_occupation(double x) {
    return 1.0 / std::expm1(x);
}

} // namespace sdx

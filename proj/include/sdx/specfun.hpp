// specfun.hpp — Real gamma function and the generalized (Hurwitz) zeta function
//
// zeta(z, q) is provided for real z < 1 (z = 0 included, by analytic
// continuation) and complex q with Re(q) > 0, which is the parameter region
// needed by the closed-form sub-Ohmic line shape. Evaluation is by
// Euler-Maclaurin summation: shift q upward by an adaptively chosen number of
// integer steps, then apply the asymptotic tail with Bernoulli-number
// corrections. Target accuracy 1e-10 relative for Re(q) >= 0.1, |Im q| <= 1e4.

#pragma once

#include <complex>

#include "sdx/errors.hpp"

namespace sdx::specfun {

using Complex = std::complex<double>;

// Gamma function on the real line minus the non-positive integers.
// Throws DomainError at poles. Relative accuracy well below 1e-12 on [-5, 30].
double gamma_fn(double x);

// Result of a Hurwitz zeta evaluation together with its internal error
// estimate; exposed so tests can assert the Euler-Maclaurin consistency
// contract (doubling the shift changes the value by less than the estimate).
struct HurwitzZetaResult {
    Complex value;
    double error_estimate = 0.0; // absolute, from the first omitted tail term
    int shift = 0;               // integer steps q was advanced before the tail
    int tail_terms = 0;          // Bernoulli corrections actually used
};

// Full-diagnostics evaluation; `min_shift_radius` is the lower bound imposed
// on |q + N| before the asymptotic tail is applied (tests use a doubled
// radius to probe internal consistency).
HurwitzZetaResult hurwitz_zeta_detail(double z, Complex q, double min_shift_radius = 0.0);

// zeta(z, q) for z < 1, Re(q) > 0. Throws DomainError outside that region and
// AccuracyError (carrying the achieved estimate) if the tail fails to reach
// ~1e-10 relative accuracy.
Complex hurwitz_zeta(double z, Complex q);

} // namespace sdx::specfun

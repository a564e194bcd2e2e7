// transforms.cpp

#include "sdx/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "sdx/quadrature.hpp"

namespace sdx {

namespace quad = sdx::quadrature;

std::vector<std::string> SampledResponse::validate() const {
    if (times.size() < 2)
        throw DomainError("SampledResponse: need at least 2 samples");
    if (times.size() != values.size())
        throw DomainError("SampledResponse: times/values size mismatch");
    if (times[0] != 0.0)
        throw DomainError("SampledResponse: time grid must start at t = 0");
    for (Eigen::Index i = 0; i < times.size(); ++i) {
        if (!std::isfinite(times[i]) || !std::isfinite(values[i]))
            throw DomainError("SampledResponse: non-finite sample at index " + std::to_string(i));
        if (i > 0 && !(times[i] > times[i - 1]))
            throw DomainError("SampledResponse: times must be strictly increasing (index " +
                              std::to_string(i) + ")");
    }
    if (sigma) {
        if (sigma->size() != times.size())
            throw DomainError("SampledResponse: sigma size mismatch");
        for (Eigen::Index i = 0; i < sigma->size(); ++i)
            if (!((*sigma)[i] > 0.0) || !std::isfinite((*sigma)[i]))
                throw DomainError("SampledResponse: sigma must be positive and finite "
                                  "(zero weights are undefined)");
    }
    std::vector<std::string> warnings;
    if (values[0] < 0.9 || values[0] > 1.1)
        warnings.push_back("S(0) = " + std::to_string(values[0]) +
                           " outside [0.9, 1.1]; data may not be normalized");
    return warnings;
}

void TabulatedSpectralFunction::validate() const {
    if (omegas.size() < 2 || omegas.size() != k_values.size())
        throw DomainError("TabulatedSpectralFunction: need matching grids with >= 2 nodes");
    if (!(omegas[0] > 0.0))
        throw DomainError("TabulatedSpectralFunction: frequencies must be > 0");
    for (Eigen::Index i = 1; i < omegas.size(); ++i)
        if (!(omegas[i] > omegas[i - 1]))
            throw DomainError("TabulatedSpectralFunction: frequencies must be strictly increasing");
}

double TabulatedSpectralFunction::grid_lambda() const {
    const Eigen::Index n = omegas.size();
    return (0.5 * (k_values.head(n - 1) + k_values.tail(n - 1)) *
            (omegas.tail(n - 1) - omegas.head(n - 1)))
        .sum();
}

double TabulatedSpectralFunction::j_at(Eigen::Index i, double floor_omega) const {
    if (i < 0 || i >= omegas.size())
        throw DomainError("TabulatedSpectralFunction::j_at: index out of range");
    if (omegas[i] < floor_omega)
        throw DomainError("TabulatedSpectralFunction::j_at: omega below the evaluability floor");
    return k_values[i] / omegas[i];
}

TabulatedSpectralFunction TabulatedSpectralFunction::from_subohmic(const SubOhmicParams& p,
                                                                   const ArrayXd& omega_grid) {
    TabulatedSpectralFunction tab;
    tab.omegas = omega_grid;
    tab.k_values = ArrayXd(omega_grid.size());
    for (Eigen::Index i = 0; i < omega_grid.size(); ++i)
        tab.k_values[i] = eval_subohmic_k(p, omega_grid[i]);
    tab.validate();
    tab.lambda = reorganization_energy(p);
    tab.normalization_defect = std::abs(tab.grid_lambda() - tab.lambda) / tab.lambda;
    return tab;
}

TabulatedSpectralFunction TabulatedSpectralFunction::from_gauss_biexp(const GaussBiexpParams& g,
                                                                      const ArrayXd& omega_grid) {
    TabulatedSpectralFunction tab;
    tab.omegas = omega_grid;
    tab.k_values = ArrayXd(omega_grid.size());
    for (Eigen::Index i = 0; i < omega_grid.size(); ++i)
        tab.k_values[i] = eval_gauss_biexp_k(g, omega_grid[i]);
    tab.validate();
    tab.lambda = tab.grid_lambda(); // shape-only scale: the model is defined up to a constant
    tab.normalization_defect = 0.0;
    tab.notes.push_back("lambda set from the grid trapezoid (unnormalized model)");
    return tab;
}

double TailModel::value(double t) const {
    switch (kind) {
    case Kind::none:
        return 0.0;
    case Kind::algebraic:
        return amplitude * std::pow(omega_scale * t, -exponent);
    case Kind::exponential:
        return amplitude * std::exp(-rate * t);
    }
    return 0.0;
}

double TailModel::cosine_integral(double omega) const {
    if (!(omega > 0.0))
        throw DomainError("TailModel::cosine_integral: requires omega > 0");
    switch (kind) {
    case Kind::none:
        return 0.0;
    case Kind::algebraic: {
        // ∫_T^∞ A (ω_s t)^{-p} cos(ωt) dt = A ω_s^{-p} ω^{p-1} F(p, ωT)
        const double x = omega * t_splice;
        return amplitude * std::pow(omega_scale, -exponent) * std::pow(omega, exponent - 1.0) *
               quad::cosine_tail_integral(exponent, x);
    }
    case Kind::exponential: {
        const std::complex<double> r(rate, -omega);
        return amplitude * (std::exp(-r * t_splice) / r).real();
    }
    }
    return 0.0;
}

TailModel fit_tail(const SampledResponse& s_data, TailModel::Kind kind) {
    s_data.validate();
    const double tmax = s_data.t_max();

    // Precondition: the final decade must be populated.
    Eigen::Index in_last_decade = 0;
    for (Eigen::Index i = 0; i < s_data.times.size(); ++i)
        if (s_data.times[i] >= 0.1 * tmax) ++in_last_decade;
    if (in_last_decade < 5)
        throw FitError("fit_tail: need at least 5 points in the final decade of the time grid");

    TailModel tail;
    tail.kind = kind;
    tail.t_splice = tmax;
    if (kind == TailModel::Kind::none)
        return tail;

    // Fit window: final 20% of the time span.
    std::vector<double> xs, ys; // regression coordinates
    const double t_lo = 0.8 * tmax;
    for (Eigen::Index i = 0; i < s_data.times.size(); ++i) {
        const double t = s_data.times[i], v = s_data.values[i];
        if (t < t_lo || t <= 0.0) continue;
        if (v <= 0.0) continue; // log-linear fit needs positive values
        xs.push_back(kind == TailModel::Kind::algebraic ? std::log(t) : t);
        ys.push_back(std::log(v));
    }
    if (xs.size() < 3)
        throw FitError("fit_tail: fewer than 3 usable (positive) samples in the fit window");

    // Ordinary least squares for slope/intercept.
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double denom = n * sxx - sx * sx;
    if (std::abs(denom) < 1e-30)
        throw FitError("fit_tail: degenerate fit window");
    const double slope = (n * sxy - sx * sy) / denom;
    if (!(slope < 0.0))
        throw FitError("fit_tail: tail data is non-decaying (slope >= 0)");

    const double t_last = s_data.times[s_data.times.size() - 1];
    const double v_last = s_data.values[s_data.values.size() - 1];
    if (kind == TailModel::Kind::algebraic) {
        tail.exponent = -slope;
        tail.omega_scale = 1.0;
        // Snap the amplitude to the last sample: continuous splice by construction.
        tail.amplitude = v_last * std::pow(t_last, tail.exponent);
    } else {
        tail.rate = -slope;
        tail.amplitude = v_last * std::exp(tail.rate * t_last);
    }
    return tail;
}

namespace {

void check_time_grid(const ArrayXd& t_grid) {
    if (t_grid.size() < 1)
        throw DomainError("forward_stokes: empty time grid");
    if (!(t_grid[0] >= 0.0))
        throw DomainError("forward_stokes: times must be >= 0");
    for (Eigen::Index i = 1; i < t_grid.size(); ++i)
        if (!(t_grid[i] > t_grid[i - 1]))
            throw DomainError("forward_stokes: time grid must be strictly increasing");
}

} // namespace

SampledResponse forward_stokes(const SubOhmicParams& p, const ArrayXd& t_grid) {
    p.validate();
    check_time_grid(t_grid);
    const double t_max = t_grid[t_grid.size() - 1];
    const double wc = p.cutoff_omega, s = p.exponent;
    const double prefix = 2.0 * p.coupling * std::pow(p.phonon_omega, 1.0 - s);

    // Series head below `a` (keeps |p·a| <= 0.5), Filon on a geometric grid
    // above. The grid ratio respects both the interpolation error target and
    // the oscillation-resolution bound for the largest requested time.
    const double a = std::min(0.25 * wc, 0.5 / (1.0 / wc + t_max));
    const double omega_max = 45.0 * wc;
    const double ratio_cap =
        t_max > 0.0 ? std::min(1e-3, M_PI / (4.0 * t_max * omega_max)) : 1e-3;
    const int n_panels =
        static_cast<int>(std::ceil(std::log(omega_max / a) / std::log1p(ratio_cap)));
    ArrayXd nodes(n_panels + 1), amp(n_panels + 1);
    const double log_a = std::log(a), step = std::log(omega_max / a) / n_panels;
    for (int i = 0; i <= n_panels; ++i) {
        const double w = std::exp(log_a + step * i);
        nodes[i] = w;
        amp[i] = prefix * std::pow(w, s - 1.0) * std::exp(-w / wc);
    }

    auto eval = [&](double t) {
        const std::complex<double> pc(1.0 / wc, -t);
        const double head = prefix * quad::lower_incomplete_series(s, pc, a).real();
        return head + quad::filon_cos(nodes, amp, t);
    };

    const double norm = eval(0.0);
    SampledResponse out;
    out.times = t_grid;
    out.values = ArrayXd(t_grid.size());
    for (Eigen::Index i = 0; i < t_grid.size(); ++i)
        out.values[i] = eval(t_grid[i]) / norm;
    out.label = "forward(sub-Ohmic)";
    return out;
}

SampledResponse forward_stokes(const TabulatedSpectralFunction& j, const ArrayXd& t_grid) {
    j.validate();
    check_time_grid(t_grid);
    const double t_max = t_grid[t_grid.size() - 1];
    const double max_spacing =
        (j.omegas.tail(j.omegas.size() - 1) - j.omegas.head(j.omegas.size() - 1)).maxCoeff();
    if (max_spacing * t_max >= 0.25 * M_PI)
        throw ResolutionError("forward_stokes: frequency grid too coarse for t_max "
                              "(max spacing * t_max = " +
                              std::to_string(max_spacing * t_max) + " >= pi/4)");

    const double norm = j.grid_lambda();
    if (!(norm > 0.0))
        throw DomainError("forward_stokes: tabulated K has non-positive integral");
    SampledResponse out;
    out.times = t_grid;
    out.values = ArrayXd(t_grid.size());
    for (Eigen::Index i = 0; i < t_grid.size(); ++i)
        out.values[i] = quad::filon_cos(j.omegas, j.k_values, t_grid[i]) / norm;
    out.label = "forward(tabulated)";
    return out;
}

double forward_error_estimate(const TabulatedSpectralFunction& j) {
    j.validate();
    const Eigen::Index n = j.omegas.size();
    // Piecewise-linear quadrature error ~ Σ h³|K''|/12 with K'' from second
    // differences; doubled to cover the normalization pass.
    double est = 0.0;
    for (Eigen::Index i = 1; i + 1 < n; ++i) {
        const double h = 0.5 * (j.omegas[i + 1] - j.omegas[i - 1]);
        const double d2 = j.k_values[i + 1] - 2.0 * j.k_values[i] + j.k_values[i - 1];
        est += h * std::abs(d2) / 12.0;
    }
    return 2.0 * est / j.grid_lambda();
}

TabulatedSpectralFunction invert_density(const SampledResponse& s_data, double lambda,
                                         const ArrayXd& omega_grid, const TailModel& tail) {
    std::vector<std::string> warnings = s_data.validate();
    if (!(lambda > 0.0))
        throw DomainError("invert_density: lambda must be > 0");
    if (omega_grid.size() < 2 || !(omega_grid[0] > 0.0))
        throw DomainError("invert_density: omega grid must be positive with >= 2 nodes");
    for (Eigen::Index i = 1; i < omega_grid.size(); ++i)
        if (!(omega_grid[i] > omega_grid[i - 1]))
            throw DomainError("invert_density: omega grid must be strictly increasing");

    const double last = s_data.values[s_data.values.size() - 1];
    if (tail.kind == TailModel::Kind::none && std::abs(last) > 0.05)
        throw TailNeededError("invert_density: |S(t_max)| = " + std::to_string(std::abs(last)) +
                              " > 0.05; a tail model is required for the t -> infinity region");
    if (last >= 0.5)
        warnings.push_back("data spans less than one characteristic decay (S(t_max) >= 0.5)");

    TabulatedSpectralFunction out;
    out.omegas = omega_grid;
    out.k_values = ArrayXd(omega_grid.size());
    const double scale = 2.0 * lambda / M_PI; // exact inverse of the forward pair
    for (Eigen::Index i = 0; i < omega_grid.size(); ++i) {
        const double w = omega_grid[i];
        const double data_part = quad::filon_cos(s_data.times, s_data.values, w);
        out.k_values[i] = scale * (data_part + tail.cosine_integral(w));
    }
    out.lambda = lambda;
    out.normalization_defect = std::abs(out.grid_lambda() - lambda) / lambda;
    out.has_negative_lobes = (out.k_values < 0.0).any();
    if (out.has_negative_lobes)
        out.notes.push_back("K(omega) has negative lobes (inversion noise indicator)");
    out.notes.insert(out.notes.end(), warnings.begin(), warnings.end());
    return out;
}

ArrayXd log_grid(double lo, double hi, int points) {
    if (!(lo > 0.0) || !(hi > lo) || points < 2)
        throw DomainError("log_grid: need 0 < lo < hi and points >= 2");
    ArrayXd g(points);
    const double llo = std::log(lo), step = (std::log(hi) - llo) / (points - 1);
    for (int i = 0; i < points; ++i)
        g[i] = std::exp(llo + step * i);
    g[0] = lo;
    g[points - 1] = hi;
    return g;
}

ArrayXd default_omega_grid(double cutoff_hint, double t_max, int points) {
    if (cutoff_hint > 0.0)
        return log_grid(cutoff_hint / 100.0, 20.0 * cutoff_hint, points);
    if (!(t_max > 0.0))
        throw DomainError("default_omega_grid: need a cutoff hint or a positive t_max");
    return log_grid(0.01 / t_max, 100.0 / t_max, points);
}

} // namespace sdx

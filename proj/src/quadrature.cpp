// quadrature.cpp — Filon moments, adaptive Gauss-Kronrod, endpoint helpers

#include "sdx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace sdx::quadrature {

namespace {

constexpr double kPi = 3.14159265358979323846;

} // namespace

FilonKernels filon_kernels(double theta) {
    FilonKernels k;
    const double t2 = theta * theta;
    if (std::abs(theta) < 0.5) {
        // Maclaurin series; 8 terms reach ~1e-20 at |theta| = 0.5.
        double c0 = 0.0, s0 = 0.0, c1 = 0.0, s1 = 0.0;
        double pow_even = 1.0; // theta^(2m)
        double fact = 1.0;     // (2m)!
        for (int m = 0; m < 8; ++m) {
            const double sign = (m % 2 == 0) ? 1.0 : -1.0;
            // c0: θ^2m/(2m+1)!,  s0: θ^(2m+1)/(2m+2)!
            // c1: θ^2m/((2m)!(2m+2)), s1: θ^(2m+1)/((2m+1)!(2m+3))
            c0 += sign * pow_even / (fact * (2 * m + 1));
            c1 += sign * pow_even / (fact * (2 * m + 2));
            s0 += sign * pow_even * theta / (fact * (2 * m + 1) * (2 * m + 2));
            s1 += sign * pow_even * theta / (fact * (2 * m + 1) * (2 * m + 3));
            pow_even *= t2;
            fact *= (2 * m + 1) * (2 * m + 2);
        }
        k.c0 = c0;
        k.s0 = s0;
        k.c1 = c1;
        k.s1 = s1;
    } else {
        const double s = std::sin(theta), c = std::cos(theta);
        k.c0 = s / theta;
        k.s0 = (1.0 - c) / theta;
        k.c1 = (c - 1.0 + theta * s) / t2;
        k.s1 = (s - theta * c) / t2;
    }
    return k;
}

namespace {

// Shared panel assembly: accumulates ∫ f_pl cos(kx) dx and ∫ f_pl sin(kx) dx.
template <bool WantCos, bool WantSin>
void filon_accumulate(const Eigen::Ref<const ArrayXd>& x, const Eigen::Ref<const ArrayXd>& f,
                      double k, double& out_cos, double& out_sin) {
    if (x.size() != f.size() || x.size() < 2)
        throw DomainError("filon quadrature: need matching grids with at least 2 samples");
    double acc_c = 0.0, acc_s = 0.0;
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
        const double u = x[i], h = x[i + 1] - x[i];
        if (!(h > 0.0))
            throw DomainError("filon quadrature: grid must be strictly increasing");
        const double fu = f[i], df = f[i + 1] - f[i];
        const FilonKernels kn = filon_kernels(k * h);
        const double cu = std::cos(k * u), su = std::sin(k * u);
        if constexpr (WantCos)
            acc_c += h * (fu * (cu * kn.c0 - su * kn.s0) + df * (cu * kn.c1 - su * kn.s1));
        if constexpr (WantSin)
            acc_s += h * (fu * (su * kn.c0 + cu * kn.s0) + df * (su * kn.c1 + cu * kn.s1));
    }
    out_cos = acc_c;
    out_sin = acc_s;
}

} // namespace

double filon_cos(const Eigen::Ref<const ArrayXd>& x, const Eigen::Ref<const ArrayXd>& f, double k) {
    double c = 0.0, s = 0.0;
    filon_accumulate<true, false>(x, f, k, c, s);
    return c;
}

double filon_sin(const Eigen::Ref<const ArrayXd>& x, const Eigen::Ref<const ArrayXd>& f, double k) {
    double c = 0.0, s = 0.0;
    filon_accumulate<false, true>(x, f, k, c, s);
    return s;
}

Complex filon_exp(const Eigen::Ref<const ArrayXd>& x, const Eigen::Ref<const ArrayXcd>& f, double k) {
    if (x.size() != f.size() || x.size() < 2)
        throw DomainError("filon_exp: need matching grids with at least 2 samples");
    Complex acc = 0.0;
    for (Eigen::Index i = 0; i + 1 < x.size(); ++i) {
        const double u = x[i], h = x[i + 1] - x[i];
        if (!(h > 0.0))
            throw DomainError("filon_exp: grid must be strictly increasing");
        const Complex fu = f[i], df = f[i + 1] - f[i];
        const FilonKernels kn = filon_kernels(k * h);
        const Complex e0(kn.c0, kn.s0), e1(kn.c1, kn.s1); // ∫₀¹ y^j e^{iθy} dy
        const Complex phase(std::cos(k * u), std::sin(k * u));
        acc += h * phase * (fu * e0 + df * e1);
    }
    return acc;
}

double filon_panel_cos(double u, double v, double fu, double fv, double k) {
    ArrayXd x(2), f(2);
    x << u, v;
    f << fu, fv;
    return filon_cos(x, f, k);
}

namespace {

// QUADPACK dqk15 abscissae/weights (positive half; node 0 included last).
constexpr double kKronrodNodes[8] = {
    0.991455371120812639207, 0.949107912342758524526, 0.864864423359769072790,
    0.741531185599394439864, 0.586087235467691130295, 0.405845151377397166907,
    0.207784955007898467601, 0.0};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224964, 0.063092092629978553291, 0.104790010322250183840,
    0.140653259715525918745, 0.169004726639267902827, 0.190350578064785409913,
    0.204432940075298892410, 0.209482141084727828013};
// Embedded 7-point Gauss weights attach to Kronrod nodes 1, 3, 5, 7.
constexpr double kGaussWeights[4] = {
    0.129484966168869693271, 0.279705391489276667901, 0.381830050505118944950,
    0.417959183673469387755};

struct Panel {
    double a, b, value, error;
    long order; // insertion counter: deterministic tie-breaking
};

struct PanelWorse {
    bool operator()(const Panel& p, const Panel& q) const {
        if (p.error != q.error) return p.error < q.error;
        return p.order > q.order;
    }
};

Panel gk15_panel(const std::function<double(double)>& f, double a, double b, long order) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double kron = 0.0, gauss = 0.0;
    for (int i = 0; i < 8; ++i) {
        const double dx = h * kKronrodNodes[i];
        const double fsum = (i == 7) ? f(c) : f(c - dx) + f(c + dx);
        kron += kKronrodWeights[i] * fsum;
        if (i % 2 == 1)
            gauss += kGaussWeights[i / 2] * fsum; // i = 7 is the center node
    }
    kron *= h;
    gauss *= h;
    Panel p;
    p.a = a;
    p.b = b;
    p.value = kron;
    p.error = std::max(std::abs(kron - gauss),
                       std::abs(kron) * std::numeric_limits<double>::epsilon() * 50.0);
    p.order = order;
    return p;
}

} // namespace

QuadratureResult adaptive_gk(const std::function<double(double)>& f,
                             const std::vector<double>& breakpoints,
                             double abs_tol, double rel_tol, int max_panels) {
    if (breakpoints.size() < 2)
        throw DomainError("adaptive_gk: need at least two breakpoints");
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
    long counter = 0;
    int evals = 0;
    double total = 0.0, total_err = 0.0;
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i + 1] > breakpoints[i]))
            throw DomainError("adaptive_gk: breakpoints must be strictly increasing");
        Panel p = gk15_panel(f, breakpoints[i], breakpoints[i + 1], counter++);
        evals += 15;
        total += p.value;
        total_err += p.error;
        queue.push(p);
    }
    int panels = static_cast<int>(breakpoints.size()) - 1;
    while (total_err > std::max(abs_tol, rel_tol * std::abs(total)) && panels < max_panels) {
        Panel worst = queue.top();
        queue.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Interval at floating-point resolution; cannot split further.
            queue.push(worst);
            break;
        }
        Panel left = gk15_panel(f, worst.a, mid, counter++);
        Panel right = gk15_panel(f, mid, worst.b, counter++);
        evals += 30;
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++panels;
    }
    QuadratureResult r;
    r.value = total;
    r.error_estimate = total_err;
    r.evaluations = evals;
    return r;
}

double integrate(const std::function<double(double)>& f, const std::vector<double>& breakpoints,
                 double abs_tol, double rel_tol, int max_panels) {
    QuadratureResult r = adaptive_gk(f, breakpoints, abs_tol, rel_tol, max_panels);
    if (r.error_estimate > std::max(abs_tol, rel_tol * std::abs(r.value)) * 1.0001)
        throw AccuracyError("adaptive_gk: failed to reach requested tolerance", r.error_estimate);
    return r.value;
}

QuadratureResult power_law_head(double s, double a, const std::function<double(double)>& phi,
                                double abs_tol, double rel_tol) {
    if (!(s > 0.0))
        throw DomainError("power_law_head: requires s > 0");
    if (!(a > 0.0))
        throw DomainError("power_law_head: requires a > 0");
    if (s >= 1.0) {
        // ω^{s-1} is bounded on [0, a]; integrate directly.
        auto g = [&](double w) { return (w == 0.0 ? 0.0 : std::pow(w, s - 1.0)) * phi(w); };
        std::function<double(double)> gf = g;
        if (s == 1.0) gf = phi;
        return adaptive_gk(gf, {0.0, 0.5 * a, a}, abs_tol, rel_tol);
    }
    // v = ω^s flattens the endpoint exactly: ∫ ω^{s-1}Φ dω = (1/s)∫ Φ(v^{1/s}) dv.
    const double vmax = std::pow(a, s);
    const double inv_s = 1.0 / s;
    auto g = [&](double v) { return phi(v <= 0.0 ? 0.0 : std::pow(v, inv_s)) / s; };
    return adaptive_gk(g, {0.0, 0.5 * vmax, vmax}, abs_tol, rel_tol);
}

double cosine_tail_integral(double s, double x) {
    if (!(s > 0.0 && s < 2.0))
        throw DomainError("cosine_tail_integral: requires 0 < s < 2");
    if (!(x > 0.0))
        throw DomainError("cosine_tail_integral: requires x > 0");

    const double x_asym = 40.0;
    double numeric = 0.0;
    double X = x;
    if (x < x_asym) {
        // Integrate to a cosine zero-crossing structure—seed one panel per
        // half period so the oscillation is resolved before adaptivity.
        std::vector<double> bp;
        bp.push_back(x);
        double edge = std::ceil(x / kPi) * kPi;
        if (edge <= x) edge += kPi;
        for (; edge < x_asym; edge += kPi)
            bp.push_back(edge);
        bp.push_back(x_asym);
        auto f = [s](double u) { return std::pow(u, -s) * std::cos(u); };
        QuadratureResult r = adaptive_gk(f, bp, 1e-14, 1e-13, 6000);
        numeric = r.value;
        X = x_asym;
    }

    // ∫_X^∞ u^{-s} cos u du = Σ_j (-1)^j c_j [ -sin X · X^{-s-2j}
    //                                          + (s+2j) cos X · X^{-s-2j-1} ],
    // c_j = Π_{i<2j}(s+i); truncated at the smallest term.
    const double sinX = std::sin(X), cosX = std::cos(X);
    double coeff = 1.0;
    double xpow = std::pow(X, -s);
    double acc = 0.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    for (int j = 0; j < 40; ++j) {
        const double sj = s + 2.0 * j;
        const double term = coeff * (-sinX * xpow + sj * cosX * xpow / X);
        const double mag = std::abs(coeff) * xpow * (1.0 + sj / X);
        if (mag >= prev_mag)
            break;
        acc += term;
        if (mag < 1e-17 * (std::abs(acc) + std::abs(numeric) + 1e-300))
            break;
        prev_mag = mag;
        coeff *= -sj * (sj + 1.0);
        xpow /= X * X;
    }
    return numeric + acc;
}

Complex lower_incomplete_series(double s, Complex p, double a) {
    if (!(s > 0.0) || !(a > 0.0))
        throw DomainError("lower_incomplete_series: requires s > 0 and a > 0");
    const Complex pa = -p * a;
    Complex term = 1.0; // (-pa)^n / n!
    Complex sum = 1.0 / s;
    for (int n = 1; n < 200; ++n) {
        term *= pa / static_cast<double>(n);
        const Complex contrib = term / (s + n);
        sum += contrib;
        if (std::abs(contrib) < 1e-18 * std::abs(sum))
            break;
    }
    return std::pow(a, s) * sum;
}

} // namespace sdx::quadrature

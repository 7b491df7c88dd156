#pragma once

// Trapezoid weights for |x|^β g(x) on a uniform symmetric grid, with a local
// correction around x = 0.
//
// The plain rule h Σ |mh|^β g(mh) has an error of order h^{β+1} coming from the
// kink at the origin (Navot's generalized Euler–Maclaurin expansion). For a mode
// e^{2πiθx/h} that error is h^{β+1} A_β (2π)^{-β-1} S(θ) with
//   A_β = -2Γ(β+1) sin(πβ/2),   S(θ) = ζ(β+1, 1-θ) + ζ(β+1, 1+θ),
// so symmetric weights a_m on |m| <= M whose cosine series matches -A_β(2π)^{-β-1}S
// on |θ| <= θ_max remove it for everything resolved on the grid.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "special.hpp"

namespace dunkl {

struct CorrectionOptions {
    int half_width = 12;     // M
    double band = 0.3;       // θ_max, in cycles per node
    int fit_points = 400;
};

// Returns a_{-M..M}; all zero when β is an even integer (the integrand is smooth).
inline std::vector<double> origin_correction(double beta, const CorrectionOptions& opt = {}) {
    const int M = opt.half_width;
    std::vector<double> a(2 * M + 1, 0.0);
    const double half = beta / 2.0;
    if (std::abs(half - std::round(half)) < 1e-14) return a;
    const double amp = -2.0 * std::tgamma(beta + 1.0) * std::sin(std::numbers::pi * beta / 2.0) *
                       std::pow(2.0 * std::numbers::pi, -beta - 1.0);
    const int P = opt.fit_points;
    Eigen::MatrixXd B(P, M + 1);
    Eigen::VectorXd rhs(P);
    for (int p = 0; p < P; ++p) {
        const double th = opt.band * p / (P - 1);
        rhs(p) = -amp * (hurwitz_zeta(beta + 1.0, 1.0 - th) + hurwitz_zeta(beta + 1.0, 1.0 + th));
        B(p, 0) = 1.0;
        for (int m = 1; m <= M; ++m) B(p, m) = 2.0 * std::cos(2.0 * std::numbers::pi * m * th);
    }
    const Eigen::VectorXd c = B.colPivHouseholderQr().solve(rhs);
    for (int m = 0; m <= M; ++m) a[M + m] = a[M - m] = c(m);
    return a;
}

// Weights on nodes -x_max + i·h (i = 0..n-1, n odd) for ∫ |x|^β g(x) dx.
inline std::vector<double> singular_trapezoid_weights(int n, double x_max, double beta,
                                                      const CorrectionOptions& opt = {}) {
    const double h = 2.0 * x_max / (n - 1);
    const int c = (n - 1) / 2;
    std::vector<double> w(n);
    for (int i = 0; i < n; ++i) {
        const double x = std::abs((i - c) * h);
        w[i] = beta == 0.0 ? h : (x == 0.0 ? 0.0 : h * std::pow(x, beta));
    }
    w.front() *= 0.5;
    w.back() *= 0.5;
    const auto a = origin_correction(beta, opt);
    const int M = opt.half_width;
    if (c < M) return w;  // grid too small to host the stencil; left uncorrected
    const double scale = std::pow(h, beta + 1.0);
    for (int m = -M; m <= M; ++m) w[c + m] += a[M + m] * scale;
    return w;
}

// ∫_0^∞ f with breakpoints; tanh-sinh on the finite pieces, exp-sinh on the tail
template <class F>
double half_line_integral(F&& f, std::vector<double> breaks, double tol) {
    thread_local boost::math::quadrature::tanh_sinh<double> ts;
    thread_local boost::math::quadrature::exp_sinh<double> es;
    breaks.push_back(0.0);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
        const double a = breaks[i], b = breaks[i + 1];
        // mapped to [0, 1]: Boost's tanh-sinh can round an abscissa onto a left end far from 0
        if (b - a > 1e-12 * std::max(1.0, b))
            sum += (b - a) * ts.integrate([&](double t) { return f(a + (b - a) * t); }, 0.0, 1.0, tol);
    }
    const double last = breaks.back();
    sum += es.integrate([&](double t) { return f(last + t); }, 0.0, std::numeric_limits<double>::infinity(), tol);
    return sum;
}

}  // namespace dunkl

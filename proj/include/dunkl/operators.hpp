#pragma once

// Heat semigroup and fractional powers of the Dunkl Laplacian.

#include <cmath>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include "transform.hpp"
#include "windows.hpp"

namespace dunkl {

namespace detail {
inline double squared_norm(std::span<const double> xi) {
    double s = 0.0;
    for (double v : xi) s += v * v;
    return s;
}
}  // namespace detail

inline Multiplier heat_multiplier(double t) {
    return {[t](std::span<const double> xi) { return cplx(std::exp(-t * detail::squared_norm(xi))); }, 0.0};
}

inline SampledFunction heat_apply(const TransformPlan& plan, const SampledFunction& f, double t) {
    if (!(t > 0.0)) throw std::domain_error("heat_apply: t must be positive");
    return spectral_apply(plan, f, heat_multiplier(t));
}

// h_t(x, y) = τ_x h_t(-y), summed from the multiplier e^{-t|ξ|²} at arbitrary points
inline double heat_kernel_bivariate(const TransformPlan& plan, double t, std::span<const double> x,
                                    std::span<const double> y) {
    if (!(t > 0.0)) throw std::domain_error("heat_kernel_bivariate: t must be positive");
    const auto& g = plan.grid();
    SampledFunction spec(plan.grid_ptr(), Domain::frequency);
    for (std::size_t i = 0; i < g.size(); ++i) spec[i] = std::exp(-t * g.radius(i) * g.radius(i));
    return translated_value(plan, spec, x, y).real();
}

// (2t)^{-d_k/2} e^{-(|x|²+|y|²)/4t} E_k(x/√(2t), y/√(2t)), per axis and in scaled form
inline double heat_kernel_closed_form(const ReflectionSetup& s, double t, std::span<const double> x,
                                      std::span<const double> y) {
    if (!(t > 0.0)) throw std::domain_error("heat_kernel_closed_form: t must be positive");
    double v = 1.0;
    for (int i = 0; i < s.d(); ++i) {
        const double a = std::abs(x[i]) - std::abs(y[i]);
        v *= std::pow(2.0 * t, -(0.5 + s.k(i))) * std::exp(-a * a / (4.0 * t)) *
             dunkl_kernel_real_1d_scaled(s.k(i), x[i] / std::sqrt(2.0 * t), y[i] / std::sqrt(2.0 * t));
    }
    return v;
}

// ∫ h_t(x, y) dμ_k(y) by adaptive quadrature of the closed form, one axis at a time
inline double heat_mass(const ReflectionSetup& s, double t, std::span<const double> x, double tol = 1e-12) {
    double mass = 1.0;
    for (int i = 0; i < s.d(); ++i) {
        const ReflectionSetup axis({s.k(i)});
        const double xi = x[i], k = s.k(i), c = s.axis_c(i);
        auto f = [&](double y) {
            const double gap = y - std::abs(xi);
            if (gap * gap > 2900.0 * t) return 0.0;  // beyond e^{-725}
            const double a[1] = {xi}, b[1] = {y}, bm[1] = {-y};
            const double w = k == 0.0 ? 1.0 : std::pow(std::sqrt(2.0) * y, 2.0 * k);
            return c * w * (heat_kernel_closed_form(axis, t, a, b) + heat_kernel_closed_form(axis, t, a, bm));
        };
        mass *= half_line_integral(f, {std::abs(xi)}, tol);
    }
    return mass;
}

inline SampledFunction fractional_laplacian(const TransformPlan& plan, const SampledFunction& f, double s) {
    if (!(s > 0.0)) throw std::domain_error("fractional_laplacian: s must be positive");
    return spectral_apply(plan, f, Multiplier{nullptr, 2.0 * s});
}

struct SubordinationGrid {
    double t_min = 1e-6, t_max = 1e4;
    int points = 200;
};

// Simpson weights in u = ln t on a uniform grid (3/8 rule on the last three intervals
// when the interval count is odd).
inline std::vector<double> log_simpson_weights(int points, double du) {
    if (points < 4) throw std::invalid_argument("subordination grid needs at least 4 points");
    std::vector<double> w(points, 0.0);
    int intervals = points - 1;
    int simpson_end = intervals % 2 == 0 ? intervals : intervals - 3;
    for (int i = 0; i < simpson_end; i += 2) {
        w[i] += du / 3.0;
        w[i + 1] += 4.0 * du / 3.0;
        w[i + 2] += du / 3.0;
    }
    if (simpson_end != intervals) {
        const int i = simpson_end;
        w[i] += 3.0 * du / 8.0;
        w[i + 1] += 9.0 * du / 8.0;
        w[i + 2] += 9.0 * du / 8.0;
        w[i + 3] += 3.0 * du / 8.0;
    }
    return w;
}

// (1/Γ(1-s)) ∫_0^∞ t^{-s} λ e^{-tλ} dt / λ^s, with the interior done by log-Simpson and
// the two ends [0, t_min], [t_max, ∞) by incomplete gamma functions.
struct SubordinationMultiplier {
    double s;
    SubordinationGrid tg;
    std::vector<double> t, w;
    double inv_gamma;

    SubordinationMultiplier(double s_, SubordinationGrid grid) : s(s_), tg(grid) {
        if (!(s > 0.0 && s < 1.0)) throw std::domain_error("subordination: s must lie in (0, 1)");
        if (!(tg.t_min > 0.0 && tg.t_max > tg.t_min)) throw std::invalid_argument("subordination: bad t range");
        const double du = std::log(tg.t_max / tg.t_min) / (tg.points - 1);
        w = log_simpson_weights(tg.points, du);
        t.resize(tg.points);
        for (int q = 0; q < tg.points; ++q) t[q] = tg.t_min * std::exp(q * du);
        inv_gamma = 1.0 / gamma(1.0 - s);
    }
    // interior quadrature divided by λ^s (dt = t du)
    double interior(double lambda) const {
        double acc = 0.0;
        const double lam = std::pow(lambda, 1.0 - s);
        for (std::size_t q = 0; q < t.size(); ++q) acc += w[q] * std::pow(t[q], 1.0 - s) * lam * std::exp(-t[q] * lambda);
        return acc;
    }
    double tails(double lambda) const {
        const double a = 1.0 - s;
        const double head = lambda == 0.0 ? 0.0 : boost::math::tgamma_lower(a, tg.t_min * lambda);
        const double tail = boost::math::tgamma(a, tg.t_max * lambda);
        return head + tail;
    }
    double smooth_part(double lambda) const { return (interior(lambda) + tails(lambda)) * inv_gamma; }
    double value(double lambda) const { return std::pow(lambda, s) * smooth_part(lambda); }
};

struct SubordinationResult {
    SampledFunction value;
    double tail_fraction;  // share of the output carried by the analytic end pieces
};

inline SubordinationResult fractional_laplacian_subordination(const TransformPlan& plan, const SampledFunction& f,
                                                              double s, SubordinationGrid tg = {}) {
    const SubordinationMultiplier sub(s, tg);
    const auto F = dunkl_transform(plan, f);
    auto smooth = [&sub](std::span<const double> xi) { return cplx(sub.smooth_part(detail::squared_norm(xi))); };
    auto value = apply_multiplier(plan, F, Multiplier{smooth, 2.0 * s});
    auto tail = [&sub](std::span<const double> xi) {
        return cplx(sub.tails(detail::squared_norm(xi)) * sub.inv_gamma);
    };
    const auto tail_part = apply_multiplier(plan, F, Multiplier{tail, 2.0 * s});
    const double denom = lp_norm(value, 2.0);
    return {std::move(value), denom > 0.0 ? lp_norm(tail_part, 2.0) / denom : 0.0};
}

// Least-squares slope of log|g| against log|x| on grid nodes of the positive first axis
// (other coordinates 0) with r_lo <= x <= r_hi.
inline double ray_slope(const SampledFunction& g, double r_lo, double r_hi, double noise_floor = 1e-13) {
    const auto& grid = g.grid();
    std::size_t base = 0;
    for (int a = 1; a < grid.d(); ++a) base += grid.center() * grid.stride(a);
    const double top = g.max_abs();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    for (int m = grid.center() + 1; m < grid.n(); ++m) {
        const double x = grid.node(m);
        if (x < r_lo || x > r_hi) continue;
        const double v = std::abs(g[base + m * grid.stride(0)]);
        if (!(v > noise_floor * top)) throw std::runtime_error("decay fit: values below the noise floor in fit range");
        const double lx = std::log(x), ly = std::log(v);
        sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly;
        ++cnt;
    }
    if (cnt < 2) throw std::invalid_argument("decay fit: fit range holds fewer than two nodes");
    return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
}

// Least-squares slope of log|(-Δ_k)^s f| against log|x| along the positive first axis.
inline double decay_slope(const TransformPlan& plan, const SampledFunction& f, double s, double r_lo, double r_hi) {
    const auto g = fractional_laplacian(plan, f, s);
    return ray_slope(g, r_lo, r_hi);
}

}  // namespace dunkl

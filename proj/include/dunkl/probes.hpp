#pragma once

// Numerical probes of the size, decay and support estimates: translation decay of
// band-limited functions, almost orthogonality, the support of ψ *_k φ, the size of the
// paraproduct kernel, and domination by the heat maximal function.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "paraproduct.hpp"

namespace dunkl {

// ---------------------------------------------------------------------------
// translation decay

struct TranslationSample {
    Point x, y, y2;  // y2 is the perturbed point for the Lipschitz part
};

struct TranslationDecayReport {
    double max_ratio = 0.0;            // part (i)
    double max_lipschitz_ratio = 0.0;  // part (ii)
    int used = 0, skipped = 0;         // samples below the noise floor are skipped
    std::vector<double> ratios;        // part (i), NaN for skipped samples
};

// F_k Φ must be supported in B(0, r); L is the decay order (L > 3 d_k). Φ may be given by
// its spectrum, which is then checked exactly; a space-domain Φ is transformed first and
// only needs to be band-limited up to the grid truncation.
inline TranslationDecayReport translation_decay_check(const TransformPlan& plan, const SampledFunction& Phi, double r,
                                                      double L, const std::vector<TranslationSample>& samples,
                                                      double noise_floor = 1e-11) {
    const auto& g = plan.grid();
    const auto& s = g.setup();
    const bool given_spectrum = Phi.domain() == Domain::frequency;
    auto F = given_spectrum ? Phi : dunkl_transform(plan, Phi);
    const double top = F.max_abs();
    const double slack = given_spectrum ? 0.0 : 1e-6;
    for (std::size_t i = 0; i < F.size(); ++i)
        if (g.radius(i) > r) {
            if (std::abs(F[i]) > slack * top)
                throw std::invalid_argument("translation_decay_check: Φ is not band-limited to B(0, r)");
            F[i] = 0.0;
        }
    const Point zero(g.d(), 0.0);
    const double floor = noise_floor * std::abs(translated_value(plan, F, zero, zero));
    TranslationDecayReport rep;
    for (const auto& smp : samples) {
        const cplx t = translated_value(plan, F, smp.x, smp.y);
        const double dg = orbit_distance(smp.x, smp.y);
        const double vol = ball_volume(s, smp.x, 1.0);
        const double decay = std::pow(1.0 + dg, 3.0 * L) * (1.0 + euclidean_distance(smp.x, smp.y));
        if (std::abs(t) < floor) {
            ++rep.skipped;
            rep.ratios.push_back(std::numeric_limits<double>::quiet_NaN());
            continue;
        }
        ++rep.used;
        const double ratio = std::abs(t) * vol * decay;
        rep.ratios.push_back(ratio);
        rep.max_ratio = std::max(rep.max_ratio, ratio);
        const double dy = euclidean_distance(smp.y, smp.y2);
        if (dy > 0.0 && dy <= 1.0) {
            const cplx t2 = translated_value(plan, F, smp.x, smp.y2);
            rep.max_lipschitz_ratio = std::max(rep.max_lipschitz_ratio, std::abs(t - t2) * vol * decay / dy);
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// almost orthogonality

struct AlmostOrthogonality {
    double lhs, rhs;
};


// lhs = ∫ dμ_k(u) / [(1+2^j d_G(x,u))(1+2^j d_G(y1,u))(1+2^j d_G(y2,u))]^{3L}
// rhs = μ_k(B(x, 2^{-j})) / [(1+2^j d_G(x,y1))(1+2^j d_G(x,y2))]^L
inline AlmostOrthogonality almost_orthogonality_check(const ReflectionSetup& s, std::span<const double> x,
                                                      std::span<const double> y1, std::span<const double> y2, int j,
                                                      double L, double tol = 1e-10) {
    const int d = s.d();
    if (static_cast<int>(x.size()) != d || static_cast<int>(y1.size()) != d || static_cast<int>(y2.size()) != d)
        throw std::invalid_argument("almost_orthogonality_check: dimension mismatch");
    const double sc = std::ldexp(1.0, j);
    // the integrand only sees |u_i|: integrate over the positive orthant and multiply by 2^d
    Point u(d);
    std::function<double(int)> nested = [&](int axis) -> double {
        std::vector<double> br{std::abs(x[axis]), std::abs(y1[axis]), std::abs(y2[axis])};
        auto f = [&](double t) {
            u[axis] = t;
            const double w = s.k(axis) == 0.0 ? 1.0 : std::pow(std::sqrt(2.0) * t, 2.0 * s.k(axis));
            if (axis + 1 < d) return w * nested(axis + 1);
            const double a = 1.0 + sc * orbit_distance(x, u), b = 1.0 + sc * orbit_distance(y1, u),
                         c = 1.0 + sc * orbit_distance(y2, u);
            return w * std::pow(a * b * c, -3.0 * L);
        };
        return half_line_integral(f, br, tol);
    };
    const double lhs = std::ldexp(s.c_k() * nested(0), d);
    if (!std::isfinite(lhs)) throw std::runtime_error("almost_orthogonality_check: quadrature did not converge");
    const double rhs = ball_volume(s, x, 1.0 / sc) /
                       std::pow((1.0 + sc * orbit_distance(x, y1)) * (1.0 + sc * orbit_distance(x, y2)), L);
    return {lhs, rhs};
}

// ---------------------------------------------------------------------------
// support of ψ *_k φ

struct SupportReport {
    double leakage;      // max |ψ*φ| outside the annulus / max inside
    double inside_max, outside_max;
    double annulus_lo, annulus_hi;
    bool pass;
};

struct SupportCheckOptions {
    int points_per_transition = 24;
    double tolerance = 1e-6;
};

namespace detail {

inline double min_transition(const SpectralWindow& w) {
    const double sc = std::ldexp(1.0, w.j);
    double t = std::numeric_limits<double>::infinity();
    if (w.plateau_lo > w.support_lo) t = std::min(t, (w.plateau_lo - w.support_lo) * sc);
    if (w.support_hi > w.plateau_hi) t = std::min(t, (w.support_hi - w.plateau_hi) * sc);
    return t;
}

// even-part weights of the corrected rule on [0, n_half·h]: node 0 once, others doubled
inline std::vector<double> folded_weights(int n_half, double h, double k, const CorrectionOptions& corr) {
    const int n = 2 * n_half + 1;
    auto w = singular_trapezoid_weights(n, n_half * h, 2.0 * k, corr);
    std::vector<double> out(n_half + 1);
    const double c = ReflectionSetup::axis_mass(k);
    for (int m = 0; m <= n_half; ++m) out[m] = (m == 0 ? 1.0 : 2.0) * w[n_half + m] * std::pow(2.0, k) / c;
    return out;
}

}  // namespace detail

// ψ *_k φ for radial ψ, φ, with ξ playing the role of the space variable. Radial
// functions transform by the Hankel-type integral against j_{d_k/2-1} with weight
// r^{d_k-1}, which for d = 1 is the even part of the one-dimensional transform; any d
// reduces to that case with k replaced by (d_k - 1)/2. The dual range and sampling are
// chosen from the windows' transition widths rather than from a plan grid, which is far
// too coarse for them.
inline SupportReport support_check_convolution(const ReflectionSetup& s, const SpectralWindow& psi,
                                               const SpectralWindow& phi, SupportCheckOptions opt = {}) {
    if (psi.j != phi.j) throw std::invalid_argument("support_check_convolution: windows must share the scale j");
    const double sc = std::ldexp(1.0, psi.j);
    if (psi.scaled_lo() < 0.5 * sc * (1 - 1e-12) || psi.scaled_hi() > 2.0 * sc * (1 + 1e-12))
        throw std::invalid_argument("support_check_convolution: supp ψ must lie in 2^{j-1} <= |ξ| <= 2^{j+1}");
    if (phi.scaled_hi() > sc / 8.0 * (1 + 1e-12))
        throw std::invalid_argument("support_check_convolution: supp φ must lie in |ξ| <= 2^{j-3}");
    const double k = (s.d_k() - 1.0) / 2.0;
    const double tau = std::min(detail::min_transition(psi), detail::min_transition(phi));
    const double V = 8.0 * sc;
    const double hv = tau / opt.points_per_transition;
    const double X = std::numbers::pi / (2.0 * hv);
    const double hx = 0.6 * std::numbers::pi / (1.2 * (V + 2.2 * sc));
    const int nv = static_cast<int>(std::ceil(V / hv)), nx = static_cast<int>(std::ceil(X / hx));
    const CorrectionOptions corr{};
    const auto wv = detail::folded_weights(nv, hv, k, corr);
    const auto wx = detail::folded_weights(nx, hx, k, corr);
    const BesselOrder ord(k - 0.5);

    std::vector<double> a(nv + 1), b(nv + 1);
    for (int m = 0; m <= nv; ++m) {
        a[m] = psi(m * hv) * wv[m];
        b[m] = phi(m * hv) * wv[m];
    }
    // forward: ψ̂(x) φ̂(x) on the dual half-grid
    std::vector<double> prod(nx + 1);
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int l = 0; l <= nx; ++l) {
        double fa = 0.0, fb = 0.0;
        const double x = l * hx;
        for (int m = 0; m <= nv; ++m) {
            if (a[m] == 0.0 && b[m] == 0.0) continue;
            const double e = normalized_bessel(ord, x * m * hv);
            fa += a[m] * e;
            fb += b[m] * e;
        }
        prod[l] = fa * fb * wx[l];
    }
    // inverse back onto the window variable
    SupportReport rep{0.0, 0.0, 0.0, sc / 4.0, 4.0 * sc, false};
    std::vector<double> conv(nv + 1);
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int m = 0; m <= nv; ++m) {
        double acc = 0.0;
        for (int l = 0; l <= nx; ++l) acc += prod[l] * normalized_bessel(ord, m * hv * l * hx);
        conv[m] = acc;
    }
    for (int m = 0; m <= nv; ++m) {
        const double v = m * hv;
        const bool inside = v >= rep.annulus_lo && v <= rep.annulus_hi;
        double& slot = inside ? rep.inside_max : rep.outside_max;
        slot = std::max(slot, std::abs(conv[m]));
    }
    rep.leakage = rep.inside_max > 0.0 ? rep.outside_max / rep.inside_max : INFINITY;
    rep.pass = rep.leakage < opt.tolerance;
    return rep;
}

// ---------------------------------------------------------------------------
// paraproduct kernel

struct KernelProbeOptions {
    std::size_t max_grid_size = 1025;
    double epsilon = 1.0;
};

// K(x, y1, y2) = Σ_j ∫ τ_{-u}Θ_j(x) τ_uΨ_j(-y1) τ_uΦ_j(-y2) dμ_k(u), u over the grid.
inline cplx paraproduct_kernel_probe(const TransformPlan& plan, const ParaproductSpec& spec, std::span<const double> x,
                                     std::span<const double> y1, std::span<const double> y2,
                                     KernelProbeOptions opt = {}) {
    const auto& g = plan.grid();
    const auto& s = g.setup();
    if (g.size() > opt.max_grid_size) throw std::length_error("paraproduct_kernel_probe: grid too large for the probe");
    if (orbit_distance(x, y1) + orbit_distance(x, y2) < 1e-8)
        throw std::invalid_argument("paraproduct_kernel_probe: point lies on the singular set");
    // E(±i p, ξ) on the grid for a fixed point p
    auto kernel_row = [&](std::span<const double> p, double sign) {
        std::vector<cplx> e(g.size());
        Point xi(g.d()), sp(p.begin(), p.end());
        for (auto& v : sp) v *= sign;
        for (std::size_t i = 0; i < g.size(); ++i) {
            g.coords(i, xi);
            e[i] = dunkl_kernel(s, sp, xi);
        }
        return e;
    };
    const auto ex = kernel_row(x, 1.0), ey1 = kernel_row(y1, -1.0), ey2 = kernel_row(y2, -1.0);
    cplx K = 0.0;
    for (int j = spec.j_min; j <= spec.j_max; ++j) {
        const auto wt = multiplier_weights(g, window_multiplier(spec.theta.at_scale(j)));
        const auto wp = multiplier_weights(g, window_multiplier(spec.psi.at_scale(j)));
        const auto wf = multiplier_weights(g, window_multiplier(spec.phi.at_scale(j)));
        std::vector<cplx> vt(g.size()), vp(g.size()), vf(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            vt[i] = ex[i] * wt[i];
            vp[i] = ey1[i] * wp[i];
            vf[i] = ey2[i] * wf[i];
        }
        // τ_{-u}Θ_j(x) carries E(-iu, ξ): forward kernel; the other two carry E(iu, ξ)
        const auto tt = plan.apply(std::move(vt), false);
        const auto tp = plan.apply(std::move(vp), true);
        const auto tf = plan.apply(std::move(vf), true);
        for (std::size_t i = 0; i < g.size(); ++i) K += g.weights()[i] * tt[i] * tp[i] * tf[i];
    }
    return K;
}

// |K| · [μ(B(x,d_G(x,y1))) + μ(B(x,d_G(x,y2)))]² · [(|x-y1|+|x-y2|)/(d_G(x,y1)+d_G(x,y2))]^ε
inline double kernel_size_ratio(const ReflectionSetup& s, cplx K, std::span<const double> x,
                                std::span<const double> y1, std::span<const double> y2, double epsilon = 1.0) {
    const double d1 = orbit_distance(x, y1), d2 = orbit_distance(x, y2);
    const double v = (d1 > 0 ? ball_volume(s, x, d1) : 0.0) + (d2 > 0 ? ball_volume(s, x, d2) : 0.0);
    const double e = euclidean_distance(x, y1) + euclidean_distance(x, y2);
    return std::abs(K) * v * v * std::pow(e / (d1 + d2), epsilon);
}

// ---------------------------------------------------------------------------
// maximal domination

struct MaximalReport {
    double constant;      // max over nodes of sup_j |Θ̃_j * h| / M̃h
    int points;           // nodes where M̃h is above the floor
};

// Dyadic heat maximal function sup_{t = 2^i, i in [i_min, i_max]} e^{tΔ_k}|h|.
inline SampledFunction heat_maximal(const TransformPlan& plan, const SampledFunction& h, int i_min = -10,
                                    int i_max = 10) {
    SampledFunction absh = h;
    for (auto& v : absh.values()) v = std::abs(v);
    const auto F = dunkl_transform(plan, absh);
    SampledFunction best(plan.grid_ptr(), Domain::space);
    for (int i = i_min; i <= i_max; ++i) {
        const auto u = apply_multiplier(plan, F, heat_multiplier(std::ldexp(1.0, i)));
        for (std::size_t n = 0; n < u.size(); ++n) best[n] = std::max(best[n].real(), u[n].real());
    }
    return best;
}

inline MaximalReport maximal_domination_check(const TransformPlan& plan, const SpectralWindow& theta_tilde,
                                              const SampledFunction& h, int j_min, int j_max,
                                              double floor = 1e-8) {
    const auto F = dunkl_transform(plan, h);
    std::vector<double> sup(h.size(), 0.0);
    for (int j = j_min; j <= j_max; ++j) {
        const auto u = apply_multiplier(plan, F, window_multiplier(theta_tilde.at_scale(j)));
        for (std::size_t n = 0; n < u.size(); ++n) sup[n] = std::max(sup[n], std::abs(u[n]));
    }
    const auto M = heat_maximal(plan, h);
    const double top = M.max_abs();
    MaximalReport rep{0.0, 0};
    for (std::size_t n = 0; n < h.size(); ++n) {
        if (M[n].real() <= floor * top) continue;
        ++rep.points;
        rep.constant = std::max(rep.constant, sup[n] / M[n].real());
    }
    return rep;
}

// Slope of log|F_k^{-1}(window_j)| along the first axis over [r_lo, r_hi].
inline double window_kernel_slope(const TransformPlan& plan, const SpectralWindow& w, double r_lo, double r_hi) {
    SampledFunction one(plan.grid_ptr(), Domain::frequency);
    for (auto& v : one.values()) v = 1.0;
    return ray_slope(apply_multiplier(plan, one, window_multiplier(w)), r_lo, r_hi);
}

}  // namespace dunkl

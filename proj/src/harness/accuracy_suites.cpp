// Suites that compare against exact identities or independent oracles.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/ooura_fourier_integrals.hpp>

#include "common.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/paraproduct.hpp"
#include "dunkl/probes.hpp"
#include "suites_impl.hpp"

namespace dunkl::harness::detail {

namespace {

double sq(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double max_diff(const SampledFunction& a, const SampledFunction& b) {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

// max |a - b| over nodes with every |x_i| <= r, relative to max |b| there
double interior_rel_error(const SampledFunction& a, const SampledFunction& b, double r) {
    const auto& g = a.grid();
    Point x(g.d());
    double err = 0.0, top = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        g.coords(i, x);
        if (std::any_of(x.begin(), x.end(), [r](double v) { return std::abs(v) > r; })) continue;
        err = std::max(err, std::abs(a[i] - b[i]));
        top = std::max(top, std::abs(b[i]));
    }
    return top > 0.0 ? err / top : err;
}

}  // namespace

void suite_plancherel(const SuiteConfig& c, SuiteReport& r) {
    const auto L = base_level(c);
    double worst = 0.0;
    for (const auto& id : c.sweep.families) {
        if (id == "zero") continue;
        const auto f = test_function(id, *L.plan);
        if (!fits_grid(*L.plan, f)) {
            r.note("family " + id + " does not fit the grid; skipped");
            continue;
        }
        const double a = lp_norm(dunkl_transform(*L.plan, f), 2.0), b = lp_norm(f, 2.0);
        const double defect = std::abs(a - b) / b;
        r.metrics["defect/" + id] = defect;
        r.samples.push_back({id, NAN, "2", "2", "2", a, b, a / b});
        worst = std::max(worst, defect);
    }
    r.metrics["max_defect"] = worst;
    r.check(worst < 1e-6, "plancherel defect " + fmt(worst) + " >= 1e-6");
}

void suite_inversion(const SuiteConfig& c, SuiteReport& r) {
    const auto L = base_level(c);
    double worst = 0.0;
    for (const auto& id : c.sweep.families) {
        if (id == "zero") continue;
        const auto f = test_function(id, *L.plan);
        if (!fits_grid(*L.plan, f)) {
            r.note("family " + id + " does not fit the grid; skipped");
            continue;
        }
        const auto back = dunkl_inverse(*L.plan, dunkl_transform(*L.plan, f));
        const double err = max_diff(back, f) / f.max_abs();
        r.metrics["roundtrip/" + id] = err;
        worst = std::max(worst, err);
    }
    r.metrics["max_roundtrip"] = worst;
    r.check(worst < 1e-6, "inversion defect " + fmt(worst) + " >= 1e-6");
}

void suite_kernel_bound(const SuiteConfig& c, SuiteReport& r) {
    const ReflectionSetup s(c.k), s0 = ReflectionSetup::uniform(c.d(), 0.0);
    SampleRng rng(c.seed, "kernel-bound");
    double worst = 0.0, classical = 0.0;
    Point x(c.d()), y(c.d());
    for (int i = 0; i < 10000; ++i) {
        double dot = 0.0;
        for (int a = 0; a < c.d(); ++a) {
            x[a] = rng.uniform(-c.x_max, c.x_max);
            y[a] = rng.uniform(-c.x_max, c.x_max);
            dot += x[a] * y[a];
        }
        worst = std::max(worst, std::abs(dunkl_kernel(s, x, y)));
        classical = std::max(classical, std::abs(dunkl_kernel(s0, x, y) - std::polar(1.0, dot)));
    }
    r.metrics["max_abs_kernel"] = worst;
    r.metrics["classical_kernel_error"] = classical;
    r.check(worst <= 1.0 + 1e-10, "|E_k(ix, y)| = " + fmt(worst) + " exceeds 1 + 1e-10");
    r.check(classical <= 1e-12, "k = 0 kernel differs from e^{ixy} by " + fmt(classical));

    // T_a E_k(i·, y) = i y_a E_k(i·, y), by finite differences at two spacings
    auto residual = [&](int n) {
        const auto g = make_grid(s, n, c.x_max);
        double worst_res = 0.0;
        for (double base : {0.7, -1.3, 2.0}) {
            Point yv(c.d());
            for (int a = 0; a < c.d(); ++a) yv[a] = a % 2 == 0 ? base : -0.5 * base;
            const auto f = SampledFunction::sample(g, [&](auto xs) { return dunkl_kernel(s, xs, yv); });
            for (int a = 0; a < c.d(); ++a) {
                const auto expect = cplx(0.0, yv[a]) * f;
                worst_res = std::max(worst_res, interior_rel_error(dunkl_derivative(f, a), expect, 0.5 * c.x_max));
            }
        }
        return worst_res;
    };
    const double r1 = residual(c.n), r2 = residual(refined_n(c.n));
    const double order = std::log2(r1 / r2);
    r.metrics["eigen_residual"] = r1;
    r.metrics["eigen_residual@refined"] = r2;
    r.metrics["eigen_order"] = order;
    r.check(order >= 1.8, "eigen-equation residual is not O(h^2): observed order " + fmt(order));
}

void suite_dunkl_derivative(const SuiteConfig& c, SuiteReport& r) {
    const ReflectionSetup s(c.k);
    // T_a e^{-|x|²} = -2 x_a e^{-|x|²};  T_a (x_1 e^{-|x|²}) = (δ_{a1}(1 + 2k_1) - 2 x_a x_1) e^{-|x|²}
    auto errors = [&](int n) {
        const auto g = make_grid(s, n, c.x_max);
        const auto gauss = SampledFunction::sample(g, [](auto x) { return std::exp(-sq(x)); });
        const auto xg = SampledFunction::sample(g, [](auto x) { return x[0] * std::exp(-sq(x)); });
        double e1 = 0.0, e2 = 0.0;
        for (int a = 0; a < c.d(); ++a) {
            const auto t_gauss = SampledFunction::sample(g, [a](auto x) { return -2.0 * x[a] * std::exp(-sq(x)); });
            const auto t_xg = SampledFunction::sample(g, [a, &s](auto x) {
                return ((a == 0 ? 1.0 + 2.0 * s.k(0) : 0.0) - 2.0 * x[a] * x[0]) * std::exp(-sq(x));
            });
            e1 = std::max(e1, interior_rel_error(dunkl_derivative(gauss, a), t_gauss, 0.5 * c.x_max));
            e1 = std::max(e1, interior_rel_error(dunkl_derivative(xg, a), t_xg, 0.5 * c.x_max));
        }
        // Δ_k by differences against the multiplier -|ξ|²
        const TransformPlan plan(g, PlanOptions{false});
        const auto spectral = spectral_apply(plan, gauss, Multiplier{nullptr, 2.0});
        e2 = interior_rel_error(dunkl_laplacian_fd(gauss), (-1.0) * spectral, 0.5 * c.x_max);
        return std::pair{e1, e2};
    };
    const auto [d1, l1] = errors(c.n);
    const auto [d2, l2] = errors(refined_n(c.n));
    r.metrics["derivative_error"] = d1;
    r.metrics["derivative_error@refined"] = d2;
    r.metrics["laplacian_error"] = l1;
    r.metrics["laplacian_error@refined"] = l2;
    const double o1 = std::log2(d1 / d2), o2 = std::log2(l1 / l2);
    r.metrics["derivative_order"] = o1;
    r.metrics["laplacian_order"] = o2;
    r.check(o1 >= 3.5, "Dunkl derivative is not fourth order: observed " + fmt(o1));
    r.check(o2 >= 3.5, "difference Laplacian is not fourth order: observed " + fmt(o2));
}

void suite_heat(const SuiteConfig& c, SuiteReport& r) {
    const ReflectionSetup s(c.k);
    const auto L = base_level(c);
    SampleRng rng(c.seed, "heat");
    const double times[] = {0.01, 0.1, 1.0, 10.0};
    double mass_err = 0.0;
    for (double t : times)
        for (int i = 0; i < 10; ++i) {
            Point x(c.d(), 0.0);
            if (i > 0)
                for (auto& v : x) v = rng.uniform(-5.0, 5.0);
            mass_err = std::max(mass_err, std::abs(heat_mass(s, t, x) - 1.0));
        }
    r.metrics["mass_error"] = mass_err;
    r.check(mass_err < 1e-6, "heat kernel mass differs from 1 by " + fmt(mass_err));

    // spectral kernel against the closed form; e^{-tξ²} must have decayed by the last frequency
    // node, and its width 1/√(2t) must span four frequency spacings
    const double xi_max = L.grid().x_max(), h = L.grid().spacing();
    std::vector<double> resolved;
    for (double t : times) {
        if (t * xi_max * xi_max >= 32.0 && 32.0 * t * h * h <= 1.0) resolved.push_back(t);
        else r.note("t = " + fmt(t) + " is not resolved by the grid; left out of the bivariate check");
    }
    if (resolved.empty()) {
        r.check(false, "no heat time is resolved by the grid");
        return;
    }
    double worst = 0.0;
    int used = 0;
    for (int i = 0; i < 100; ++i) {
        const double t = resolved[i % resolved.size()];
        Point x(c.d()), y(c.d());
        for (int a = 0; a < c.d(); ++a) x[a] = rng.uniform(-3.0, 3.0), y[a] = rng.uniform(-3.0, 3.0);
        const double spectral = heat_kernel_bivariate(*L.plan, t, x, y);
        const double exact = heat_kernel_closed_form(s, t, x, y);
        const double scale = std::max(std::abs(exact), 1e-3 * heat_kernel_closed_form(s, t, x, x));
        const double err = std::abs(spectral - exact) / scale;
        r.samples.push_back({"t=" + fmt(t) + "#" + std::to_string(i), NAN, "", "", "", spectral, exact, err});
        worst = std::max(worst, err);
        ++used;
    }
    r.metrics["bivariate_error"] = worst;
    r.metrics["bivariate_samples"] = used;
    r.check(worst < 1e-6, "spectral heat kernel differs from the closed form by " + fmt(worst));
}

void suite_decay_slope(const SuiteConfig& c, SuiteReport& r) {
    const auto L = base_level(c);
    const double dk = c.d_k();
    const auto f = test_function("gauss-1", *L.plan);
    const double lo = c.x_max / 4.0, hi = 0.8 * c.x_max;
    std::map<double, double> slopes;
    for (double s : c.sweep.s) {
        const double slope = decay_slope(*L.plan, f, s, lo, hi);
        const double expect = -(dk + 2.0 * s);
        slopes[s] = slope;
        r.metrics["slope/s=" + fmt(s)] = slope;
        r.samples.push_back({"slope", s, "", "", "", slope, expect, slope / expect});
        r.check(std::abs(slope / expect - 1.0) <= 0.10,
                "decay slope " + fmt(slope) + " at s = " + fmt(s) + " is not within 10% of " + fmt(expect));
    }
    if (slopes.count(0.25) && slopes.count(0.75)) {
        const double diff = slopes[0.75] - slopes[0.25];
        r.metrics["slope_difference"] = diff;
        r.check(std::abs(diff + 1.0) <= 0.15, "slope(3/4) - slope(1/4) = " + fmt(diff) + ", expected -1 +- 0.15");
    }
}

namespace {

// (-Δ)^s e^{-x²} for k = 0, d = 1: (1/√π) ∫_0^∞ ξ^{2s} e^{-ξ²/4} cos(xξ) dξ
double classical_fractional_gaussian(double s, double x) {
    if (x == 0.0) return std::pow(2.0, 2.0 * s) * std::tgamma(s + 0.5) / std::sqrt(std::numbers::pi);
    static thread_local boost::math::quadrature::ooura_fourier_cos<double> cosine;
    auto f = [s](double xi) { return std::pow(xi, 2.0 * s) * std::exp(-xi * xi / 4.0); };
    return cosine.integrate(f, std::abs(x)).first / std::sqrt(std::numbers::pi);
}

}  // namespace

void suite_subordination(const SuiteConfig& c, SuiteReport& r) {
    const auto L = base_level(c);
    const auto f = test_function("gauss-1", *L.plan);
    std::vector<double> orders{0.5};
    for (double s : c.sweep.s)
        if (s > 0.0 && s < 1.0 && s != 0.5) orders.push_back(s);
    double worst = 0.0, tail = 0.0;
    for (double s : orders) {
        const auto spectral = fractional_laplacian(*L.plan, f, s);
        const auto sub = fractional_laplacian_subordination(*L.plan, f, s);
        const double err = max_diff(spectral, sub.value) / spectral.max_abs();
        r.metrics["subordination_error/s=" + fmt(s)] = err;
        r.metrics["tail_fraction/s=" + fmt(s)] = sub.tail_fraction;
        worst = std::max(worst, err);
        tail = std::max(tail, sub.tail_fraction);
    }
    r.note("subordination end pieces [0, t_min] and [t_max, inf) are added in closed form");
    r.metrics["subordination_error"] = worst;
    r.metrics["tail_fraction"] = tail;
    r.check(worst < 1e-4, "spectral and subordination fractional Laplacians differ by " + fmt(worst));

    const auto one = fractional_laplacian(*L.plan, f, 1.0);
    const auto fd = (-1.0) * dunkl_laplacian_fd(f);
    const double fd_err = max_diff(one, fd) / one.max_abs();
    r.metrics["fd_error"] = fd_err;
    r.check(fd_err < 1e-3, "s = 1 differs from the difference Laplacian by " + fmt(fd_err));

    if (c.d() == 1 && c.k[0] == 0.0) {
        double cl = 0.0;
        for (double s : orders) {
            const auto spectral = fractional_laplacian(*L.plan, f, s);
            double err = 0.0;
            for (int m = 0; m < L.grid().n(); ++m)
                err = std::max(err, std::abs(spectral[m] - classical_fractional_gaussian(s, L.grid().node(m))));
            cl = std::max(cl, err / spectral.max_abs());
        }
        r.metrics["classical_error"] = cl;
        r.check(cl < 1e-6, "k = 0 fractional Laplacian differs from the classical integral by " + fmt(cl));
    }
}

void suite_decomposition(const SuiteConfig& c, SuiteReport& r) {
    const auto L = base_level(c);
    const std::pair<const char*, const char*> pairs[] = {{"gauss-1", "gauss-1"}, {"gauss-0.5", "gauss-2"}, {"gauss-2", "gauss-2"}};
    for (const auto& [a, b] : pairs) {
        const auto f = test_function(a, *L.plan), g = test_function(b, *L.plan);
        const std::string id = std::string(a) + "*" + b;
        double prev = INFINITY;
        for (int J = std::min(6, c.sweep.J); J <= c.sweep.J; ++J) {
            Decomposition dec;
            try {
                dec = decompose_product(*L.plan, f, g, {J});
            } catch (const std::runtime_error& e) {
                r.check(false, id + " at J = " + std::to_string(J) + ": " + e.what());
                break;
            }
            r.metrics["residual/" + id + "/J=" + std::to_string(J)] = dec.residual_rel;
            if (J > std::min(6, c.sweep.J))
                r.check(dec.residual_rel < prev, id + ": residual does not strictly decrease from J = " +
                                                     std::to_string(J - 1) + " to J = " + std::to_string(J) + " (" +
                                                     fmt(prev) + " -> " + fmt(dec.residual_rel) + ")");
            prev = dec.residual_rel;
            if (J == c.sweep.J) {
                r.metrics["low_mass/" + id] = dec.low_mass;
                r.samples.push_back({id, NAN, "", "", "", dec.residual.max_abs(), (f * g).max_abs(), dec.residual_rel});
                r.check(dec.residual_rel < 1e-3,
                        id + ": relative residual " + fmt(dec.residual_rel) + " at J = " + std::to_string(J));
            }
        }
    }
}

void suite_support_lemma(const SuiteConfig& c, SuiteReport& r) {
    const ReflectionSetup s(c.k);
    const double dk = s.d_k();
    double inside0 = 0.0, covariance = 0.0;
    std::vector<std::pair<int, double>> inside;
    for (int j : {-1, 0, 1}) {
        const auto psi = lp_partition().at_scale(j);
        const auto phi = SpectralWindow::ball(1.0 / 16, 1.0 / 8).at_scale(j);
        const auto rep = support_check_convolution(s, psi, phi);
        r.metrics["leakage/j=" + std::to_string(j)] = rep.leakage;
        r.samples.push_back({"j=" + std::to_string(j), NAN, "", "", "", rep.outside_max, rep.inside_max, rep.leakage});
        r.check(rep.pass, "leakage " + fmt(rep.leakage) + " at j = " + std::to_string(j));
        if (j == 0) inside0 = rep.inside_max;
        inside.emplace_back(j, rep.inside_max);
    }
    // ψ_j *_k φ_j = 2^{j d_k} (ψ *_k φ)(·/2^j)
    for (const auto& [j, v] : inside) covariance = std::max(covariance, std::abs(v / std::pow(2.0, j * dk) / inside0 - 1.0));
    r.metrics["scale_covariance"] = covariance;
    r.check(covariance < 1e-8, "convolution peak does not scale like 2^{j d_k}: " + fmt(covariance));
}

}  // namespace dunkl::harness::detail

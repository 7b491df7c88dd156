#pragma once

// Dunkl paraproducts Π[θ, ψ, φ](f, g) = Σ_j Θ_j *((Ψ_j * f)(Φ_j * g)) and the
// three-term decomposition of a product.

#include <cmath>
#include <stdexcept>

#include "operators.hpp"
#include "windows.hpp"

namespace dunkl {

struct ParaproductSpec {
    SpectralWindow theta, psi, phi;
    int j_min = -12, j_max = 12;

    // at least two of the three supports avoid the origin
    bool hypothesis_met() const {
        return (!theta.contains_origin()) + (!psi.contains_origin()) + (!phi.contains_origin()) >= 2;
    }
};

// Multiplier for a window at its scale. Powers of |ξ| go to the quadrature only when the
// window reaches the origin; otherwise they are an ordinary smooth factor.
inline Multiplier window_multiplier(const SpectralWindow& w) {
    const double scale = std::ldexp(1.0, w.j);
    if (w.contains_origin() && w.power != 0.0) {
        const double amp = std::pow(scale, -w.power);
        return {[w, scale, amp](std::span<const double> xi) {
                    return cplx(amp * w.bump(std::sqrt(detail::squared_norm(xi)) / scale));
                },
                w.power};
    }
    return {[w](std::span<const double> xi) { return cplx(w(std::sqrt(detail::squared_norm(xi)))); }, 0.0};
}

// Paraproduct from the spectra F = F_k f, G = F_k g.
inline SampledFunction paraproduct_spectral(const TransformPlan& plan, const ParaproductSpec& spec,
                                            const SampledFunction& F, const SampledFunction& G) {
    if (spec.j_min > spec.j_max) throw std::invalid_argument("paraproduct: empty scale range");
    SampledFunction acc(plan.grid_ptr(), Domain::space);
    for (int j = spec.j_min; j <= spec.j_max; ++j) {
        const auto a = apply_multiplier(plan, F, window_multiplier(spec.psi.at_scale(j)));
        const auto b = apply_multiplier(plan, G, window_multiplier(spec.phi.at_scale(j)));
        auto prod = a * b;
        acc = acc + apply_multiplier(plan, dunkl_transform(plan, prod), window_multiplier(spec.theta.at_scale(j)));
    }
    return acc;
}

inline SampledFunction paraproduct(const TransformPlan& plan, const ParaproductSpec& spec, const SampledFunction& f,
                                   const SampledFunction& g) {
    return paraproduct_spectral(plan, spec, dunkl_transform(plan, f), dunkl_transform(plan, g));
}

struct Decomposition {
    SampledFunction pi[3];
    SampledFunction residual;
    double residual_rel;  // ‖residual‖_∞ / ‖fg‖_∞
    double low_mass;      // share of ‖fg‖₂² below |ξ| = 2^{-J+2}
};

struct DecompositionOptions {
    int J = 12;
    double low_mass_tol = 0.25;
};

inline Decomposition decompose_product(const TransformPlan& plan, const SampledFunction& f, const SampledFunction& g,
                                       DecompositionOptions opt = {}) {
    const auto w = decomposition_windows();
    const auto F = dunkl_transform(plan, f), G = dunkl_transform(plan, g);
    const auto fg = f * g;
    // spectral mass of fg near 0: |F(fg)(0)|² μ_k(B(0, ρ)) against ‖fg‖₂²
    const auto& grid = plan.grid();
    const auto P = dunkl_transform(plan, fg);
    std::size_t origin = 0;
    for (int a = 0; a < grid.d(); ++a) origin += grid.center() * grid.stride(a);
    const Point zero(grid.d(), 0.0);
    const double total = std::pow(lp_norm(fg, 2.0), 2);
    const double low = std::norm(P[origin]) * ball_volume(grid.setup(), zero, std::ldexp(1.0, -opt.J + 2));
    Decomposition out;
    out.low_mass = total > 0.0 ? low / total : 0.0;
    if (out.low_mass > opt.low_mass_tol)
        throw std::runtime_error("decompose_product: spectral mass below the dyadic cutoff exceeds tolerance");
    SampledFunction sum(plan.grid_ptr(), Domain::space);
    for (int i = 0; i < 3; ++i) {
        out.pi[i] = paraproduct_spectral(plan, {w.theta[i], w.psi[i], w.phi[i], -opt.J, opt.J}, F, G);
        sum = sum + out.pi[i];
    }
    out.residual = fg - sum;
    const double top = fg.max_abs();
    out.residual_rel = top > 0.0 ? out.residual.max_abs() / top : 0.0;
    return out;
}

}  // namespace dunkl

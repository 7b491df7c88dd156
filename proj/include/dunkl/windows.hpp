#pragma once

// Smooth radial frequency windows built from the exp(-1/t) mollifier, the
// Littlewood–Paley partition, and the window families of the product decomposition.

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace dunkl {

// 0 for t <= 0, 1 for t >= 1, C^∞ in between
inline double smooth_step(double t) {
    if (t <= 0.0) return 0.0;
    if (t >= 1.0) return 1.0;
    const double a = std::exp(-1.0 / t), b = std::exp(-1.0 / (1.0 - t));
    return a / (a + b);
}

// Radial window: 0 below support_lo, rises to 1 on [support_lo, plateau_lo], flat up to
// plateau_hi, falls to 0 at support_hi. Optionally multiplied by |ξ|^power. Evaluated
// at dyadic scale j as profile(|ξ| / 2^j).
struct SpectralWindow {
    std::string type = "annulus";
    double support_lo = 0.0, plateau_lo = 0.0, plateau_hi = 1.0, support_hi = 2.0;
    double power = 0.0;
    int j = 0;

    static SpectralWindow ball(double plateau_hi, double support_hi) {
        return {"ball", 0.0, 0.0, plateau_hi, support_hi, 0.0, 0};
    }
    static SpectralWindow annulus(double slo, double plo, double phi, double shi) {
        return {"annulus", slo, plo, phi, shi, 0.0, 0};
    }

    void validate() const {
        if (!(0.0 <= support_lo && support_lo <= plateau_lo && plateau_lo <= plateau_hi && plateau_hi <= support_hi &&
              support_hi > 0.0))
            throw std::invalid_argument("SpectralWindow: need 0 <= support_lo <= plateau_lo <= plateau_hi <= support_hi");
    }

    bool contains_origin() const { return support_lo == 0.0; }
    // |ξ|^power is only singular at 0, and only matters if the window does not vanish there
    bool smooth() const {
        const double half = power / 2.0;
        return !contains_origin() || (power >= 0.0 && std::abs(half - std::round(half)) < 1e-14);
    }

    SpectralWindow at_scale(int scale) const {
        SpectralWindow w = *this;
        w.j = scale;
        return w;
    }

    // the window without its power factor, at scale 0
    double bump(double r) const {
        double rise = 1.0;
        if (r < support_lo) return 0.0;
        if (plateau_lo > support_lo) rise = smooth_step((r - support_lo) / (plateau_lo - support_lo));
        if (r > support_hi) return 0.0;
        double fall = 1.0;
        if (support_hi > plateau_hi) fall = 1.0 - smooth_step((r - plateau_hi) / (support_hi - plateau_hi));
        else if (r > plateau_hi) fall = 0.0;
        return rise * fall;
    }
    double profile(double r) const {
        const double b = bump(r);
        if (b == 0.0 || power == 0.0) return b;
        return b * std::pow(r, power);
    }
    double operator()(double r) const { return profile(r / std::ldexp(1.0, j)); }

    // support at the current scale
    double scaled_lo() const { return std::ldexp(support_lo, j); }
    double scaled_hi() const { return std::ldexp(support_hi, j); }
};

inline void to_json(nlohmann::json& out, const SpectralWindow& w) {
    out = {{"type", w.type},           {"support_lo", w.support_lo}, {"support_hi", w.support_hi},
           {"plateau_lo", w.plateau_lo}, {"plateau_hi", w.plateau_hi}, {"mollifier", "exp-inverse"},
           {"power", w.power},         {"j", w.j}};
}

inline void from_json(const nlohmann::json& in, SpectralWindow& w) {
    if (in.value("mollifier", std::string("exp-inverse")) != "exp-inverse")
        throw std::invalid_argument("SpectralWindow: unsupported mollifier");
    w.type = in.value("type", std::string("annulus"));
    w.support_lo = in.at("support_lo").get<double>();
    w.support_hi = in.at("support_hi").get<double>();
    w.plateau_lo = in.at("plateau_lo").get<double>();
    w.plateau_hi = in.at("plateau_hi").get<double>();
    w.power = in.value("power", 0.0);
    w.j = in.value("j", 0);
    w.validate();
}

// η: 1 on |ξ| <= 1, 0 for |ξ| >= 2
inline SpectralWindow lp_cutoff() { return SpectralWindow::ball(1.0, 2.0); }

// ψ(ξ) = η(ξ) - η(2ξ); written as one plateau window with a single plateau point at 1
inline SpectralWindow lp_partition() { return SpectralWindow::annulus(0.5, 1.0, 1.0, 2.0); }

// max over r in [2^{-J+1}, 2^{J-1}] of |Σ_{|j|<=J} ψ(r/2^j) - 1|
inline double partition_defect(const SpectralWindow& psi, int J, int samples = 4000) {
    double worst = 0.0;
    for (int i = 0; i <= samples; ++i) {
        const double r = std::ldexp(1.0, -J + 1) * std::pow(2.0, (2.0 * J - 2.0) * i / samples);
        double s = 0.0;
        for (int j = -J; j <= J; ++j) s += psi.at_scale(j)(r);
        worst = std::max(worst, std::abs(s - 1.0));
    }
    return worst;
}

// The three window triples (θ, ψ, φ) of the product decomposition fg = Π1 + Π2 + Π3.
// A tilde family (from window_transfer) additionally records which argument of the
// paraproduct receives (-Δ_k)^s.
struct DecompositionWindows {
    std::array<SpectralWindow, 3> theta, psi, phi;
    std::array<int, 3> fractional_slot{-1, -1, -1};  // 0: first argument, 1: second, -1: plain family
};

inline DecompositionWindows decomposition_windows() {
    const SpectralWindow psi = lp_partition();
    // Σ_{|i|<=4} ψ_i telescopes to η(ξ/2^4) - η(2^5 ξ)
    const SpectralWindow middle = SpectralWindow::annulus(1.0 / 32, 1.0 / 16, 16.0, 32.0);
    // Σ_{i<=-5} ψ_i telescopes to η(2^5 ξ)
    const SpectralWindow low = SpectralWindow::ball(1.0 / 32, 1.0 / 16);
    const SpectralWindow theta1 = SpectralWindow::ball(64.0, 128.0);
    const SpectralWindow theta2 = SpectralWindow::annulus(1.0 / 8, 1.0 / 4, 4.0, 8.0);
    DecompositionWindows w;
    w.theta = {theta1, theta2, theta2};
    w.psi = {psi, psi, low};
    w.phi = {middle, low, psi};
    return w;
}

inline DecompositionWindows window_transfer(double s, const DecompositionWindows& w) {
    if (!(s > 0.0)) throw std::domain_error("window_transfer: s must be positive");
    DecompositionWindows t = w;
    for (int i = 0; i < 3; ++i) t.theta[i].power += 2.0 * s;
    // Π1, Π2: the fractional power moves onto f; Π3: onto g
    t.psi[0].power -= 2.0 * s;
    t.psi[1].power -= 2.0 * s;
    t.phi[2].power -= 2.0 * s;
    t.fractional_slot = {0, 0, 1};
    return t;
}

}  // namespace dunkl

#pragma once

// Gamma, normalized Bessel functions and the rank-one Dunkl kernel.

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>

#include <boost/math/special_functions/bessel.hpp>

namespace dunkl {

using cplx = std::complex<double>;

// Lanczos approximation, g = 7, nine terms. Reflection below 1/2.
inline double gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma: argument must be positive");
    static constexpr double coef[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) return std::numbers::pi / (std::sin(std::numbers::pi * x) * gamma(1.0 - x));
    const double z = x - 1.0;
    double a = coef[0];
    const double t = z + 7.5;
    for (int i = 1; i < 9; ++i) a += coef[i] / (z + i);
    // split the power so large arguments do not overflow early
    const double p = std::pow(t, 0.5 * (z + 0.5));
    return std::sqrt(2.0 * std::numbers::pi) * p * (p * std::exp(-t)) * a;
}

struct BesselOrder {
    double alpha;
    explicit BesselOrder(double a) : alpha(a) {
        if (!(a > -1.0)) throw std::domain_error("BesselOrder: order must exceed -1");
    }
};

namespace detail {

// Γ(α+1) Σ s^n (u/2)^{2n} / (n! Γ(n+α+1)), s = -1 for j_α(u), +1 for j_α(iu).
inline double normalized_series(double alpha, double u, double sign) {
    const double q = sign * 0.25 * u * u;
    double term = 1.0, sum = 1.0;
    for (int n = 1; n < 200; ++n) {
        term *= q / (n * (n + alpha));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

constexpr double series_cutoff = 2.0;

}  // namespace detail

// j_α(u) = Γ(α+1)(2/u)^α J_α(u), even in u, j_α(0) = 1.
inline double normalized_bessel(BesselOrder order, double u) {
    const double a = order.alpha;
    u = std::abs(u);
    if (a == -0.5) return std::cos(u);
    if (a == 0.5) return u == 0.0 ? 1.0 : std::sin(u) / u;
    if (u <= detail::series_cutoff) return detail::normalized_series(a, u, -1.0);
    return gamma(a + 1.0) * std::pow(2.0 / u, a) * boost::math::cyl_bessel_j(a, u);
}

// e^{-|u|} j_α(iu): the modified function, scaled so it stays finite.
inline double normalized_bessel_i_scaled(BesselOrder order, double u) {
    const double a = order.alpha;
    u = std::abs(u);
    if (a == -0.5) return 0.5 * (1.0 + std::exp(-2.0 * u));
    if (a == 0.5) return u == 0.0 ? 1.0 : -std::expm1(-2.0 * u) / (2.0 * u);
    if (u <= detail::series_cutoff) return std::exp(-u) * detail::normalized_series(a, u, 1.0);
    const double pre = gamma(a + 1.0) * std::pow(2.0 / u, a);
    if (u < 600.0) return pre * boost::math::cyl_bessel_i(a, u) * std::exp(-u);
    // large-argument expansion of e^{-u} I_α(u)
    const double mu = 4.0 * a * a;
    double term = 1.0, sum = 1.0;
    for (int m = 1; m < 30; ++m) {
        term *= -(mu - (2.0 * m - 1) * (2.0 * m - 1)) / (8.0 * m * u);
        sum += term;
        if (std::abs(term) < 1e-17) break;
    }
    return pre * sum / std::sqrt(2.0 * std::numbers::pi * u);
}

// E_k(ix, y) for the rank-one group Z_2.
inline cplx dunkl_kernel_1d(double k, double x, double y) {
    if (k < 0.0) throw std::domain_error("dunkl_kernel_1d: negative multiplicity");
    const double u = x * y;
    if (k == 0.0) return {std::cos(u), std::sin(u)};
    const double even = normalized_bessel(BesselOrder(k - 0.5), u);
    const double odd = u / (2.0 * k + 1.0) * normalized_bessel(BesselOrder(k + 0.5), u);
    return {even, odd};
}

// e^{-|xy|} E_k(x, y) for real arguments (the kernel that appears in the heat kernel).
inline double dunkl_kernel_real_1d_scaled(double k, double x, double y) {
    if (k < 0.0) throw std::domain_error("dunkl_kernel_real_1d_scaled: negative multiplicity");
    const double u = x * y;
    if (k == 0.0) return u >= 0.0 ? 1.0 : std::exp(2.0 * u);
    return normalized_bessel_i_scaled(BesselOrder(k - 0.5), u) +
           u / (2.0 * k + 1.0) * normalized_bessel_i_scaled(BesselOrder(k + 0.5), u);
}

// Hurwitz zeta ζ(σ, a) for a > 0, σ ≠ 1, by Euler–Maclaurin after N direct terms.
inline double hurwitz_zeta(double sigma, double a) {
    if (!(a > 0.0)) throw std::domain_error("hurwitz_zeta: a must be positive");
    constexpr int N = 12;
    static constexpr double b2j[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
                                     7.0 / 6, -3617.0 / 510};
    double sum = 0.0;
    for (int p = 0; p < N; ++p) sum += std::pow(p + a, -sigma);
    const double z = N + a;
    sum += std::pow(z, 1.0 - sigma) / (sigma - 1.0) + 0.5 * std::pow(z, -sigma);
    // rising factorial σ(σ+1)...(σ+2j-2) / (2j)!
    double fac = sigma, zp = std::pow(z, -sigma - 1.0), fact = 2.0;
    for (int j = 1; j <= 8; ++j) {
        sum += b2j[j - 1] / fact * fac * zp;
        fac *= (sigma + 2 * j - 1) * (sigma + 2 * j);
        zp /= z * z;
        fact *= (2.0 * j + 1) * (2.0 * j + 2);
    }
    return sum;
}

}  // namespace dunkl

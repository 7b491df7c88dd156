#pragma once

// Z_2^d reflection geometry: roots ±√2 e_i, weight, measure, orbit distance, volumes.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "special.hpp"

namespace dunkl {

using Point = std::vector<double>;

class ReflectionSetup {
public:
    explicit ReflectionSetup(std::vector<double> k) : k_(std::move(k)) {
        if (k_.empty()) throw std::invalid_argument("ReflectionSetup: dimension must be positive");
        double inv = 1.0;
        for (double ki : k_) {
            if (!(ki >= 0.0)) throw std::invalid_argument("ReflectionSetup: multiplicities must be nonnegative");
            gamma_k_ += 2.0 * ki;
            inv *= axis_mass(ki);
        }
        c_k_ = 1.0 / inv;
    }
    static ReflectionSetup uniform(int d, double k) { return ReflectionSetup(std::vector<double>(d, k)); }

    // μ_{k⊗k} on R^{2d}: the product setup used for bilinear estimates.
    static ReflectionSetup product_setup(const ReflectionSetup& s) {
        std::vector<double> k = s.k_;
        k.insert(k.end(), s.k_.begin(), s.k_.end());
        return ReflectionSetup(std::move(k));
    }

    int d() const { return static_cast<int>(k_.size()); }
    double k(int i) const { return k_.at(i); }
    const std::vector<double>& k() const { return k_; }
    double gamma_k() const { return gamma_k_; }
    double d_k() const { return d() + gamma_k_; }
    double c_k() const { return c_k_; }
    // normalization of the one-dimensional factor on axis i
    double axis_c(int i) const { return 1.0 / axis_mass(k_.at(i)); }

    bool operator==(const ReflectionSetup& o) const { return k_ == o.k_; }

    // ∫ e^{-t²/2} |√2 t|^{2k} dt
    static double axis_mass(double k) { return std::pow(2.0, 2.0 * k + 0.5) * gamma(k + 0.5); }

private:
    std::vector<double> k_;
    double gamma_k_ = 0.0;
    double c_k_ = 1.0;
};

namespace detail {
inline void check_dim(const ReflectionSetup& s, std::span<const double> x) {
    if (static_cast<int>(x.size()) != s.d()) throw std::invalid_argument("point dimension does not match setup");
}
}  // namespace detail

inline Point reflect(std::span<const double> x, int i) {
    if (i < 0 || i >= static_cast<int>(x.size())) throw std::out_of_range("reflect: coordinate index out of range");
    Point y(x.begin(), x.end());
    y[i] = -y[i];
    return y;
}

inline double orbit_distance(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("orbit_distance: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double t = std::abs(x[i]) - std::abs(y[i]);
        s += t * t;
    }
    return std::sqrt(s);
}

inline double euclidean_distance(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
    return std::sqrt(s);
}

inline double weight(const ReflectionSetup& s, std::span<const double> x) {
    detail::check_dim(s, x);
    double w = 1.0;
    for (int i = 0; i < s.d(); ++i)
        if (s.k(i) != 0.0) w *= std::pow(std::sqrt(2.0) * std::abs(x[i]), 2.0 * s.k(i));
    return w;
}

enum class VolumeMode { exact, comparable };

namespace detail {

// antiderivative of |√2 t|^{2k}
inline double weight_primitive(double k, double t) {
    const double e = 2.0 * k + 1.0;
    return std::pow(2.0, k) * std::copysign(std::pow(std::abs(t), e), t) / e;
}

inline boost::math::quadrature::tanh_sinh<double>& volume_integrator() {
    thread_local boost::math::quadrature::tanh_sinh<double> q;
    return q;
}

// unnormalized ∫ Π|√2 t_i|^{2k_i} over the ball of radius r about x, axes i..d-1;
// with positive_only the ball is intersected with the positive orthant.
inline double ball_mass(const ReflectionSetup& s, std::span<const double> x, double r, int i, bool positive_only) {
    const double k = s.k(i);
    double lo = x[i] - r;
    const double hi = x[i] + r;
    if (positive_only) lo = std::max(lo, 0.0);
    if (hi <= lo) return 0.0;
    if (i == s.d() - 1) return weight_primitive(k, hi) - weight_primitive(k, lo);
    auto slice = [&](double t) {
        const double rho2 = r * r - (t - x[i]) * (t - x[i]);
        if (rho2 <= 0.0) return 0.0;
        const double w = k == 0.0 ? 1.0 : std::pow(std::sqrt(2.0) * std::abs(t), 2.0 * k);
        return w * ball_mass(s, x, std::sqrt(rho2), i + 1, positive_only);
    };
    auto& q = volume_integrator();
    constexpr double tol = 1e-9;
    if (lo < 0.0 && hi > 0.0) return q.integrate(slice, lo, 0.0, tol) + q.integrate(slice, 0.0, hi, tol);
    return q.integrate(slice, lo, hi, tol);
}

}  // namespace detail

inline double ball_volume(const ReflectionSetup& s, std::span<const double> x, double r,
                          VolumeMode mode = VolumeMode::exact) {
    detail::check_dim(s, x);
    if (!(r > 0.0)) throw std::domain_error("ball_volume: radius must be positive");
    if (mode == VolumeMode::comparable) {
        double v = std::pow(r, s.d());
        for (int i = 0; i < s.d(); ++i) v *= std::pow(std::sqrt(2.0) * std::abs(x[i]) + r, 2.0 * s.k(i));
        return v;
    }
    return s.c_k() * detail::ball_mass(s, x, r, 0, false);
}

// μ_k of the union of all sign-flipped copies of B(x, r). The union meets the
// positive orthant in B(|x|, r) ∩ R_+^d and μ_k is G-invariant.
inline double orbit_ball_volume(const ReflectionSetup& s, std::span<const double> x, double r) {
    detail::check_dim(s, x);
    if (!(r > 0.0)) throw std::domain_error("orbit_ball_volume: radius must be positive");
    Point a(x.size());
    std::transform(x.begin(), x.end(), a.begin(), [](double t) { return std::abs(t); });
    return std::ldexp(s.c_k() * detail::ball_mass(s, a, r, 0, true), s.d());
}

// c (r1/r2)^{d_k} <= μ(B(x,r1)) / μ(B(x,r2)) <= C (r1/r2)^d
inline bool doubling_check(const ReflectionSetup& s, std::span<const double> x, double r1, double r2,
                           double c = 1.0, double C = 1.0) {
    if (!(r1 > 0.0) || !(r1 <= r2)) throw std::domain_error("doubling_check: need 0 < r1 <= r2");
    const double q = r1 / r2;
    const double ratio = ball_volume(s, x, r1) / ball_volume(s, x, r2);
    constexpr double slack = 1e-9;
    return ratio >= c * std::pow(q, s.d_k()) * (1 - slack) && ratio <= C * std::pow(q, s.d()) * (1 + slack);
}

}  // namespace dunkl

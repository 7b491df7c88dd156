#pragma once

// Uniform symmetric tensor grid carrying the quadrature for μ_k, and sampled functions on it.

#include <cmath>
#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include "geometry.hpp"
#include "quadrature.hpp"

namespace dunkl {

class Grid {
public:
    Grid(ReflectionSetup setup, int n, double x_max, CorrectionOptions corr = {})
        : setup_(std::move(setup)), n_(n), x_max_(x_max), corr_(corr) {
        if (n < 3 || n % 2 == 0) throw std::invalid_argument("Grid: n must be odd and at least 3");
        if (!(x_max > 0.0)) throw std::invalid_argument("Grid: x_max must be positive");
        h_ = 2.0 * x_max / (n - 1);
        nodes_.resize(n);
        for (int m = 0; m < n; ++m) nodes_[m] = (m - center()) * h_;
        for (int i = 0; i < d(); ++i) axis_w_.push_back(axis_weights(i, 0.0));
        size_ = 1;
        for (int i = 0; i < d(); ++i) size_ *= static_cast<std::size_t>(n);
        w_.assign(size_, 1.0);
        for (std::size_t f = 0; f < size_; ++f) {
            std::size_t r = f;
            for (int i = d() - 1; i >= 0; --i) {
                w_[f] *= axis_w_[i][r % n_];
                r /= n_;
            }
        }
    }

    const ReflectionSetup& setup() const { return setup_; }
    int d() const { return setup_.d(); }
    int n() const { return n_; }
    double x_max() const { return x_max_; }
    double spacing() const { return h_; }
    int center() const { return (n_ - 1) / 2; }
    std::size_t size() const { return size_; }
    const CorrectionOptions& correction() const { return corr_; }

    const std::vector<double>& nodes() const { return nodes_; }
    double node(int m) const { return nodes_[m]; }

    // one-dimensional factor of the μ_k weights on an axis
    const std::vector<double>& axis_weights(int axis) const { return axis_w_.at(axis); }

    // weights for ∫ g(t) |t|^{extra} dμ_{k_axis}(t), exact-kink treatment of the combined power
    std::vector<double> axis_weights(int axis, double extra_power) const {
        const double k = setup_.k(axis);
        auto w = singular_trapezoid_weights(n_, x_max_, 2.0 * k + extra_power, corr_);
        const double c = setup_.axis_c(axis) * std::pow(2.0, k);
        for (double& v : w) v *= c;
        return w;
    }

    const std::vector<double>& weights() const { return w_; }

    std::size_t stride(int axis) const {
        std::size_t s = 1;
        for (int i = d() - 1; i > axis; --i) s *= static_cast<std::size_t>(n_);
        return s;
    }
    int axis_index(std::size_t flat, int axis) const { return static_cast<int>((flat / stride(axis)) % n_); }

    void coords(std::size_t flat, std::span<double> out) const {
        for (int i = d() - 1; i >= 0; --i) {
            out[i] = nodes_[flat % n_];
            flat /= n_;
        }
    }
    Point point(std::size_t flat) const {
        Point p(d());
        coords(flat, p);
        return p;
    }
    double radius(std::size_t flat) const {
        double s = 0.0;
        for (int i = d() - 1; i >= 0; --i) {
            const double t = nodes_[flat % n_];
            s += t * t;
            flat /= n_;
        }
        return std::sqrt(s);
    }
    // flat index of σ_axis applied to the node
    std::size_t reflect_index(std::size_t flat, int axis) const {
        const std::size_t st = stride(axis);
        const int m = axis_index(flat, axis);
        return flat + (static_cast<std::ptrdiff_t>(n_ - 1 - m) - m) * static_cast<std::ptrdiff_t>(st);
    }

    bool same_as(const Grid& o) const {
        return this == &o || (setup_ == o.setup_ && n_ == o.n_ && x_max_ == o.x_max_ &&
                              corr_.half_width == o.corr_.half_width && corr_.band == o.corr_.band);
    }

private:
    ReflectionSetup setup_;
    int n_;
    double x_max_;
    CorrectionOptions corr_;
    double h_ = 0.0;
    std::size_t size_ = 0;
    std::vector<double> nodes_;
    std::vector<std::vector<double>> axis_w_;
    std::vector<double> w_;
};

using GridPtr = std::shared_ptr<const Grid>;

inline GridPtr make_grid(ReflectionSetup setup, int n, double x_max, CorrectionOptions corr = {}) {
    return std::make_shared<const Grid>(std::move(setup), n, x_max, corr);
}

enum class Domain { space, frequency };

inline const char* to_string(Domain d) { return d == Domain::space ? "space" : "frequency"; }

// Complex samples on a grid. Treated as a value: operations return new objects.
class SampledFunction {
public:
    SampledFunction() = default;
    SampledFunction(GridPtr g, Domain dom = Domain::space)
        : grid_(std::move(g)), values_(grid_->size()), domain_(dom) {}
    SampledFunction(GridPtr g, std::vector<cplx> v, Domain dom = Domain::space)
        : grid_(std::move(g)), values_(std::move(v)), domain_(dom) {
        if (values_.size() != grid_->size()) throw std::invalid_argument("SampledFunction: size does not match grid");
    }

    template <class F>
    static SampledFunction sample(GridPtr g, F&& fn, Domain dom = Domain::space) {
        SampledFunction out(g, dom);
        Point p(g->d());
        for (std::size_t i = 0; i < g->size(); ++i) {
            g->coords(i, p);
            out.values_[i] = cplx(fn(std::span<const double>(p)));
        }
        return out;
    }

    const GridPtr& grid_ptr() const { return grid_; }
    const Grid& grid() const { return *grid_; }
    Domain domain() const { return domain_; }
    std::size_t size() const { return values_.size(); }
    const std::vector<cplx>& values() const { return values_; }
    std::vector<cplx>& values() { return values_; }
    const cplx& operator[](std::size_t i) const { return values_[i]; }
    cplx& operator[](std::size_t i) { return values_[i]; }

    SampledFunction with_values(std::vector<cplx> v, Domain dom) const { return {grid_, std::move(v), dom}; }

    double max_abs() const {
        double m = 0.0;
        for (const auto& v : values_) m = std::max(m, std::abs(v));
        return m;
    }

    friend SampledFunction operator+(const SampledFunction& a, const SampledFunction& b) {
        a.require_compatible(b);
        auto v = a.values_;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.values_[i];
        return a.with_values(std::move(v), a.domain_);
    }
    friend SampledFunction operator-(const SampledFunction& a, const SampledFunction& b) {
        a.require_compatible(b);
        auto v = a.values_;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= b.values_[i];
        return a.with_values(std::move(v), a.domain_);
    }
    friend SampledFunction operator*(cplx c, const SampledFunction& a) {
        auto v = a.values_;
        for (auto& x : v) x *= c;
        return a.with_values(std::move(v), a.domain_);
    }
    // pointwise product
    friend SampledFunction operator*(const SampledFunction& a, const SampledFunction& b) {
        a.require_compatible(b);
        auto v = a.values_;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] *= b.values_[i];
        return a.with_values(std::move(v), a.domain_);
    }

    void require_compatible(const SampledFunction& b) const {
        if (!grid_ || !b.grid_ || !grid_->same_as(*b.grid_))
            throw std::invalid_argument("SampledFunction: grid mismatch");
        if (domain_ != b.domain_) throw std::invalid_argument("SampledFunction: domain mismatch");
    }

private:
    GridPtr grid_;
    std::vector<cplx> values_;
    Domain domain_ = Domain::space;
};

}  // namespace dunkl

// k = 0, d = 1: every operation against an FFT implementation of classical Fourier analysis.

#include <cmath>

#include <gtest/gtest.h>

#include "dunkl/dunkl.hpp"
#include "support/fft_oracle.hpp"

using namespace dunkl;

namespace {

constexpr int n = 1025;
constexpr double x_max = 20.0;

class Classical : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        grid = make_grid(ReflectionSetup({0.0}), n, x_max);
        plan = new TransformPlan(grid);
    }
    static void TearDownTestSuite() { delete plan; }

    static SampledFunction sample(double (*f)(double)) {
        return SampledFunction::sample(grid, [f](auto x) { return f(x[0]); });
    }
    static std::vector<cplx> values(const SampledFunction& f) { return f.values(); }
    static std::vector<double> real(const SampledFunction& f) {
        std::vector<double> out(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].real();
        return out;
    }
    template <class A, class B>
    static double rel_diff(const A& a, const B& b) {
        double err = 0.0, top = 0.0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            err = std::max(err, std::abs(a[i] - b[i]));
            top = std::max(top, std::abs(b[i]));
        }
        return err / top;
    }

    static inline GridPtr grid;
    static inline TransformPlan* plan = nullptr;
};

double gauss(double x) { return std::exp(-x * x / 2.0); }
double narrow(double x) { return std::exp(-x * x); }
double odd(double x) { return x * std::exp(-x * x); }
double poly(double x) { return (1.0 + x * x) * std::exp(-x * x); }

}  // namespace

TEST_F(Classical, Transform) {
    const oracle::GridFourier ref(n, grid->spacing());
    for (auto fn : {gauss, narrow, odd, poly}) {
        const auto f = sample(fn);
        EXPECT_LT(rel_diff(dunkl_transform(*plan, f).values(), ref.forward(values(f))), 1e-6);
        const auto F = dunkl_transform(*plan, f);
        EXPECT_LT(rel_diff(dunkl_inverse(*plan, F).values(), ref.inverse(F.values())), 1e-6);
    }
}

TEST_F(Classical, Heat) {
    const oracle::PaddedFourier ref(n, grid->spacing());
    for (auto fn : {gauss, odd, poly})
        for (double t : {0.01, 0.1, 1.0}) EXPECT_LT(rel_diff(real(heat_apply(*plan, sample(fn), t)), ref.heat(real(sample(fn)), t)), 1e-6);
}

TEST_F(Classical, FractionalLaplacian) {
    const oracle::PaddedFourier ref(n, grid->spacing());
    for (auto fn : {gauss, narrow, odd})
        for (double s : {0.25, 0.5, 0.75, 1.0})
            EXPECT_LT(rel_diff(real(fractional_laplacian(*plan, sample(fn), s)), ref.fractional_laplacian(real(sample(fn)), s)),
                      1e-6)
                << s;
}

TEST_F(Classical, LpNorm) {
    for (auto fn : {gauss, odd})
        for (double p : {4.0 / 3.0, 2.0, 4.0})
            EXPECT_NEAR(lp_norm(sample(fn), p), oracle::lp_norm(real(sample(fn)), grid->spacing(), p), 1e-12);
}

TEST_F(Classical, Paraproducts) {
    const oracle::GridFourier ref(n, grid->spacing());
    const auto w = decomposition_windows();
    const auto f = sample(gauss), g = sample(odd);
    for (int i = 0; i < 3; ++i) {
        const auto mine = paraproduct(*plan, {w.theta[i], w.psi[i], w.phi[i], -6, 6}, f, g);
        const auto theirs = ref.paraproduct(w.theta[i], w.psi[i], w.phi[i], -6, 6, values(f), values(g));
        EXPECT_LT(rel_diff(mine.values(), theirs), 1e-6) << i;
    }
}

TEST_F(Classical, Decomposition) {
    const oracle::GridFourier ref(n, grid->spacing());
    const auto w = decomposition_windows();
    const auto f = sample(gauss), g = sample(narrow);
    const auto dec = decompose_product(*plan, f, g);
    std::vector<cplx> sum(n, 0.0);
    for (int i = 0; i < 3; ++i) {
        const auto theirs = ref.paraproduct(w.theta[i], w.psi[i], w.phi[i], -12, 12, values(f), values(g));
        EXPECT_LT(rel_diff(dec.pi[i].values(), theirs), 1e-6) << i;
        for (int m = 0; m < n; ++m) sum[m] += theirs[m];
    }
    // residual against the oracle's own decomposition
    double top = 0.0, res = 0.0;
    for (int m = 0; m < n; ++m) {
        const cplx fg = f[m] * g[m];
        top = std::max(top, std::abs(fg));
        res = std::max(res, std::abs(fg - sum[m]));
    }
    EXPECT_NEAR(dec.residual_rel, res / top, 1e-6);
}

TEST(ClassicalKernel, ProbeMatchesLatticeSum) {
    // probe scale: windows the grid resolves; triples on grid nodes
    const int nk = 129;
    const double xk = 8.0;
    const auto g = make_grid(ReflectionSetup({0.0}), nk, xk);
    const TransformPlan plan(g);
    const oracle::GridFourier ref(nk, g->spacing());
    const ParaproductSpec spec{SpectralWindow::annulus(0.25, 0.5, 2.0, 4.0), lp_partition(),
                               SpectralWindow::ball(0.25, 0.5), -1, 1};
    const int c = g->center();
    const int triples[][3] = {{c + 8, c - 16, c + 24}, {c, c + 5, c - 40}, {c - 30, c + 30, c}, {c + 3, c + 3, c - 2}};
    for (const auto& t : triples) {
        const cplx K = paraproduct_kernel_probe(plan, spec, Point{g->node(t[0])}, Point{g->node(t[1])},
                                                Point{g->node(t[2])});
        const cplx R = ref.paraproduct_kernel(spec.theta, spec.psi, spec.phi, -1, 1, t[0], t[1], t[2]);
        EXPECT_LT(std::abs(K - R), 1e-6 * std::max(std::abs(R), 1e-3)) << t[0] << " " << t[1] << " " << t[2];
    }
}

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "dunkl/dunkl.hpp"

using namespace dunkl;

namespace {

SampledFunction ball_spectrum(const GridPtr& g, const SpectralWindow& w) {
    return SampledFunction::sample(g, [&](auto xi) { return w(std::abs(xi[0])); }, Domain::frequency);
}

std::vector<TranslationSample> random_pairs(int count, unsigned seed) {
    std::mt19937_64 gen(seed);
    std::uniform_real_distribution<double> u(-6.0, 6.0), step(-1.0, 1.0);
    std::vector<TranslationSample> out;
    for (int i = 0; i < count; ++i) {
        const double y = u(gen);
        out.push_back({Point{u(gen)}, Point{y}, Point{y + step(gen)}});
    }
    return out;
}

}  // namespace

TEST(TranslationDecay, OriginRatioIsValueTimesVolume) {
    const auto g = make_grid(ReflectionSetup({1.0}), 513, 20.0);
    const TransformPlan plan(g);
    const auto F = ball_spectrum(g, SpectralWindow::ball(0.5, 1.0));
    const Point zero{0.0};
    const auto rep = translation_decay_check(plan, F, 1.0, 7.0, {{zero, zero, zero}});
    const double phi0 = std::abs(dunkl_inverse(plan, F)[g->center()]);
    ASSERT_EQ(rep.used, 1);
    EXPECT_NEAR(rep.max_ratio, phi0 * ball_volume(g->setup(), zero, 1.0), 1e-12 * rep.max_ratio);
    // y' = y: nothing to difference
    EXPECT_EQ(rep.max_lipschitz_ratio, 0.0);
}

TEST(TranslationDecay, RejectsSpectrumOutsideTheBall) {
    const auto g = make_grid(ReflectionSetup({1.0}), 257, 20.0);
    const TransformPlan plan(g);
    const auto F = ball_spectrum(g, SpectralWindow::ball(1.0, 2.0));
    EXPECT_THROW(translation_decay_check(plan, F, 1.0, 7.0, {}), std::invalid_argument);
}

TEST(TranslationDecay, StableUnderRefinement) {
    const auto samples = random_pairs(100, 11);
    auto run = [&](int n) {
        const auto g = make_grid(ReflectionSetup({1.0}), n, 20.0);
        const TransformPlan plan(g);
        return translation_decay_check(plan, ball_spectrum(g, SpectralWindow::ball(0.5, 1.0)), 1.0, 7.0, samples);
    };
    const auto a = run(513), b = run(1025);
    ASSERT_GT(a.used, 50);
    EXPECT_TRUE(std::isfinite(a.max_ratio));
    EXPECT_LT(std::max(a.max_ratio, b.max_ratio) / std::min(a.max_ratio, b.max_ratio), 2.0);
    EXPECT_LT(std::max(a.max_lipschitz_ratio, b.max_lipschitz_ratio) /
                  std::min(a.max_lipschitz_ratio, b.max_lipschitz_ratio),
              2.0);
}

TEST(AlmostOrthogonality, CoincidentPointsReduceToBallVolume) {
    const ReflectionSetup s({1.0});
    for (double x : {0.0, 1.0, -3.5}) {
        const Point p{x};
        const auto r = almost_orthogonality_check(s, p, p, p, 0, 7.0);
        EXPECT_DOUBLE_EQ(r.rhs, ball_volume(s, p, 1.0));
        EXPECT_GT(r.lhs, 0.0);
        EXPECT_LT(r.lhs / r.rhs, 10.0);
    }
}

TEST(AlmostOrthogonality, ReflectedSecondPoint) {
    const ReflectionSetup s({1.0});
    const Point x{1.0}, y1{4.0}, y2{-4.0};
    EXPECT_DOUBLE_EQ(orbit_distance(x, y2), 3.0);
    const auto r = almost_orthogonality_check(s, x, y1, y2, 0, 7.0);
    EXPECT_TRUE(std::isfinite(r.lhs / r.rhs));
    EXPECT_NEAR(r.rhs, ball_volume(s, x, 1.0) / std::pow(16.0, 7.0), 1e-12 * r.rhs);
}

TEST(AlmostOrthogonality, BoundedAcrossScales) {
    const ReflectionSetup s({1.0});
    const Point x{1.0}, y1{1.5}, y2{-0.5};
    double lo = INFINITY, hi = 0.0;
    for (int j = -2; j <= 4; ++j) {
        const auto r = almost_orthogonality_check(s, x, y1, y2, j, 7.0);
        lo = std::min(lo, r.lhs / r.rhs);
        hi = std::max(hi, r.lhs / r.rhs);
    }
    EXPECT_GT(lo, 0.0);
    EXPECT_TRUE(std::isfinite(hi));
    EXPECT_THROW(almost_orthogonality_check(s, Point{1.0, 2.0}, y1, y2, 0, 7.0), std::invalid_argument);
}

TEST(SupportLemma, LeakageAtThreeScales) {
    for (const auto& s : {ReflectionSetup({0.0}), ReflectionSetup({1.0}), ReflectionSetup({1.0, 0.5})})
        for (int j : {-1, 0, 1}) {
            const auto rep = support_check_convolution(s, lp_partition().at_scale(j),
                                                       SpectralWindow::ball(1.0 / 16, 1.0 / 8).at_scale(j));
            EXPECT_LT(rep.leakage, 1e-6) << s.d() << " " << j;
            EXPECT_TRUE(rep.pass);
            EXPECT_DOUBLE_EQ(rep.annulus_lo, std::ldexp(0.25, j));
            EXPECT_DOUBLE_EQ(rep.annulus_hi, std::ldexp(4.0, j));
        }
}

TEST(SupportLemma, RejectsWindowsOutsideTheHypothesis) {
    const ReflectionSetup s({1.0});
    EXPECT_THROW(support_check_convolution(s, lp_partition(), SpectralWindow::ball(0.25, 0.5)), std::invalid_argument);
    EXPECT_THROW(support_check_convolution(s, lp_cutoff(), SpectralWindow::ball(1.0 / 16, 1.0 / 8)),
                 std::invalid_argument);
    EXPECT_THROW(support_check_convolution(s, lp_partition().at_scale(1), SpectralWindow::ball(1.0 / 16, 1.0 / 8)),
                 std::invalid_argument);
}

TEST(KernelProbe, Preconditions) {
    const auto g = make_grid(ReflectionSetup({1.0}), 129, 8.0);
    const TransformPlan plan(g);
    const ParaproductSpec spec{SpectralWindow::annulus(0.25, 0.5, 2.0, 4.0), lp_partition(),
                               SpectralWindow::ball(0.25, 0.5), 0, 0};
    const Point x{1.0}, y{-1.0}, z{2.0};
    EXPECT_THROW(paraproduct_kernel_probe(plan, spec, x, x, x), std::invalid_argument);
    // -1 lies in the orbit of 1
    EXPECT_THROW(paraproduct_kernel_probe(plan, spec, x, y, y), std::invalid_argument);
    EXPECT_THROW(paraproduct_kernel_probe(plan, spec, x, z, y, {100, 1.0}), std::length_error);
    const cplx K = paraproduct_kernel_probe(plan, spec, x, z, y);
    EXPECT_TRUE(std::isfinite(std::abs(K)));
    const double ratio = kernel_size_ratio(g->setup(), K, x, z, y);
    EXPECT_TRUE(std::isfinite(ratio));
    // ε-factor: |x-y1| + |x-y2| = 3 against d_G sum 1
    EXPECT_NEAR(ratio, kernel_size_ratio(g->setup(), K, x, z, y, 0.0) * 3.0, 1e-12 * ratio);
}

TEST(MaximalDomination, HeatMaximalDominatesEveryMember) {
    const auto g = make_grid(ReflectionSetup({1.0}), 513, 20.0);
    const TransformPlan plan(g);
    const auto h = SampledFunction::sample(g, [](auto x) { return std::exp(-x[0] * x[0] / 2.0); });
    const auto M = heat_maximal(plan, h, -4, 4);
    for (int i = -4; i <= 4; ++i) {
        const auto u = heat_apply(plan, h, std::ldexp(1.0, i));
        for (std::size_t n = 0; n < h.size(); ++n) EXPECT_GE(M[n].real(), u[n].real());
    }
}

TEST(MaximalDomination, TransferredWindowConstantIsFiniteAndStable) {
    const auto tt = window_transfer(0.5, decomposition_windows()).theta[0];
    auto run = [&](int n) {
        const auto g = make_grid(ReflectionSetup({1.0}), n, 20.0);
        const TransformPlan plan(g);
        const auto h = SampledFunction::sample(g, [](auto x) { return x[0] * std::exp(-x[0] * x[0]); });
        return maximal_domination_check(plan, tt, h, -6, 2);
    };
    const auto a = run(513), b = run(1025);
    EXPECT_GT(a.points, 0);
    EXPECT_TRUE(std::isfinite(a.constant));
    EXPECT_LT(std::max(a.constant, b.constant) / std::min(a.constant, b.constant), 2.0);
}

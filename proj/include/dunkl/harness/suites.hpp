#pragma once

// Suite registry and the empirical-constant sweeps.

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "../transform.hpp"
#include "config.hpp"
#include "report.hpp"

namespace dunkl::harness {

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// throws ConfigError for an unknown suite or an invalid config
SuiteReport run_suite(const SuiteConfig& config, const std::string& name);

SuiteReport kato_ponce_sweep(const SuiteConfig& config);
SuiteReport kato_ponce_split_sweep(const SuiteConfig& config);
SuiteReport paraproduct_bound_sweep(const SuiteConfig& config);

// Test-function family. Bumps are F_k^{-1} of fixed radial profiles; everything else
// is given in closed form. Bump the version whenever a member changes.
inline constexpr int family_version = 1;
const std::vector<std::string>& family_ids();
SampledFunction test_function(const std::string& id, const TransformPlan& plan);
// f and its spectrum have both decayed by the edge of the grid (edge/max <= 1e-6). The grid
// doubles as the frequency grid, so spectra are cut off at x_max, not at the Nyquist frequency.
bool fits_grid(const TransformPlan& plan, const SampledFunction& f);

// ordered pairs of family members, in sweep order
std::vector<std::pair<std::string, std::string>> family_pairs(const SuiteConfig& config);

// Shared plan for (k, n, x_max); plans are expensive and suites reuse them.
std::shared_ptr<const TransformPlan> shared_plan(const std::vector<double>& k, int n, double x_max);

// grid with the spacing halved
inline int refined_n(int n) { return 2 * (n - 1) + 1; }

// Seeded sample generator; the stream depends only on the seed and the suite name.
class SampleRng {
public:
    SampleRng(std::uint64_t seed, const std::string& stream);
    double uniform(double lo, double hi);
    int integer(int lo, int hi);  // inclusive

private:
    std::mt19937_64 gen_;
};

}  // namespace dunkl::harness

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "common.hpp"
#include "dunkl/windows.hpp"

namespace dunkl::harness {

const std::vector<std::string>& family_ids() {
    static const std::vector<std::string> ids{"gauss-0.5", "gauss-1",      "gauss-2",   "x-gauss",
                                              "poly-gauss", "bump-annulus", "bump-ball", "zero"};
    return ids;
}

namespace {

double sq(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

// wide transitions keep the inverse transforms inside a 20-unit box to about 1e-8
SpectralWindow bump_profile(const std::string& id) {
    return id == "bump-ball" ? SpectralWindow::ball(0.0, 8.0) : SpectralWindow::annulus(4.0, 12.0, 12.0, 20.0);
}

}  // namespace

SampledFunction test_function(const std::string& id, const TransformPlan& plan) {
    const auto& g = plan.grid_ptr();
    if (id == "gauss-0.5" || id == "gauss-1" || id == "gauss-2") {
        const double a = std::stod(id.substr(6));
        return SampledFunction::sample(g, [a](auto x) { return std::exp(-a * sq(x)); });
    }
    if (id == "x-gauss") return SampledFunction::sample(g, [](auto x) { return x[0] * std::exp(-sq(x)); });
    if (id == "poly-gauss") return SampledFunction::sample(g, [](auto x) { return (1.0 + sq(x)) * std::exp(-sq(x)); });
    if (id == "zero") return SampledFunction(g, Domain::space);
    if (id == "bump-annulus" || id == "bump-ball") {
        const auto w = bump_profile(id);
        const auto spec =
            SampledFunction::sample(g, [&w](auto xi) { return w(std::sqrt(sq(xi))); }, Domain::frequency);
        auto f = dunkl_inverse(plan, spec);
        for (auto& v : f.values()) v = v.real();  // radial real profile: drop roundoff imaginary part
        return f;
    }
    throw ConfigError("unknown test function '" + id + "'");
}

bool fits_grid(const TransformPlan& plan, const SampledFunction& f) {
    constexpr double tol = 1e-6;
    if (dunkl::detail::boundary_fraction(f) > tol) return false;
    return dunkl::detail::boundary_fraction(dunkl_transform(plan, f)) <= tol;
}

std::vector<std::pair<std::string, std::string>> family_pairs(const SuiteConfig& config) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& f : config.sweep.families)
        for (const auto& g : config.sweep.families) out.emplace_back(f, g);
    return out;
}

std::shared_ptr<const TransformPlan> shared_plan(const std::vector<double>& k, int n, double x_max) {
    using Key = std::tuple<std::vector<double>, int, double>;
    struct Entry {
        std::shared_ptr<const TransformPlan> plan;
        std::vector<std::string> warnings;  // raised while building; replayed on every hand-out
    };
    static std::mutex mu;
    static std::map<Key, Entry> cache;
    static std::vector<Key> order;
    Entry entry;
    {
        std::lock_guard lock(mu);
        const Key key{k, n, x_max};
        if (auto it = cache.find(key); it != cache.end()) {
            entry = it->second;
        } else {
            auto old = set_warning_handler([&entry](const std::string& m) { entry.warnings.push_back(m); });
            try {
                // the self-test would only repeat what the plancherel and inversion suites measure
                entry.plan = std::make_shared<const TransformPlan>(make_grid(ReflectionSetup(k), n, x_max),
                                                                   PlanOptions{false});
            } catch (...) {
                set_warning_handler(std::move(old));
                throw;
            }
            set_warning_handler(std::move(old));
            if (order.size() >= 4) {
                cache.erase(order.front());
                order.erase(order.begin());
            }
            cache.emplace(key, entry);
            order.push_back(key);
        }
    }
    // reports must not depend on whether an earlier suite built the plan
    for (const auto& m : entry.warnings) warn(m);
    return entry.plan;
}

SampleRng::SampleRng(std::uint64_t seed, const std::string& stream) {
    // FNV-1a, so the stream does not depend on the standard library's hash
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : stream) h = (h ^ ch) * 1099511628211ull;
    gen_.seed(seed ^ h);
}

double SampleRng::uniform(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

int SampleRng::integer(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(gen_() % span);
}

}  // namespace dunkl::harness

#include "dunkl/harness/suites.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "common.hpp"
#include "suites_impl.hpp"

namespace dunkl::harness {

namespace {

using SuiteFn = void (*)(const SuiteConfig&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r{
        {"plancherel", detail::suite_plancherel},
        {"inversion", detail::suite_inversion},
        {"kernel-bound", detail::suite_kernel_bound},
        {"dunkl-derivative", detail::suite_dunkl_derivative},
        {"heat", detail::suite_heat},
        {"translation-decay", detail::suite_translation_decay},
        {"almost-ortho", detail::suite_almost_ortho},
        {"support-lemma", detail::suite_support_lemma},
        {"decomposition", detail::suite_decomposition},
        {"kernel-probe", detail::suite_kernel_probe},
        {"decay-slope", detail::suite_decay_slope},
        {"subordination", detail::suite_subordination},
        {"maximal-domination", detail::suite_maximal_domination},
        {"paraproduct-bound", detail::suite_paraproduct_bound},
        {"kato-ponce", detail::suite_kato_ponce},
        {"kato-ponce-split", detail::suite_kato_ponce_split},
    };
    return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, _] : registry()) v.push_back(name);
        return v;
    }();
    return names;
}

bool is_suite(const std::string& name) {
    for (const auto& [n, _] : registry())
        if (n == name) return true;
    return false;
}

SuiteReport run_suite(const SuiteConfig& config, const std::string& name) {
    config.validate();
    SuiteFn fn = nullptr;
    for (const auto& [n, f] : registry())
        if (n == name) fn = f;
    if (!fn) throw ConfigError("unknown suite '" + name + "'");
    SuiteReport r;
    r.suite = name;
    to_json(r.config, config);
    const auto start = std::chrono::steady_clock::now();
    {
        detail::WarningCapture capture(r);
        try {
            fn(config, r);
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception& e) {
            r.check(false, std::string("suite aborted: ") + e.what());
        }
    }
    r.finalize();
    r.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

SuiteReport kato_ponce_sweep(const SuiteConfig& config) { return run_suite(config, "kato-ponce"); }
SuiteReport kato_ponce_split_sweep(const SuiteConfig& config) { return run_suite(config, "kato-ponce-split"); }
SuiteReport paraproduct_bound_sweep(const SuiteConfig& config) { return run_suite(config, "paraproduct-bound"); }

}  // namespace dunkl::harness

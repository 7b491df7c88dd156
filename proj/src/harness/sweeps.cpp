// Empirical-constant sweeps for the fractional Leibniz rules and paraproduct bounds.
// Samples are recorded in the order: order s, exponent tuple, (f, g) pair.

#include <cmath>
#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <utility>

#include "common.hpp"
#include "dunkl/operators.hpp"
#include "dunkl/paraproduct.hpp"
#include "suites_impl.hpp"

namespace dunkl::harness::detail {

namespace {

// family members, their spectra and fractional powers on one grid
class FamilyCache {
public:
    FamilyCache(const TransformPlan& plan, const SuiteConfig& c, SuiteReport& r) : plan_(plan) {
        for (const auto& id : c.sweep.families) {
            if (f_.count(id)) continue;
            auto f = test_function(id, plan);
            if (!fits_grid(plan, f)) {
                r.note("family " + id + " does not fit the grid; skipped");
                continue;
            }
            spectra_.emplace(id, dunkl_transform(plan, f));
            f_.emplace(id, std::move(f));
        }
    }
    bool has(const std::string& id) const { return f_.count(id) > 0; }
    // the product must fit as well: two bumps can each fit while the spectrum of fg does not
    bool has_pair(const std::string& a, const std::string& b, SuiteReport& r) {
        if (!has(a) || !has(b)) return false;
        const auto key = std::make_pair(std::min(a, b), std::max(a, b));
        auto it = pairs_.find(key);
        if (it == pairs_.end()) {
            it = pairs_.emplace(key, fits_grid(plan_, f_.at(a) * f_.at(b))).first;
            if (!it->second) r.note("product " + a + "*" + b + " does not fit the grid; skipped");
        }
        return it->second;
    }
    const SampledFunction& f(const std::string& id) const { return f_.at(id); }
    const SampledFunction& spectrum(const std::string& id) const { return spectra_.at(id); }

    // (-Δ_k)^s of a member
    const SampledFunction& power(const std::string& id, double s) {
        auto& slot = powers_[s];
        auto it = slot.find(id);
        if (it == slot.end()) it = slot.emplace(id, apply_multiplier(plan_, spectra_.at(id), {nullptr, 2.0 * s})).first;
        return it->second;
    }
    double norm(const std::string& id, double s, double p) {
        const auto key = std::make_tuple(id, s, p);
        auto it = norms_.find(key);
        if (it == norms_.end()) it = norms_.emplace(key, lp_norm(s == 0.0 ? f_.at(id) : power(id, s), p)).first;
        return it->second;
    }

private:
    const TransformPlan& plan_;
    std::map<std::string, SampledFunction> f_, spectra_;
    std::map<double, std::map<std::string, SampledFunction>> powers_;
    std::map<std::tuple<std::string, double, double>, double> norms_;
    std::map<std::pair<std::string, std::string>, bool> pairs_;
};

std::string pair_id(const std::string& f, const std::string& g) { return f + "*" + g; }

// LHS / RHS with the conventions: both zero gives 0; a vanishing RHS under a nonzero LHS
// is a degenerate pair and is rejected (NaN)
double leibniz_ratio(double lhs, double rhs) {
    if (lhs == 0.0 && rhs == 0.0) return 0.0;
    if (!(rhs > 1e-300)) return NAN;
    return lhs / rhs;
}

struct SweepResult {
    double max_ratio = 0.0;
    std::vector<SampleRecord> samples;
};

// orders: list of (s, s1, s2); s1 = s2 = 0 selects the two-term right-hand side
SweepResult leibniz_sweep(const TransformPlan& plan, const SuiteConfig& c, SuiteReport& r,
                          const std::vector<std::array<double, 3>>& orders) {
    FamilyCache fam(plan, c, r);
    SweepResult out;
    const auto pairs = family_pairs(c);
    for (const auto& [s, s1, s2] : orders) {
        std::map<std::string, double> lhs_norms;  // keyed by pair and p
        for (std::size_t e = 0; e < c.sweep.exponents.size(); ++e) {
            const auto& ex = c.sweep.exponents[e];
            for (const auto& [a, b] : pairs) {
                if (!fam.has_pair(a, b, r)) continue;
                const std::string key = pair_id(a, b) + "|" + ex.p.str();
                auto it = lhs_norms.find(key);
                if (it == lhs_norms.end())
                    it = lhs_norms.emplace(key, lp_norm(fractional_laplacian(plan, fam.f(a) * fam.f(b), s), ex.p.value())).first;
                const double lhs = it->second;
                double rhs;
                if (s1 > 0.0)
                    rhs = fam.norm(a, s1, ex.p1.value()) * fam.norm(b, s2, ex.p2.value()) +
                          fam.norm(a, s, ex.pt1.value()) * fam.norm(b, 0.0, ex.pt2.value()) +
                          fam.norm(a, 0.0, ex.pb1.value()) * fam.norm(b, s, ex.pb2.value());
                else
                    rhs = fam.norm(a, s, ex.p1.value()) * fam.norm(b, 0.0, ex.p2.value()) +
                          fam.norm(a, 0.0, ex.pt1.value()) * fam.norm(b, s, ex.pt2.value());
                const double ratio = leibniz_ratio(lhs, rhs);
                const std::string id = pair_id(a, b) + "/s=" + fmt(s) + (s1 > 0.0 ? "/s1=" + fmt(s1) : "") + "/e" + std::to_string(e);
                if (std::isnan(ratio)) {
                    r.note("degenerate pair " + id + " (right-hand side vanishes); rejected");
                    continue;
                }
                out.samples.push_back({id, s, ex.p.str(), ex.p1.str(), ex.p2.str(), lhs, rhs, ratio});
                out.max_ratio = std::max(out.max_ratio, ratio);
            }
        }
    }
    return out;
}

void run_leibniz(const SuiteConfig& c, SuiteReport& r, const std::vector<std::array<double, 3>>& orders) {
    const auto base = base_level(c);
    auto a = leibniz_sweep(*base.plan, c, r, orders);
    double fine = a.max_ratio;
    if (c.refine) fine = leibniz_sweep(*fine_level(c).plan, c, r, orders).max_ratio;
    for (const auto& smp : a.samples) r.check(std::isfinite(smp.ratio), "ratio for " + smp.sample_id + " is not finite");
    r.samples = std::move(a.samples);
    record_constant(r, "max_ratio", a.max_ratio, fine);
}

}  // namespace

void suite_kato_ponce(const SuiteConfig& c, SuiteReport& r) {
    std::vector<std::array<double, 3>> orders;
    for (double s : c.sweep.s) orders.push_back({s, 0.0, 0.0});
    run_leibniz(c, r, orders);
}

void suite_kato_ponce_split(const SuiteConfig& c, SuiteReport& r) {
    std::vector<std::array<double, 3>> orders;
    for (const auto& sp : c.sweep.splits) orders.push_back({sp.s(), sp.s1, sp.s2});
    run_leibniz(c, r, orders);
}

namespace {

ParaproductSpec named_paraproduct(const std::string& name, int J) {
    const auto w = decomposition_windows();
    if (name == "pi1") return {w.theta[0], w.psi[0], w.phi[0], -J, J};
    if (name == "pi2") return {w.theta[1], w.psi[1], w.phi[1], -J, J};
    if (name == "pi3") return {w.theta[2], w.psi[2], w.phi[2], -J, J};
    if (name == "lowpass") {
        const auto low = lp_cutoff();
        return {low, low, low, -J, J};
    }
    throw ConfigError("unknown paraproduct '" + name + "'");
}

SweepResult paraproduct_sweep(const TransformPlan& plan, const SuiteConfig& c, SuiteReport& r, const std::string& name) {
    const auto spec = named_paraproduct(name, c.sweep.J);
    FamilyCache fam(plan, c, r);
    SweepResult out;
    const auto pairs = family_pairs(c);
    std::map<std::string, SampledFunction> products;
    for (std::size_t e = 0; e < c.sweep.paraproduct_exponents.size(); ++e) {
        const auto& ex = c.sweep.paraproduct_exponents[e];
        for (const auto& [a, b] : pairs) {
            if (!fam.has_pair(a, b, r)) continue;
            const std::string pid = pair_id(a, b);
            auto it = products.find(pid);
            if (it == products.end())
                it = products.emplace(pid, paraproduct_spectral(plan, spec, fam.spectrum(a), fam.spectrum(b))).first;
            const double lhs = lp_norm(it->second, ex.p.value());
            const double rhs = fam.norm(a, 0.0, ex.p1.value()) * fam.norm(b, 0.0, ex.p2.value());
            const double ratio = leibniz_ratio(lhs, rhs);
            const std::string id = name + "/" + pid + "/e" + std::to_string(e);
            if (std::isnan(ratio)) {
                r.note("degenerate pair " + id + " (right-hand side vanishes); rejected");
                continue;
            }
            out.samples.push_back({id, NAN, ex.p.str(), ex.p1.str(), ex.p2.str(), lhs, rhs, ratio});
            out.max_ratio = std::max(out.max_ratio, ratio);
        }
    }
    return out;
}

}  // namespace

void suite_paraproduct_bound(const SuiteConfig& c, SuiteReport& r) {
    int met = 0;
    for (const auto& name : c.sweep.paraproducts) {
        const auto spec = named_paraproduct(name, c.sweep.J);
        if (!spec.hypothesis_met()) {
            r.note("hypothesis-not-met: " + name + " has fewer than two windows whose support avoids 0; skipped");
            continue;
        }
        ++met;
        auto a = paraproduct_sweep(*base_level(c).plan, c, r, name);
        const double fine = c.refine ? paraproduct_sweep(*fine_level(c).plan, c, r, name).max_ratio : a.max_ratio;
        for (auto& smp : a.samples) {
            r.check(std::isfinite(smp.ratio), "ratio for " + smp.sample_id + " is not finite");
            r.samples.push_back(std::move(smp));
        }
        record_constant(r, "max_ratio/" + name, a.max_ratio, fine);
    }
    if (met == 0) r.status = SuiteStatus::hypothesis_not_met;
}

}  // namespace dunkl::harness::detail

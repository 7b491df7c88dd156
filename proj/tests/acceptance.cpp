// Acceptance gate: one PASS/FAIL line per criterion.
//
//   acceptance [--only N ...] [--known-failure N ...]
//
// Exit status is 0 when the failing criteria are exactly the known ones. A known failure
// that starts passing is reported and also makes the run fail, so the registration gets
// updated.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "dunkl/dunkl.hpp"
#include "dunkl/harness/suites.hpp"
#include "support/fft_oracle.hpp"

namespace {

using namespace dunkl;
using namespace dunkl::harness;

struct Setup {
    std::vector<double> k;
    int n;
    double x_max;
    std::string label;
};

const std::vector<Setup>& setups() {
    static const std::vector<Setup> s{{{0.0}, 1025, 20.0, "k=0"},
                                      {{0.5}, 1025, 20.0, "k=0.5"},
                                      {{1.0}, 1025, 20.0, "k=1"},
                                      {{2.5}, 1025, 20.0, "k=2.5"},
                                      {{1.0, 0.5}, 129, 10.0, "k=(1,0.5)"}};
    return s;
}

SuiteConfig config_for(const Setup& s, bool refine = false) {
    auto c = SuiteConfig::defaults();
    c.k = s.k;
    c.n = s.n;
    c.x_max = s.x_max;
    c.refine = refine;
    return c;
}

struct Verdict {
    bool pass = true;
    std::vector<std::string> facts, problems;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            problems.push_back(what);
        }
    }
    void fact(const std::string& what) { facts.push_back(what); }
};

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double metric(const SuiteReport& r, const std::string& name) {
    auto it = r.metrics.find(name);
    return it == r.metrics.end() ? NAN : it->second;
}

// suite status and failure messages folded into the verdict
void require_suite(Verdict& v, const SuiteReport& r, const std::string& where) {
    for (const auto& f : r.failures) v.require(false, where + " " + r.suite + ": " + f);
    v.require(r.passed(), where + " " + r.suite + " is " + to_string(r.status));
    for (const auto& [name, f] : r.stability)
        v.require(f <= 2.0, where + " " + r.suite + ": " + name + " refinement factor " + sci(f));
}

std::vector<double> real_part(const SampledFunction& f) {
    std::vector<double> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].real();
    return out;
}

// 1. Plancherel and inversion over the test family
Verdict plancherel_inversion() {
    Verdict v;
    double defect = 0.0, roundtrip = 0.0, slowest = 0.0;
    for (const auto& s : setups()) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto c = config_for(s);
        const auto p = run_suite(c, "plancherel"), i = run_suite(c, "inversion");
        const double dt = seconds_since(t0);
        require_suite(v, p, s.label);
        require_suite(v, i, s.label);
        int members = 0;
        for (const auto& [name, _] : p.metrics) members += name.rfind("defect/", 0) == 0;
        v.require(members >= 5, s.label + ": only " + std::to_string(members) + " family members fit the grid");
        defect = std::max(defect, metric(p, "max_defect"));
        roundtrip = std::max(roundtrip, metric(i, "max_roundtrip"));
        v.require(metric(p, "max_defect") < 1e-6 && metric(i, "max_roundtrip") < 1e-6, s.label + ": defect too large");
        v.require(dt < 60.0, s.label + ": took " + sci(dt) + " s");
        slowest = std::max(slowest, dt);
    }
    v.fact("max Plancherel defect " + sci(defect));
    v.fact("max round trip " + sci(roundtrip));
    v.fact("slowest setup " + sci(slowest) + " s");
    return v;
}

// 2. |E_k| <= 1, classical kernel, eigen-equation order
Verdict kernel_bound() {
    Verdict v;
    double worst = 0.0, classical = 0.0, order = INFINITY;
    for (const auto& s : setups()) {
        const auto r = run_suite(config_for(s), "kernel-bound");
        require_suite(v, r, s.label);
        worst = std::max(worst, metric(r, "max_abs_kernel"));
        classical = std::max(classical, metric(r, "classical_kernel_error"));
        order = std::min(order, metric(r, "eigen_order"));
    }
    v.require(worst <= 1.0 + 1e-10, "|E_k| exceeds 1 + 1e-10");
    v.require(classical <= 1e-12, "E_0 differs from e^{ixy}");
    v.fact("max |E_k(ix,y)| " + sci(worst) + " over 10^4 pairs per setup");
    v.fact("E_0 error " + sci(classical));
    v.fact("eigen-equation order >= " + sci(order));
    return v;
}

// 3. heat kernel mass and bivariate kernel
Verdict heat() {
    Verdict v;
    double mass = 0.0, biv = 0.0;
    int fewest = 1 << 30;
    for (const auto& s : setups()) {
        const auto r = run_suite(config_for(s), "heat");
        require_suite(v, r, s.label);
        mass = std::max(mass, metric(r, "mass_error"));
        biv = std::max(biv, metric(r, "bivariate_error"));
        fewest = std::min(fewest, static_cast<int>(metric(r, "bivariate_samples")));
    }
    v.require(mass < 1e-6 && biv < 1e-6, "tolerance exceeded");
    v.require(fewest >= 100, "fewer than 100 bivariate triples");
    v.fact("mass error " + sci(mass) + " for t in {0.01, 0.1, 1, 10}");
    v.fact("bivariate error " + sci(biv) + " on 100 triples per setup");
    return v;
}

// 4. fractional Laplacian: subordination, s = 1, classical
Verdict fractional_laplacian_agreement() {
    Verdict v;
    double sub = 0.0, fd = 0.0, classical = 0.0, fft = 0.0;
    for (const auto& s : setups()) {
        if (s.k.size() != 1) continue;
        const auto r = run_suite(config_for(s), "subordination");
        require_suite(v, r, s.label);
        sub = std::max(sub, metric(r, "subordination_error/s=0.5"));
        fd = std::max(fd, metric(r, "fd_error"));
        if (s.k[0] == 0.0) {
            classical = metric(r, "classical_error");
            // and against the FFT oracle, on the whole grid
            const auto plan = shared_plan(s.k, s.n, s.x_max);
            const auto f = test_function("gauss-0.5", *plan);
            const oracle::PaddedFourier ref(s.n, plan->grid().spacing());
            const auto mine = real_part(fractional_laplacian(*plan, f, 0.5));
            const auto theirs = ref.fractional_laplacian(real_part(f), 0.5);
            double err = 0.0, top = 0.0;
            for (std::size_t i = 0; i < mine.size(); ++i) {
                err = std::max(err, std::abs(mine[i] - theirs[i]));
                top = std::max(top, std::abs(theirs[i]));
            }
            fft = err / top;
        }
    }
    v.require(sub < 1e-4, "subordination differs by " + sci(sub));
    v.require(fd < 1e-3, "s = 1 differs from the difference Laplacian by " + sci(fd));
    v.require(classical < 1e-6 && fft < 1e-6, "k = 0 differs from the classical oracles");
    v.fact("subordination " + sci(sub));
    v.fact("s=1 vs difference Laplacian " + sci(fd));
    v.fact("k=0 vs quadrature " + sci(classical) + ", vs FFT " + sci(fft));
    return v;
}

// 5. decay slopes of (-Δ_k)^s of a Gaussian
Verdict decay() {
    Verdict v;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (double k : {0.0, 1.0}) {
        const auto r = run_suite(config_for({{k}, 1025, 20.0, ""}), "decay-slope");
        require_suite(v, r, "k=" + sci(k));
        for (double s : {0.25, 0.5, 0.75}) {
            std::ostringstream name;
            name << "slope/s=" << s;
            const double expect = -(1.0 + 2.0 * k + 2.0 * s);
            worst = std::max(worst, std::abs(metric(r, name.str()) / expect - 1.0));
        }
    }
    const double dt = seconds_since(t0);
    v.require(worst <= 0.10, "slope off by " + sci(worst));
    v.require(dt < 120.0, "took " + sci(dt) + " s");
    v.fact("max relative slope error " + sci(worst) + " on [5, 16]");
    v.fact(sci(dt) + " s");
    return v;
}

// 6. decomposition residual, its decrease in J, and k = 0 against the FFT oracle
Verdict decomposition() {
    Verdict v;
    double at12 = 0.0;
    int flat = 0, steps = 0, pairs = 0;
    std::string example;
    for (const auto& s : setups()) {
        const auto r = run_suite(config_for(s), "decomposition");
        for (const auto& [name, val] : r.metrics)
            if (name.rfind("residual/", 0) == 0 && name.ends_with("/J=12")) at12 = std::max(at12, val);
        for (const auto& [name, _] : r.metrics)
            if (name.rfind("low_mass/", 0) == 0) ++pairs, steps += 6;
        for (const auto& f : r.failures) {
            if (f.find("strictly decrease") != std::string::npos) {
                if (flat++ == 0) example = s.label + " " + f;
            } else {
                v.require(false, s.label + ": " + f);
            }
        }
    }
    v.require(at12 < 1e-3, "J = 12 residual " + sci(at12));
    v.require(flat == 0, std::to_string(flat) + " of " + std::to_string(steps) +
                             " steps J -> J+1 do not decrease the residual, e.g. " + example);
    v.fact(std::to_string(pairs) + " pairs, max J=12 residual " + sci(at12));

    // k = 0: each piece against the chirp-z oracle
    const auto& s0 = setups().front();
    const auto plan = shared_plan(s0.k, s0.n, s0.x_max);
    const oracle::GridFourier ref(s0.n, plan->grid().spacing());
    const auto w = decomposition_windows();
    double worst = 0.0;
    for (const auto& [a, b] : {std::pair{"gauss-1", "gauss-1"}, std::pair{"gauss-0.5", "gauss-2"}}) {
        const auto f = test_function(a, *plan), g = test_function(b, *plan);
        const auto dec = decompose_product(*plan, f, g);
        for (int i = 0; i < 3; ++i) {
            const auto theirs = ref.paraproduct(w.theta[i], w.psi[i], w.phi[i], -12, 12, f.values(), g.values());
            double err = 0.0, top = 0.0;
            for (std::size_t m = 0; m < theirs.size(); ++m) {
                err = std::max(err, std::abs(dec.pi[i][m] - theirs[m]));
                top = std::max(top, std::abs(theirs[m]));
            }
            worst = std::max(worst, err / top);
        }
    }
    v.require(worst < 1e-6, "k = 0 differs from the FFT oracle by " + sci(worst));
    v.fact("k=0 vs FFT oracle " + sci(worst));
    return v;
}

// 7. support of ψ *_k φ
Verdict support() {
    Verdict v;
    double worst = 0.0;
    for (const auto& s : setups()) {
        const auto r = run_suite(config_for(s), "support-lemma");
        require_suite(v, r, s.label);
        for (int j : {-1, 0, 1}) worst = std::max(worst, metric(r, "leakage/j=" + std::to_string(j)));
    }
    v.require(worst < 1e-6, "leakage " + sci(worst));
    v.fact("max leakage " + sci(worst) + " at j in {-1, 0, 1}");
    return v;
}

// 8. translation decay, almost orthogonality, kernel size
Verdict probes() {
    Verdict v;
    const auto c = config_for(setups()[2], true);
    const auto t = run_suite(c, "translation-decay");
    const auto a = run_suite(c, "almost-ortho");
    const auto t0 = std::chrono::steady_clock::now();
    const auto k = run_suite(c, "kernel-probe");
    const double dt = seconds_since(t0);
    for (const auto* r : {&t, &a, &k}) require_suite(v, *r, "k=1");
    v.require(metric(t, "samples_used") >= 500, "translation decay used " + sci(metric(t, "samples_used")) + " samples");
    v.require(a.samples.size() >= 200, "almost orthogonality has fewer than 200 samples");
    v.require(k.samples.size() >= 50 && metric(k, "probe_n") == 257, "kernel probe below 50 samples or not at n = 257");
    v.require(dt < 600.0, "kernel probe took " + sci(dt) + " s");
    v.fact("translation factor " + sci(t.stability.at("translation_ratio")) + " (500 pairs)");
    v.fact("orthogonality factor " + sci(a.stability.at("orthogonality_ratio")) + " (200 triples)");
    v.fact("kernel factor " + sci(k.stability.at("kernel_ratio")) + " (50 triples, " + sci(dt) + " s)");
    return v;
}

// k = 0 sweep ratios recomputed from scratch with FFT operators and trapezoid norms
class ClassicalSweep {
public:
    ClassicalSweep(const SuiteConfig& c)
        : c_(c), plan_(shared_plan(c.k, c.n, c.x_max)), h_(plan_->grid().spacing()), padded_(c.n, h_, 21),
          grid_(c.n, h_) {}

    double leibniz(const SampleRecord& smp) {
        // "a*b/s=X[/s1=Y]/eN"
        const auto parts = split(smp.sample_id, '/');
        const auto names = split(parts[0], '*');
        const double s = smp.s;
        double s1 = 0.0;
        for (const auto& p : parts)
            if (p.rfind("s1=", 0) == 0) s1 = std::stod(p.substr(3));
        const int e = std::stoi(parts.back().substr(1));
        const auto& ex = c_.sweep.exponents[e];
        const auto& a = names[0];
        const auto& b = names[1];
        const double s2 = s - s1;
        const double lhs = oracle::lp_norm(power(product(a, b), s), h_, ex.p.value());
        double rhs;
        if (s1 > 0.0)
            rhs = norm(a, s1, ex.p1.value()) * norm(b, s2, ex.p2.value()) +
                  norm(a, s, ex.pt1.value()) * norm(b, 0.0, ex.pt2.value()) +
                  norm(a, 0.0, ex.pb1.value()) * norm(b, s, ex.pb2.value());
        else
            rhs = norm(a, s, ex.p1.value()) * norm(b, 0.0, ex.p2.value()) +
                  norm(a, 0.0, ex.pt1.value()) * norm(b, s, ex.pt2.value());
        return lhs == 0.0 && rhs == 0.0 ? 0.0 : lhs / rhs;
    }

    double paraproduct(const SampleRecord& smp) {
        // "piN/a*b/eN"
        const auto parts = split(smp.sample_id, '/');
        const auto names = split(parts[1], '*');
        const int i = parts[0][2] - '1';
        const int e = std::stoi(parts[2].substr(1));
        const auto& ex = c_.sweep.paraproduct_exponents[e];
        const auto w = decomposition_windows();
        const auto pi = grid_.paraproduct(w.theta[i], w.psi[i], w.phi[i], -c_.sweep.J, c_.sweep.J,
                                          values(names[0]), values(names[1]));
        std::vector<double> abs(pi.size());
        for (std::size_t m = 0; m < pi.size(); ++m) abs[m] = std::abs(pi[m]);
        const double lhs = oracle::lp_norm(abs, h_, ex.p.value());
        const double rhs = norm(names[0], 0.0, ex.p1.value()) * norm(names[1], 0.0, ex.p2.value());
        return lhs == 0.0 && rhs == 0.0 ? 0.0 : lhs / rhs;
    }

private:
    static std::vector<std::string> split(const std::string& text, char sep) {
        std::vector<std::string> out;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, sep)) out.push_back(item);
        return out;
    }
    const std::vector<double>& samples(const std::string& id) {
        auto it = f_.find(id);
        if (it == f_.end()) it = f_.emplace(id, real_part(test_function(id, *plan_))).first;
        return it->second;
    }
    std::vector<cplx> values(const std::string& id) {
        const auto& f = samples(id);
        return {f.begin(), f.end()};
    }
    std::vector<double> product(const std::string& a, const std::string& b) {
        const auto& f = samples(a);
        const auto& g = samples(b);
        std::vector<double> out(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i] * g[i];
        return out;
    }
    std::vector<double> power(const std::vector<double>& f, double s) const {
        return s == 0.0 ? f : padded_.fractional_laplacian(f, s);
    }
    double norm(const std::string& id, double s, double p) {
        const auto key = std::make_tuple(id, s, p);
        auto it = norms_.find(key);
        if (it == norms_.end()) {
            auto pit = powers_.find({id, s});
            if (pit == powers_.end()) pit = powers_.emplace(std::pair{id, s}, power(samples(id), s)).first;
            it = norms_.emplace(key, oracle::lp_norm(pit->second, h_, p)).first;
        }
        return it->second;
    }

    SuiteConfig c_;
    std::shared_ptr<const TransformPlan> plan_;
    double h_;
    oracle::PaddedFourier padded_;
    oracle::GridFourier grid_;
    std::map<std::string, std::vector<double>> f_;
    std::map<std::pair<std::string, double>, std::vector<double>> powers_;
    std::map<std::tuple<std::string, double, double>, double> norms_;
};

// 9. Leibniz and paraproduct sweeps
Verdict sweeps() {
    Verdict v;
    const std::vector<std::string> names{"kato-ponce", "kato-ponce-split", "paraproduct-bound"};
    double worst_factor = 0.0, worst_oracle = 0.0;
    std::size_t ratios = 0, compared = 0;
    for (double k : {1.0, 0.0}) {
        auto c = config_for({{k}, 513, 20.0, ""}, true);
        const std::string where = k == 0.0 ? "k=0" : "k=1";
        ClassicalSweep oracle_sweep(c);
        for (const auto& name : names) {
            const auto r = run_suite(c, name);
            require_suite(v, r, where);
            for (const auto& [_, f] : r.stability) worst_factor = std::max(worst_factor, f);
            for (const auto& smp : r.samples) {
                ++ratios;
                v.require(std::isfinite(smp.ratio), where + " " + smp.sample_id + " ratio not finite");
                if (k != 0.0) continue;
                const double ref = name == "paraproduct-bound" ? oracle_sweep.paraproduct(smp) : oracle_sweep.leibniz(smp);
                const double err = ref == 0.0 ? std::abs(smp.ratio) : std::abs(smp.ratio - ref) / std::abs(ref);
                worst_oracle = std::max(worst_oracle, err);
                ++compared;
                v.require(err < 1e-6, "k=0 " + smp.sample_id + ": " + sci(smp.ratio) + " vs FFT oracle " + sci(ref));
            }
        }
    }
    // the full default sweep, timed
    const auto t0 = std::chrono::steady_clock::now();
    const auto dflt = SuiteConfig::defaults();
    for (const auto& name : names) require_suite(v, run_suite(dflt, name), "default");
    const double dt = seconds_since(t0);
    v.require(dt < 900.0, "default sweep took " + sci(dt) + " s");
    v.fact(std::to_string(ratios) + " ratios finite");
    v.fact("max refinement factor " + sci(worst_factor) + " (n 513 -> 1025)");
    v.fact(std::to_string(compared) + " k=0 ratios vs FFT oracle, max rel. diff " + sci(worst_oracle));
    v.fact("default sweep " + sci(dt) + " s");
    return v;
}

// 10. window transfer identity and maximal domination
Verdict transfer_and_maximal() {
    Verdict v;
    double identity = 0.0, factor = 0.0;
    for (double k : {0.0, 1.0}) {
        const auto r = run_suite(config_for({{k}, 1025, 20.0, ""}, true), "maximal-domination");
        require_suite(v, r, "k=" + sci(k));
        identity = std::max(identity, metric(r, "transfer_identity_defect"));
        for (const auto& [name, c] : r.constants) v.require(std::isfinite(c), name + " not finite");
        for (const auto& [_, f] : r.stability) factor = std::max(factor, f);
    }
    v.require(identity <= 1e-12, "identity defect " + sci(identity));
    v.fact("identity defect " + sci(identity));
    v.fact("domination constant refinement factor " + sci(factor));
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    std::vector<int> only, known;
    app.add_option("--only", only, "run only these criteria");
    app.add_option("--known-failure", known, "criteria expected to fail");
    CLI11_PARSE(app, argc, argv);

    // suites collect library warnings into their reports; the rest would only be noise here
    set_warning_handler(nullptr);

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"Plancherel and inversion", plancherel_inversion},
        {"kernel bound", kernel_bound},
        {"heat kernel", heat},
        {"fractional Laplacian", fractional_laplacian_agreement},
        {"decay slopes", decay},
        {"product decomposition", decomposition},
        {"support of psi *_k phi", support},
        {"estimate probes", probes},
        {"Leibniz and paraproduct sweeps", sweeps},
        {"window transfer and maximal domination", transfer_and_maximal},
    };
    const std::set<int> selected(only.begin(), only.end()), expected(known.begin(), known.end());
    std::set<int> failed;
    bool surprise = false;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i) + 1;
        if (!selected.empty() && !selected.count(id)) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v.require(false, std::string("aborted: ") + e.what());
        }
        std::ostringstream line;
        line << (v.pass ? "PASS" : "FAIL") << " " << id << " " << criteria[i].first << " (" << sci(seconds_since(t0))
             << " s)";
        for (const auto& f : v.facts) line << "; " << f;
        std::printf("%s\n", line.str().c_str());
        for (const auto& p : v.problems) std::printf("     %s\n", p.c_str());
        if (!v.pass) failed.insert(id);
        if (v.pass && expected.count(id)) {
            std::printf("     criterion %d is registered as a known failure but passed\n", id);
            surprise = true;
        }
        std::fflush(stdout);
    }
    std::set<int> unexpected;
    for (int id : failed)
        if (!expected.count(id)) unexpected.insert(id);
    if (!unexpected.empty()) {
        std::printf("unexpected failures:");
        for (int id : unexpected) std::printf(" %d", id);
        std::printf("\n");
    }
    return unexpected.empty() && !surprise ? 0 : 1;
}

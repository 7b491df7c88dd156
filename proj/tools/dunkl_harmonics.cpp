// dunkl-harmonics: run verification suites and apply single operators to sampled functions.
//
// Exit codes: 0 every suite passed, 1 some suite failed or was inconclusive,
// 2 configuration or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dunkl/dunkl.hpp"
#include "dunkl/harness/suites.hpp"

namespace {

using namespace dunkl;
using namespace dunkl::harness;

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        try {
            out.push_back(std::stod(item));
        } catch (const std::exception&) {
            throw ConfigError("bad number '" + item + "' in list '" + text + "'");
        }
    if (out.empty()) throw ConfigError("empty list");
    return out;
}

int emit(const std::vector<SuiteReport>& reports, const SuiteConfig& c) {
    bool ok = true;
    for (const auto& r : reports) {
        std::cout << r.suite << ": " << to_string(r.status);
        for (const auto& f : r.failures) std::cout << "\n    " << f;
        std::cout << '\n';
        ok = ok && r.passed();
    }
    nlohmann::json all = nlohmann::json::array();
    for (const auto& r : reports) all.push_back(to_json(r));
    const nlohmann::json doc = reports.size() == 1 ? all[0] : all;
    if (!c.output.empty()) {
        std::ofstream out(c.output);
        if (!out) throw ConfigError("cannot write " + c.output);
        out << doc.dump(2) << '\n';
    }
    if (!c.csv.empty()) {
        std::ofstream out(c.csv);
        if (!out) throw ConfigError("cannot write " + c.csv);
        write_csv_header(out);
        for (const auto& r : reports) write_csv(out, r);
    }
    return ok ? 0 : 1;
}

int run_config(const SuiteConfig& c) {
    std::vector<SuiteReport> reports;
    const auto& names = c.suites.empty() ? suite_names() : c.suites;
    for (const auto& n : names)
        if (!is_suite(n)) throw ConfigError("unknown suite '" + n + "'");
    for (const auto& n : names) reports.push_back(run_suite(c, n));
    return emit(reports, c);
}

std::shared_ptr<const TransformPlan> plan_for(const SampledFunction& f) {
    return std::make_shared<const TransformPlan>(f.grid_ptr());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dunkl harmonic analysis: verification suites and operators"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "run the suites listed in a JSON config");
    run->add_option("--config", config_path, "config file")->required()->check(CLI::ExistingFile);

    std::string suite_name, k_text = "1", s_text, p1_text, p2_text, out_path, csv_path;
    int d = 1, n = 1025;
    double x_max = 20.0;
    std::uint64_t seed = SuiteConfig::defaults().seed;
    bool no_refine = false;
    auto* suite = app.add_subcommand("suite", "run one suite with command-line settings");
    suite->add_option("name", suite_name, "suite name (see list-suites)")->required();
    suite->add_option("--d", d, "dimension");
    suite->add_option("--k", k_text, "multiplicity, or one per axis: 1,0.5");
    suite->add_option("--n", n, "grid points per axis (odd)");
    suite->add_option("--xmax", x_max, "grid half-width");
    suite->add_option("--s", s_text, "orders, comma separated");
    suite->add_option("--p1", p1_text, "exponent p1, e.g. 4 or 4/3");
    suite->add_option("--p2", p2_text, "exponent p2");
    suite->add_option("--seed", seed, "sampling seed");
    suite->add_flag("--no-refine", no_refine, "skip the refined-grid rerun");
    suite->add_option("--out", out_path, "JSON report");
    suite->add_option("--csv", csv_path, "per-sample CSV");

    std::string in_path, in2_path, op_out, windows = "pi1";
    double order = 0.5, t = 1.0;
    int J = 12;
    bool inverse = false;
    auto* transform = app.add_subcommand("transform", "Dunkl transform of a sampled function");
    auto* fraclap = app.add_subcommand("fraclap", "fractional Dunkl Laplacian");
    auto* heat = app.add_subcommand("heat", "heat semigroup");
    auto* para = app.add_subcommand("paraproduct", "paraproduct of two sampled functions");
    for (auto* sc : {transform, fraclap, heat, para}) {
        sc->add_option("--in", in_path, "input function (JSON)")->required()->check(CLI::ExistingFile);
        sc->add_option("--out", op_out, "output function (JSON)")->required();
    }
    transform->add_flag("--inverse", inverse, "inverse transform of a frequency-domain input");
    fraclap->add_option("--s", order, "order s > 0");
    heat->add_option("--t", t, "time t > 0");
    para->add_option("--in2", in2_path, "second input function (JSON)")->required()->check(CLI::ExistingFile);
    para->add_option("--windows", windows, "pi1, pi2 or pi3");
    para->add_option("--J", J, "scales -J..J");

    auto* list = app.add_subcommand("list-suites", "print the suite names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*list) {
            for (const auto& name : suite_names()) std::cout << name << '\n';
            return 0;
        }
        if (*run) return run_config(load_config(config_path));
        if (*suite) {
            SuiteConfig c = SuiteConfig::defaults();
            auto k = parse_list(k_text);
            if (k.size() == 1) k.assign(d, k[0]);
            if (static_cast<int>(k.size()) != d) throw ConfigError("--k needs one value or d values");
            c.k = k;
            c.n = n;
            c.x_max = x_max;
            c.seed = seed;
            c.refine = !no_refine;
            if (!s_text.empty()) c.sweep.s = parse_list(s_text);
            if (!p1_text.empty() || !p2_text.empty()) {
                if (p1_text.empty() || p2_text.empty()) throw ConfigError("--p1 and --p2 go together");
                const auto e = ExponentTuple::holder(Rational::parse(p1_text), Rational::parse(p2_text));
                c.sweep.exponents = {e};
                c.sweep.paraproduct_exponents = {e};
            }
            c.output = out_path;
            c.csv = csv_path;
            c.suites = {suite_name};
            c.validate();
            return run_config(c);
        }
        const auto f = read_function(in_path);
        const auto plan = plan_for(f);
        SampledFunction result;
        if (*transform) {
            if (inverse != (f.domain() == Domain::frequency))
                throw ConfigError(inverse ? "--inverse needs a frequency-domain input" : "input is a spectrum; pass --inverse");
            result = inverse ? dunkl_inverse(*plan, f) : dunkl_transform(*plan, f);
        } else if (*fraclap) {
            result = fractional_laplacian(*plan, f, order);
        } else if (*heat) {
            result = heat_apply(*plan, f, t);
        } else {
            const auto g = read_function(in2_path);
            if (!g.grid().same_as(f.grid())) throw ConfigError("--in and --in2 must share a grid");
            const auto w = decomposition_windows();
            const int i = windows == "pi1" ? 0 : windows == "pi2" ? 1 : windows == "pi3" ? 2 : -1;
            if (i < 0) throw ConfigError("--windows must be pi1, pi2 or pi3");
            result = paraproduct(*plan, {w.theta[i], w.psi[i], w.phi[i], -J, J}, f, g);
        }
        write_function(op_out, result);
        return 0;
    } catch (const ConfigError& e) {
        std::cerr << "configuration error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}

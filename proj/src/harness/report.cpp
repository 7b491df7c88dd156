#include "dunkl/harness/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>

namespace dunkl::harness {

const char* to_string(SuiteStatus s) {
    switch (s) {
        case SuiteStatus::pass: return "pass";
        case SuiteStatus::fail: return "fail";
        case SuiteStatus::inconclusive: return "inconclusive";
        case SuiteStatus::hypothesis_not_met: return "hypothesis-not-met";
    }
    return "?";
}

void SuiteReport::check(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
}

void SuiteReport::note(const std::string& what) {
    if (std::find(notes.begin(), notes.end(), what) == notes.end()) notes.push_back(what);
}

void SuiteReport::finalize(double stability_limit) {
    for (const auto& [name, v] : constants)
        if (!std::isfinite(v)) check(false, "constant " + name + " is not finite");
    if (!failures.empty()) {
        status = SuiteStatus::fail;
        return;
    }
    if (status == SuiteStatus::hypothesis_not_met) return;
    status = SuiteStatus::pass;
    for (const auto& [name, f] : stability)
        if (!(f <= stability_limit)) status = SuiteStatus::inconclusive;
}

double stability_factor(double a, double b) {
    a = std::abs(a), b = std::abs(b);
    if (a == 0.0 && b == 0.0) return 1.0;
    if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::infinity();
    return std::max(a, b) / std::min(a, b);
}

std::map<std::string, double> compare_constants(const SuiteReport& coarse, const SuiteReport& fine) {
    std::map<std::string, double> out;
    for (const auto& [name, v] : coarse.constants)
        if (auto it = fine.constants.find(name); it != fine.constants.end()) out[name] = stability_factor(v, it->second);
    return out;
}

namespace {

// JSON has no NaN or infinity
nlohmann::json number(double v) {
    if (std::isfinite(v)) return v;
    if (std::isnan(v)) return nullptr;
    return v > 0 ? "inf" : "-inf";
}

nlohmann::json number_map(const std::map<std::string, double>& m) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [k, v] : m) out[k] = number(v);
    return out;
}

}  // namespace

nlohmann::json to_json(const SuiteReport& r, bool with_runtime) {
    nlohmann::json samples = nlohmann::json::array();
    for (const auto& s : r.samples)
        samples.push_back({{"sample_id", s.sample_id}, {"s", number(s.s)}, {"p", s.p}, {"p1", s.p1}, {"p2", s.p2},
                           {"lhs", number(s.lhs)}, {"rhs", number(s.rhs)}, {"ratio", number(s.ratio)}});
    nlohmann::json out = {{"suite", r.suite},
                          {"pass", r.passed()},
                          {"status", to_string(r.status)},
                          {"constants", number_map(r.constants)},
                          {"stability", number_map(r.stability)},
                          {"metrics", number_map(r.metrics)},
                          {"failures", r.failures},
                          {"notes", r.notes},
                          {"samples", samples},
                          {"config", r.config}};
    if (with_runtime) out["runtime_s"] = r.runtime_s;
    return out;
}

void write_csv_header(std::ostream& out) { out << "suite,sample_id,s,p,p1,p2,lhs,rhs,ratio\n"; }

void write_csv(std::ostream& out, const SuiteReport& r) {
    const auto old = out.precision(17);
    for (const auto& s : r.samples) {
        out << r.suite << ',' << s.sample_id << ',';
        if (!std::isnan(s.s)) out << s.s;
        out << ',' << s.p << ',' << s.p1 << ',' << s.p2 << ',' << s.lhs << ',' << s.rhs << ',' << s.ratio << '\n';
    }
    out.precision(old);
}

}  // namespace dunkl::harness

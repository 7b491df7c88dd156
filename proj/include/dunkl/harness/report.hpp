#pragma once

// Suite reports: status, measured constants with their refinement-stability factors,
// per-sample records; JSON and CSV output.

#include <limits>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dunkl::harness {

enum class SuiteStatus { pass, fail, inconclusive, hypothesis_not_met };

const char* to_string(SuiteStatus s);

struct SampleRecord {
    std::string sample_id;
    double s = std::numeric_limits<double>::quiet_NaN();
    std::string p, p1, p2;  // exponents as written in the config ("4/3")
    double lhs = 0.0, rhs = 0.0, ratio = 0.0;
};

struct SuiteReport {
    std::string suite;
    SuiteStatus status = SuiteStatus::pass;
    std::map<std::string, double> constants;  // empirical constants (max ratios)
    std::map<std::string, double> stability;  // refinement factor per constant
    std::map<std::string, double> metrics;    // accuracy measurements checked against tolerances
    std::vector<std::string> failures;        // assertion messages
    std::vector<std::string> notes;           // warnings, skipped cases, surrogates in use
    std::vector<SampleRecord> samples;
    nlohmann::json config;
    double runtime_s = 0.0;

    bool passed() const { return status == SuiteStatus::pass || status == SuiteStatus::hypothesis_not_met; }

    // record a check; a false condition fails the suite
    void check(bool ok, const std::string& what);
    void note(const std::string& what);
    // fold the assertions and stability factors into the status
    void finalize(double stability_limit = 2.0);
};

// max(a, b) / min(a, b); 1 when both vanish, ∞ when only one does
double stability_factor(double a, double b);

// constants present in both reports, as stability factors
std::map<std::string, double> compare_constants(const SuiteReport& coarse, const SuiteReport& fine);

nlohmann::json to_json(const SuiteReport& r, bool with_runtime = true);
void write_csv_header(std::ostream& out);
void write_csv(std::ostream& out, const SuiteReport& r);

}  // namespace dunkl::harness

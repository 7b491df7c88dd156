#pragma once

// Suite configuration: setup, grid, suites to run, sweep parameters, output, seed.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dunkl::harness {

// Configuration problems; the CLI maps these to exit code 2.
struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Exact rational, used so that Hölder relations can be checked without rounding.
struct Rational {
    long long num = 0, den = 1;

    Rational() = default;
    Rational(long long n, long long d = 1);
    static Rational parse(const std::string& text);  // "4/3", "2", "1.5"
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    Rational inverse() const;
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) { return a.num == b.num && a.den == b.den; }
    friend bool operator<(const Rational& a, const Rational& b);
};

void to_json(nlohmann::json& out, const Rational& r);
void from_json(const nlohmann::json& in, Rational& r);

// (p, p1, p2, p̃1, p̃2, p̄1, p̄2); the tilde and bar pairs default to (p1, p2)
struct ExponentTuple {
    Rational p, p1, p2, pt1, pt2, pb1, pb2;

    static ExponentTuple holder(Rational p1, Rational p2);  // p from 1/p = 1/p1 + 1/p2
    // 1/p = 1/p1 + 1/p2 = 1/p̃1 + 1/p̃2 = 1/p̄1 + 1/p̄2, exactly
    bool holder_consistent() const;
    // every exponent strictly between 1 and ∞
    bool leibniz_range() const;
};

void to_json(nlohmann::json& out, const ExponentTuple& e);
void from_json(const nlohmann::json& in, ExponentTuple& e);

// s = s1 + s2
struct SplitOrder {
    double s1, s2;
    double s() const { return s1 + s2; }
};

struct SweepConfig {
    std::vector<double> s{0.25, 0.5, 0.75};
    std::vector<SplitOrder> splits{{0.25, 0.25}, {0.5, 0.25}, {0.25, 0.5}};
    std::vector<ExponentTuple> exponents;            // Leibniz sweeps; defaults from SuiteConfig::defaults
    std::vector<ExponentTuple> paraproduct_exponents;  // only p1, p2 matter; p may drop below 1
    std::vector<std::string> families{"gauss-0.5", "gauss-1", "gauss-2", "x-gauss", "poly-gauss", "bump-annulus",
                                      "bump-ball"};
    std::vector<std::string> paraproducts{"pi1", "pi2", "pi3", "lowpass"};
    int J = 12;
    std::optional<double> L;  // default ⌈3 d_k⌉ + 1
};

struct SuiteConfig {
    std::vector<double> k{1.0};  // one entry per axis
    int n = 1025;
    double x_max = 20.0;
    std::vector<std::string> suites;
    SweepConfig sweep;
    bool refine = true;        // rerun on the grid with spacing halved
    std::string output;        // JSON report path (empty: stdout only)
    std::string csv;           // per-sample CSV path (optional)
    std::uint64_t seed = 20240611;

    int d() const { return static_cast<int>(k.size()); }
    double d_k() const;
    double L() const;

    static SuiteConfig defaults();
    // throws ConfigError
    void validate() const;
};

void to_json(nlohmann::json& out, const SuiteConfig& c);
// unknown keys are rejected; missing keys keep their defaults
SuiteConfig config_from_json(const nlohmann::json& in);
SuiteConfig load_config(const std::string& path);

}  // namespace dunkl::harness

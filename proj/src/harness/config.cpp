#include "dunkl/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <set>

namespace dunkl::harness {

namespace {

long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r)) throw ConfigError("exponent arithmetic overflows; use smaller fractions");
    return r;
}

}  // namespace

Rational::Rational(long long n, long long d) {
    if (d == 0) throw ConfigError("rational with zero denominator");
    if (d < 0) n = -n, d = -d;
    const long long g = std::gcd(n < 0 ? -n : n, d);
    num = n / (g ? g : 1);
    den = d / (g ? g : 1);
}

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ConfigError("empty exponent");
    try {
        if (const auto slash = text.find('/'); slash != std::string::npos) {
            std::size_t used = 0;
            const long long a = std::stoll(text.substr(0, slash), &used);
            if (used != slash) throw ConfigError("bad exponent '" + text + "'");
            const std::string rest = text.substr(slash + 1);
            const long long b = std::stoll(rest, &used);
            if (used != rest.size()) throw ConfigError("bad exponent '" + text + "'");
            return {a, b};
        }
        // decimal: read the digits exactly
        const auto dot = text.find('.');
        std::size_t used = 0;
        if (dot == std::string::npos) {
            const long long a = std::stoll(text, &used);
            if (used != text.size()) throw ConfigError("bad exponent '" + text + "'");
            return {a, 1};
        }
        const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const long long a = std::stoll(digits, &used);
        if (used != digits.size()) throw ConfigError("bad exponent '" + text + "'");
        long long den = 1;
        for (std::size_t i = dot + 1; i < text.size(); ++i) den = checked_mul(den, 10);
        return {a, den};
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const ConfigError*>(&e)) throw;
        throw ConfigError("bad exponent '" + text + "'");
    }
}

Rational Rational::inverse() const {
    if (num == 0) throw ConfigError("exponent 0 has no reciprocal");
    return {den, num};
}

std::string Rational::str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }

Rational operator+(const Rational& a, const Rational& b) {
    return {checked_mul(a.num, b.den) + checked_mul(b.num, a.den), checked_mul(a.den, b.den)};
}

bool operator<(const Rational& a, const Rational& b) { return checked_mul(a.num, b.den) < checked_mul(b.num, a.den); }

void to_json(nlohmann::json& out, const Rational& r) { out = r.str(); }

void from_json(const nlohmann::json& in, Rational& r) {
    if (in.is_string()) r = Rational::parse(in.get<std::string>());
    else if (in.is_number_integer()) r = Rational(in.get<long long>());
    else if (in.is_number()) r = Rational::parse(in.dump());
    else throw ConfigError("exponent must be a number or a string like \"4/3\"");
}

ExponentTuple ExponentTuple::holder(Rational p1, Rational p2) {
    const Rational p = (p1.inverse() + p2.inverse()).inverse();
    return {p, p1, p2, p1, p2, p1, p2};
}

bool ExponentTuple::holder_consistent() const {
    const Rational r = p.inverse();
    return p1.inverse() + p2.inverse() == r && pt1.inverse() + pt2.inverse() == r && pb1.inverse() + pb2.inverse() == r;
}

bool ExponentTuple::leibniz_range() const {
    const Rational one(1);
    for (const auto& q : {p, p1, p2, pt1, pt2, pb1, pb2})
        if (!(one < q)) return false;
    return true;
}

void to_json(nlohmann::json& out, const ExponentTuple& e) {
    out = {{"p", e.p}, {"p1", e.p1}, {"p2", e.p2}, {"pt1", e.pt1}, {"pt2", e.pt2}, {"pb1", e.pb1}, {"pb2", e.pb2}};
}

void from_json(const nlohmann::json& in, ExponentTuple& e) {
    static const std::set<std::string> known{"p", "p1", "p2", "pt1", "pt2", "pb1", "pb2"};
    for (const auto& [key, _] : in.items())
        if (!known.count(key)) throw ConfigError("unknown exponent key '" + key + "'");
    const auto p1 = in.at("p1").get<Rational>(), p2 = in.at("p2").get<Rational>();
    for (const auto& q : {p1, p2})
        if (!(Rational(0) < q)) throw ConfigError("exponents must be positive");
    e = ExponentTuple::holder(p1, p2);
    if (in.contains("p")) e.p = in.at("p").get<Rational>();
    if (in.contains("pt1")) e.pt1 = in.at("pt1").get<Rational>();
    if (in.contains("pt2")) e.pt2 = in.at("pt2").get<Rational>();
    if (in.contains("pb1")) e.pb1 = in.at("pb1").get<Rational>();
    if (in.contains("pb2")) e.pb2 = in.at("pb2").get<Rational>();
}

double SuiteConfig::d_k() const {
    double dk = d();
    for (double v : k) dk += 2.0 * v;
    return dk;
}

double SuiteConfig::L() const { return sweep.L ? *sweep.L : std::ceil(3.0 * d_k()) + 1.0; }

SuiteConfig SuiteConfig::defaults() {
    SuiteConfig c;
    c.sweep.exponents = {ExponentTuple::holder(4, 4), ExponentTuple::holder(3, 3)};
    auto mixed = ExponentTuple::holder(4, 2);
    mixed.pt1 = 2, mixed.pt2 = 4;
    c.sweep.exponents.push_back(mixed);
    c.sweep.paraproduct_exponents = {ExponentTuple::holder({4, 3}, {4, 3}), ExponentTuple::holder(2, 2),
                                     ExponentTuple::holder(4, 4)};
    return c;
}

void SuiteConfig::validate() const {
    if (k.empty()) throw ConfigError("setup: k must have at least one entry");
    for (double v : k)
        if (!(v >= 0.0) || !std::isfinite(v)) throw ConfigError("setup: multiplicities must be finite and >= 0");
    if (n < 3 || n % 2 == 0) throw ConfigError("grid: n must be odd and at least 3");
    if (!(x_max > 0.0) || !std::isfinite(x_max)) throw ConfigError("grid: x_max must be positive");
    // dense separable kernels: keep the per-axis matrix and the tensor size sane
    double total = 1.0;
    for (int i = 0; i < d(); ++i) total *= n;
    if (total > 5e6) throw ConfigError("grid: n^d exceeds the supported size");
    for (double s : sweep.s)
        if (!(s > 0.0) || !std::isfinite(s)) throw ConfigError("sweep: s values must be positive");
    for (const auto& sp : sweep.splits)
        if (!(sp.s1 > 0.0 && sp.s2 > 0.0)) throw ConfigError("sweep: split orders must be positive");
    for (const auto& e : sweep.exponents) {
        if (!e.holder_consistent()) throw ConfigError("sweep: exponent tuple violates 1/p = 1/p1 + 1/p2");
        if (!e.leibniz_range()) throw ConfigError("sweep: Leibniz exponents must lie strictly between 1 and infinity");
    }
    for (const auto& e : sweep.paraproduct_exponents) {
        if (!(e.p1.inverse() + e.p2.inverse() == e.p.inverse()))
            throw ConfigError("sweep: paraproduct exponents violate 1/p = 1/p1 + 1/p2");
        if (!(Rational(1) < e.p1 && Rational(1) < e.p2))
            throw ConfigError("sweep: paraproduct exponents need 1 < p1, p2 < infinity");
    }
    if (sweep.J < 1 || sweep.J > 40) throw ConfigError("sweep: J must lie in [1, 40]");
    if (sweep.L && !(*sweep.L > 3.0 * d_k())) throw ConfigError("sweep: L must exceed 3 d_k");
    if (sweep.families.empty()) throw ConfigError("sweep: empty test-function family");
}

void to_json(nlohmann::json& out, const SuiteConfig& c) {
    nlohmann::json splits = nlohmann::json::array();
    for (const auto& sp : c.sweep.splits) splits.push_back({{"s", sp.s()}, {"s1", sp.s1}, {"s2", sp.s2}});
    out = {{"setup", {{"d", c.d()}, {"k", c.k}}},
           {"grid", {{"n", c.n}, {"x_max", c.x_max}}},
           {"suites", c.suites},
           {"sweep",
            {{"s", c.sweep.s},
             {"splits", splits},
             {"exponents", c.sweep.exponents},
             {"paraproduct_exponents", c.sweep.paraproduct_exponents},
             {"families", c.sweep.families},
             {"paraproducts", c.sweep.paraproducts},
             {"J", c.sweep.J},
             {"L", c.L()}}},
           {"refine", c.refine},
           {"output", c.output},
           {"csv", c.csv},
           {"seed", c.seed}};
}

namespace {

void reject_unknown(const nlohmann::json& obj, const std::set<std::string>& known, const std::string& where) {
    if (!obj.is_object()) throw ConfigError(where + " must be an object");
    for (const auto& [key, _] : obj.items())
        if (!known.count(key)) throw ConfigError("unknown key '" + key + "' in " + where);
}

}  // namespace

SuiteConfig config_from_json(const nlohmann::json& in) {
    SuiteConfig c = SuiteConfig::defaults();
    try {
        reject_unknown(in, {"setup", "grid", "suites", "sweep", "refine", "output", "csv", "seed"}, "config");
        if (in.contains("setup")) {
            const auto& s = in["setup"];
            reject_unknown(s, {"d", "k"}, "setup");
            const int d = s.value("d", 1);
            if (d < 1) throw ConfigError("setup: d must be positive");
            if (s.contains("k")) {
                if (s["k"].is_array()) c.k = s["k"].get<std::vector<double>>();
                else c.k.assign(d, s["k"].get<double>());
            } else {
                c.k.assign(d, c.k.front());
            }
            if (static_cast<int>(c.k.size()) != d) throw ConfigError("setup: k must have d entries");
        }
        if (in.contains("grid")) {
            const auto& g = in["grid"];
            reject_unknown(g, {"n", "x_max"}, "grid");
            c.n = g.value("n", c.n);
            c.x_max = g.value("x_max", c.x_max);
        }
        if (in.contains("suites")) c.suites = in["suites"].get<std::vector<std::string>>();
        if (in.contains("sweep")) {
            const auto& s = in["sweep"];
            reject_unknown(s, {"s", "splits", "exponents", "paraproduct_exponents", "families", "paraproducts", "J", "L"},
                           "sweep");
            if (s.contains("s")) c.sweep.s = s["s"].get<std::vector<double>>();
            if (s.contains("splits")) {
                c.sweep.splits.clear();
                // [s1, s2] or {"s", "s1", "s2"}; an explicit s must equal s1 + s2
                for (const auto& sp : s["splits"]) {
                    if (sp.is_array() && sp.size() == 2) {
                        c.sweep.splits.push_back({sp[0].get<double>(), sp[1].get<double>()});
                    } else if (sp.is_object()) {
                        reject_unknown(sp, {"s", "s1", "s2"}, "split");
                        const SplitOrder o{sp.at("s1").get<double>(), sp.at("s2").get<double>()};
                        if (sp.contains("s") && std::abs(sp["s"].get<double>() - o.s()) > 1e-12)
                            throw ConfigError("sweep: split order needs s = s1 + s2");
                        c.sweep.splits.push_back(o);
                    } else {
                        throw ConfigError("sweep: splits are [s1, s2] pairs or {s, s1, s2} objects");
                    }
                }
            }
            if (s.contains("exponents")) c.sweep.exponents = s["exponents"].get<std::vector<ExponentTuple>>();
            if (s.contains("paraproduct_exponents"))
                c.sweep.paraproduct_exponents = s["paraproduct_exponents"].get<std::vector<ExponentTuple>>();
            if (s.contains("families")) c.sweep.families = s["families"].get<std::vector<std::string>>();
            if (s.contains("paraproducts")) c.sweep.paraproducts = s["paraproducts"].get<std::vector<std::string>>();
            c.sweep.J = s.value("J", c.sweep.J);
            if (s.contains("L")) c.sweep.L = s["L"].get<double>();
        }
        c.refine = in.value("refine", c.refine);
        c.output = in.value("output", c.output);
        c.csv = in.value("csv", c.csv);
        c.seed = in.value("seed", c.seed);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

SuiteConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config " + path);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError("config " + path + ": " + e.what());
    }
    return config_from_json(j);
}

}  // namespace dunkl::harness

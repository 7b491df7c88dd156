#pragma once

// Pieces shared by the suite implementations.

#include <cmath>
#include <memory>
#include <sstream>
#include <string>

#include "dunkl/diagnostics.hpp"
#include "dunkl/harness/config.hpp"
#include "dunkl/harness/report.hpp"
#include "dunkl/harness/suites.hpp"

namespace dunkl::harness::detail {

struct Level {
    std::shared_ptr<const TransformPlan> plan;
    const Grid& grid() const { return plan->grid(); }
};

inline Level base_level(const SuiteConfig& c) { return {shared_plan(c.k, c.n, c.x_max)}; }
inline Level fine_level(const SuiteConfig& c) { return {shared_plan(c.k, refined_n(c.n), c.x_max)}; }

// Library warnings raised while a suite runs end up in its notes.
class WarningCapture {
public:
    explicit WarningCapture(SuiteReport& r)
        : old_(set_warning_handler([&r](const std::string& m) { r.note("warning: " + m); })) {}
    ~WarningCapture() { set_warning_handler(std::move(old_)); }
    WarningCapture(const WarningCapture&) = delete;
    WarningCapture& operator=(const WarningCapture&) = delete;

private:
    WarningHandler old_;
};

// record a constant measured on the base and refined grids
inline void record_constant(SuiteReport& r, const std::string& name, double coarse, double fine) {
    r.constants[name] = coarse;
    r.constants[name + "@refined"] = fine;
    r.stability[name] = stability_factor(coarse, fine);
}

inline std::string fmt(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

inline double max_of(double a, double b) { return std::isnan(a) ? b : std::max(a, b); }

}  // namespace dunkl::harness::detail

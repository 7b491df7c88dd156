#pragma once

#include <functional>
#include <iostream>
#include <mutex>
#include <string>

namespace dunkl {

using WarningHandler = std::function<void(const std::string&)>;

namespace detail {
inline WarningHandler& warning_handler() {
    static WarningHandler h = [](const std::string& m) { std::clog << "dunkl: warning: " << m << '\n'; };
    return h;
}
inline std::mutex& warning_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace detail

// Replaces the sink for numerical warnings; returns the previous one.
inline WarningHandler set_warning_handler(WarningHandler h) {
    std::lock_guard lock(detail::warning_mutex());
    std::swap(detail::warning_handler(), h);
    return h;
}

inline void warn(const std::string& msg) {
    std::lock_guard lock(detail::warning_mutex());
    if (detail::warning_handler()) detail::warning_handler()(msg);
}

}  // namespace dunkl

#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dunkl {

// Thread cap from DUNKL_THREADS; 0 means "leave it to the runtime".
inline int thread_cap() {
    static const int cap = [] {
        const char* v = std::getenv("DUNKL_THREADS");
        if (!v) return 0;
        try {
            return std::max(0, std::stoi(v));
        } catch (...) {
            return 0;
        }
    }();
    return cap;
}

inline int worker_count() {
#ifdef _OPENMP
    const int cap = thread_cap();
    return cap > 0 ? cap : omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace dunkl

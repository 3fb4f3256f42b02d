#pragma once

#include <cstdlib>
#include <thread>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monomap::par {

// Worker count resolution order: explicit value > MONOMAP_WORKERS > hardware.
inline int default_workers() {
    if (const char* env = std::getenv("MONOMAP_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
#endif
}

inline int resolve_workers(int requested) {
    return requested >= 1 ? requested : default_workers();
}

// Runs body(i) for i in [0, n). Iterations must be independent; every kernel
// built on this produces identical results for any worker count.
template <typename F>
void parallel_for(int n, int workers, F&& body) {
#ifdef _OPENMP
    if (workers > 1 && n > 1) {
#pragma omp parallel for num_threads(workers) schedule(static)
        for (int i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
#endif
    for (int i = 0; i < n; ++i) {
        body(i);
    }
}

}  // namespace monomap::par

#include "qzeta/parallel.hpp"

#include <atomic>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qzeta::parallel {

namespace {

std::atomic<bool> g_enabled{[] {
#ifdef _OPENMP
    const char* env = std::getenv("QZETA_SERIAL");
    return !(env && env[0] == '1');
#else
    return false;
#endif
}()};

}  // namespace

bool enabled() { return g_enabled.load(std::memory_order_relaxed); }

void set_enabled(bool on) {
#ifndef _OPENMP
    on = false;
#endif
    g_enabled.store(on, std::memory_order_relaxed);
}

int worker_count() {
#ifdef _OPENMP
    return enabled() ? omp_get_max_threads() : 1;
#else
    return 1;
#endif
}

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
    if (enabled() && n > 1) {
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(n); ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace qzeta::parallel

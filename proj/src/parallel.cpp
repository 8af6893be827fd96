#include "wamr/parallel.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace wamr {

namespace {
int g_workers = 1;
}

void set_workers(int n) {
    g_workers = std::max(1, n);
#ifdef _OPENMP
    omp_set_num_threads(g_workers);
#endif
}

int workers() { return g_workers; }

RunMode run_mode() {
#ifdef _OPENMP
    return g_workers > 1 ? RunMode::OpenMP : RunMode::Serial;
#else
    return RunMode::Serial;
#endif
}

namespace detail {

void parallel_for_impl(size_t n, void* ctx, void (*fn)(void*, size_t)) {
    if (run_mode() == RunMode::OpenMP) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i) fn(ctx, static_cast<size_t>(i));
#endif
    } else {
        for (size_t i = 0; i < n; ++i) fn(ctx, i);
    }
}

}  // namespace detail
}  // namespace wamr

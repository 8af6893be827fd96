#ifndef WAMR_PARALLEL_HPP
#define WAMR_PARALLEL_HPP

#include <cstddef>

namespace wamr {

/// Execution mode for per-block loops. Serial is the reference path used to
/// validate the OpenMP path bit-for-bit; both produce identical results
/// because every task writes disjoint memory and reductions are ordered.
enum class RunMode { Serial, OpenMP };

void set_workers(int n);  // n == 1 selects the serial reference path
int workers();
RunMode run_mode();

namespace detail {
void parallel_for_impl(size_t n, void* ctx, void (*fn)(void*, size_t));
}

/// Run fn(i) for i in [0, n), serial or OpenMP depending on the mode.
template <typename F>
void parallel_for(size_t n, F&& fn) {
    auto thunk = [](void* ctx, size_t i) { (*static_cast<F*>(ctx))(i); };
    detail::parallel_for_impl(n, &fn, thunk);
}

}  // namespace wamr

#endif

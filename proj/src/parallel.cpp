#include "sdebayes/parallel.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sdebayes::par {

namespace {
std::atomic<int> g_max_threads{0};
}

void set_max_threads(int n) { g_max_threads.store(n < 0 ? 0 : n); }

int max_threads() {
#ifdef _OPENMP
    int cap = g_max_threads.load();
    int hw = omp_get_max_threads();
    return (cap == 0 || cap > hw) ? hw : cap;
#else
    return 1;
#endif
}

bool parallel_enabled() {
#ifdef _OPENMP
    return max_threads() > 1;
#else
    return false;
#endif
}

namespace detail {

void run_parallel(std::int64_t n, void (*trampoline)(void*, std::int64_t), void* ctx) {
#ifdef _OPENMP
    int nt = max_threads();
#pragma omp parallel for schedule(static) num_threads(nt)
    for (std::int64_t i = 0; i < n; ++i) trampoline(ctx, i);
#else
    for (std::int64_t i = 0; i < n; ++i) trampoline(ctx, i);
#endif
}

}  // namespace detail
}  // namespace sdebayes::par

#pragma once

#include <cstdint>

namespace sdebayes::par {

/// Caps the OpenMP team size for all parallel kernels. 0 restores the
/// hardware default. Setting 1 forces every kernel down its serial path,
/// which the consistency tests use to check that parallel and serial
/// execution produce bit-identical results.
void set_max_threads(int n);
int max_threads();

/// True when kernels will actually fan out (OpenMP built in and threads > 1).
bool parallel_enabled();

namespace detail {
void run_parallel(std::int64_t n, void (*trampoline)(void*, std::int64_t), void* ctx);
}

/// Runs body(i) for i in [0, n). Iterations must be independent; each writes
/// only its own output slot, so any reduction done afterwards over the output
/// buffer is deterministic regardless of the thread count.
template <class F>
void parallel_for(std::int64_t n, F&& body) {
    if (!parallel_enabled() || n < 2) {
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
    auto trampoline = [](void* ctx, std::int64_t i) { (*static_cast<F*>(ctx))(i); };
    detail::run_parallel(n, trampoline, &body);
}

}  // namespace sdebayes::par

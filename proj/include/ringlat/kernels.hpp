#pragma once

#include <atomic>
#include <cstdint>

#ifdef RINGLAT_HAVE_OPENMP
#include <omp.h>
#endif

#include "ringlat/zmod.hpp"

namespace ringlat::kernels {

// Global switch between the OpenMP kernels and the serial reference
// implementations. Both paths return identical results (smallest failing
// index wins); the tests assert this and the bench target compares them.
bool parallel_enabled();
void set_parallel(bool on);

struct ScanHit {
    bool found = false;
    u64 index = 0;
};

// Smallest index in [0, count) where pred returns false.
template <class Pred>
ScanHit first_fail_serial(u64 count, Pred&& pred) {
    for (u64 i = 0; i < count; ++i)
        if (!pred(i)) return {true, i};
    return {};
}

template <class Pred>
ScanHit first_fail_parallel(u64 count, Pred&& pred) {
#ifndef RINGLAT_HAVE_OPENMP
    return first_fail_serial(count, pred);
#else
    std::atomic<u64> best{count};
#pragma omp parallel for schedule(dynamic, 64)
    for (i64 i = 0; i < static_cast<i64>(count); ++i) {
        u64 idx = static_cast<u64>(i);
        if (idx >= best.load(std::memory_order_relaxed)) continue;
        if (!pred(idx)) {
            u64 cur = best.load(std::memory_order_relaxed);
            while (idx < cur &&
                   !best.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
            }
        }
    }
    u64 b = best.load();
    if (b < count) return {true, b};
    return {};
#endif
}

template <class Pred>
ScanHit first_fail(u64 count, Pred&& pred) {
    return parallel_enabled() ? first_fail_parallel(count, pred)
                              : first_fail_serial(count, pred);
}

// Deterministic table fill: out[i] = f(i) for i in [0, count).
template <class F>
void fill_table_serial(u64 count, u32* out, F&& f) {
    for (u64 i = 0; i < count; ++i) out[i] = f(i);
}

template <class F>
void fill_table_parallel(u64 count, u32* out, F&& f) {
#ifndef RINGLAT_HAVE_OPENMP
    fill_table_serial(count, out, f);
#else
#pragma omp parallel for schedule(dynamic, 16)
    for (i64 i = 0; i < static_cast<i64>(count); ++i)
        out[i] = f(static_cast<u64>(i));
#endif
}

template <class F>
void fill_table(u64 count, u32* out, F&& f) {
    if (parallel_enabled())
        fill_table_parallel(count, out, f);
    else
        fill_table_serial(count, out, f);
}

// Unordered pairs i < j over [0, n), flattened in lexicographic order.
inline u64 pair_count(u64 n) { return n < 2 ? 0 : n * (n - 1) / 2; }

inline void pair_at(u64 idx, u64 n, u32& i, u32& j) {
    // row i starts at i*n - i*(i+1)/2 - i... solve incrementally from a
    // closed-form first guess to avoid a linear scan.
    u64 lo = 0, hi = n - 1;
    while (lo < hi) {
        u64 mid = (lo + hi + 1) / 2;
        u64 start = mid * n - mid * (mid + 1) / 2;
        if (start <= idx)
            lo = mid;
        else
            hi = mid - 1;
    }
    i = static_cast<u32>(lo);
    u64 start = lo * n - lo * (lo + 1) / 2;
    j = static_cast<u32>(lo + 1 + (idx - start));
}

}  // namespace ringlat::kernels

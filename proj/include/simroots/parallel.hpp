#pragma once

// Deterministic chunked parallelism. The range is split on a fixed grid, a
// worker pool pulls chunk indices from an atomic counter, and the per-chunk
// results are combined strictly in chunk order. Output is therefore
// bit-identical for every worker count.

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "simroots/arith.hpp"

namespace simroots {

// Worker-count default: explicit value if nonzero, else SIMROOTS_WORKERS,
// else 1.
inline unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    if (const char* env = std::getenv("SIMROOTS_WORKERS")) {
        unsigned long v = std::strtoul(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    return 1;
}

struct ChunkRange {
    u64 lo;
    u64 hi;  // inclusive
};

inline std::vector<ChunkRange> make_chunks(u64 lo, u64 hi, u64 width) {
    std::vector<ChunkRange> chunks;
    if (lo > hi) return chunks;
    for (u64 a = lo; a <= hi;) {
        u64 b = (hi - a >= width - 1) ? a + (width - 1) : hi;
        chunks.push_back({a, b});
        if (b == hi) break;
        a = b + 1;
    }
    return chunks;
}

// map(chunk) -> Result for each chunk in parallel; combine(index, result)
// invoked sequentially in ascending chunk index on the calling thread.
template <class Result, class MapFn, class CombineFn>
void chunked_reduce(const std::vector<ChunkRange>& chunks, unsigned workers, MapFn map,
                    CombineFn combine) {
    workers = resolve_workers(workers);
    const std::size_t n = chunks.size();
    std::vector<Result> slots(n);
    std::atomic<std::size_t> next{0};
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            slots[i] = map(chunks[i]);
        }
    };
    if (workers <= 1 || n <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        unsigned count = workers < n ? workers : static_cast<unsigned>(n);
        pool.reserve(count);
        for (unsigned t = 0; t < count; ++t) pool.emplace_back(body);
        for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < n; ++i) combine(i, slots[i]);
}

inline constexpr u64 default_chunk_width = u64{1} << 20;

}  // namespace simroots

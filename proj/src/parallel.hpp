#pragma once

// Range-splitting helper shared by the exhaustive enumerators. Results are
// always merged by chunk index, so output never depends on scheduling.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace hychroma::detail {

/// Worker count: hardware concurrency, capped by HYCHROMA_THREADS when set.
inline unsigned worker_count() {
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("HYCHROMA_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && cap > 0) n = std::min(n, static_cast<unsigned>(cap));
    }
    return n;
}

struct ChunkRange {
    std::size_t index;
    std::uint64_t begin;
    std::uint64_t end;
};

/// Splits [0, total) into contiguous chunks and runs `fn(ChunkRange)` on each,
/// one thread per chunk. Returns the number of chunks. Small ranges run inline.
template <class Fn>
std::size_t parallel_chunks(std::uint64_t total, Fn&& fn, std::uint64_t min_chunk = 4096) {
    std::uint64_t chunks = std::min<std::uint64_t>(worker_count(), std::max<std::uint64_t>(1, total / min_chunk));
    chunks = std::max<std::uint64_t>(chunks, 1);
    const std::uint64_t step = total / chunks;
    auto range_of = [&](std::uint64_t c) {
        const std::uint64_t b = c * step;
        const std::uint64_t e = (c + 1 == chunks) ? total : b + step;
        return ChunkRange{static_cast<std::size_t>(c), b, e};
    };
    if (chunks == 1) {
        fn(range_of(0));
        return 1;
    }
    std::vector<std::exception_ptr> errors(chunks);
    {
        std::vector<std::jthread> workers;
        workers.reserve(chunks);
        for (std::uint64_t c = 0; c < chunks; ++c) {
            workers.emplace_back([&, c] {
                try {
                    fn(range_of(c));
                } catch (...) {
                    errors[c] = std::current_exception();
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return static_cast<std::size_t>(chunks);
}

/// Upper bound on chunk count for sizing per-chunk result arrays.
inline std::size_t max_chunks() { return worker_count(); }

}  // namespace hychroma::detail

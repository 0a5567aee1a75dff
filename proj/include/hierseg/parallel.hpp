#ifndef HIERSEG_PARALLEL_HPP
#define HIERSEG_PARALLEL_HPP

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hierseg {

// Worker count for internal parallel loops: HIERSEG_THREADS when it holds a
// positive integer (at most 256), the hardware concurrency otherwise.
inline unsigned thread_count() {
    if (const char* env = std::getenv("HIERSEG_THREADS")) {
        try {
            const long n = std::stol(env);
            if (n >= 1) return static_cast<unsigned>(std::min(n, 256L));
        } catch (const std::exception&) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

// Runs fn(begin, end) over contiguous blocks of [0, count). Blocks write
// disjoint outputs, so results do not depend on the worker count.
template <class Fn>
void parallel_for_blocks(std::size_t count, Fn&& fn, std::size_t min_block = 4096) {
    const std::size_t workers = std::min<std::size_t>(thread_count(), (count + min_block - 1) / std::max<std::size_t>(min_block, 1));
    if (workers <= 1) {
        fn(std::size_t{0}, count);
        return;
    }
    const std::size_t step = (count + workers - 1) / workers;
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t b = w * step;
        const std::size_t e = std::min(count, b + step);
        if (b < e) pool.emplace_back([&fn, b, e] { fn(b, e); });
    }
}

}  // namespace hierseg

#endif

#include "ncosc/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace ncosc {

int worker_thread_count() {
    int n = static_cast<int>(std::thread::hardware_concurrency());
    if (n < 1) n = 1;
    if (const char* env = std::getenv("NC_OSC_THREADS")) {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && cap >= 1)
            n = std::min<long>(n, cap);
    }
    return n;
}

int parallel_chunk_count(int n_items) {
    return std::max(1, std::min(worker_thread_count(), n_items));
}

void parallel_chunks(int n_items, const std::function<void(int, int, int)>& fn) {
    if (n_items <= 0) return;
    const int chunks = parallel_chunk_count(n_items);
    const int base = n_items / chunks;
    const int rem = n_items % chunks;
    auto range = [&](int c) {
        const int begin = c * base + std::min(c, rem);
        return std::pair{begin, begin + base + (c < rem ? 1 : 0)};
    };
    if (chunks == 1) {
        fn(0, 0, n_items);
        return;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    auto record_error = [&] {
        const std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
    };
    std::vector<std::thread> pool;
    pool.reserve(chunks - 1);
    for (int c = 1; c < chunks; ++c)
        pool.emplace_back([&, c] {
            try {
                const auto [b, e] = range(c);
                fn(c, b, e);
            } catch (...) {
                record_error();
            }
        });
    try {
        const auto [b, e] = range(0);
        fn(0, b, e);
    } catch (...) {
        record_error();
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace ncosc

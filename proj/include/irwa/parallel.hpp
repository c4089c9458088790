#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace irwa {

// Runs body(i) for i in [0, count) on up to `threads` workers. The first
// exception thrown by any body is rethrown on the calling thread once all
// workers have stopped. With threads <= 1 this is a plain loop.
inline void parallel_for_index(int count, int threads, const std::function<void(int)>& body) {
    if (count <= 0) {
        return;
    }
    const int workers = std::min(std::max(threads, 1), count);
    if (workers == 1) {
        for (int i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }

    std::atomic<int> next{0};
    std::mutex mu;
    std::exception_ptr first_error;

    auto run = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= count) {
                return;
            }
            {
                std::lock_guard<std::mutex> lock(mu);
                if (first_error) {
                    return;
                }
            }
            try {
                body(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!first_error) {
                    first_error = std::current_exception();
                }
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back(run);
    }
    for (auto& t : pool) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

}  // namespace irwa

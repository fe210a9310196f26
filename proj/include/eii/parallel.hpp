#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace eii {

/// Worker count from EII_THREADS, else the hardware concurrency.
inline int default_threads()
{
    if (const char* env = std::getenv("EII_THREADS")) {
        try {
            int n = std::stoi(env);
            if (n > 0)
                return n;
        } catch (...) {
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Calls fn(index, worker) for every index in [0, count). Work is handed out
/// dynamically, so callers must write results into per-index slots.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn)
{
    std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(1, threads)), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i, std::size_t{0});
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = next++; i < count && !failed; i = next++) {
                try {
                    fn(i, w);
                } catch (...) {
                    if (!failed.exchange(true))
                        failure = std::current_exception();
                }
            }
        });
    for (auto& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace eii

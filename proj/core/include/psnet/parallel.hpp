#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace psnet {

inline int resolve_threads(int requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? int(hw) : 1;
}

// Runs fn(task) for task in [0, n_tasks) on up to `threads` workers. Tasks must
// write only to task-owned state; any deterministic reduction happens after.
// The first exception thrown by a task is rethrown on the calling thread.
inline void parallel_for_tasks(long n_tasks, int threads, const std::function<void(long)>& fn) {
    threads = resolve_threads(threads);
    if (threads <= 1 || n_tasks <= 1) {
        for (long t = 0; t < n_tasks; ++t) fn(t);
        return;
    }
    std::atomic<long> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const long t = next.fetch_add(1);
            if (t >= n_tasks) return;
            try {
                fn(t);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int n_workers = int(std::min<long>(threads, n_tasks));
    pool.reserve(n_workers);
    for (int i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace psnet

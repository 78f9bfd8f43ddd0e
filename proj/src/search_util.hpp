#pragma once

// Internal helpers shared by the search engines.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace fanol2::detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}

    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

/// Sticky once expired; budget 0 never expires.
class Deadline {
public:
    explicit Deadline(double budget_seconds) : budget_(budget_seconds) {}

    bool expired()
    {
        if (hit_.load(std::memory_order_relaxed))
            return true;
        if (budget_ > 0 && clock_.seconds() > budget_) {
            hit_.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    bool hit() const { return hit_.load(std::memory_order_relaxed); }
    double elapsed() const { return clock_.seconds(); }

private:
    double budget_;
    Stopwatch clock_;
    std::atomic<bool> hit_{false};
};

/// Runs fn(task) for task in [0, tasks) on up to `workers` threads. Tasks are
/// handed out in increasing order; results must be stored per task.
inline void parallel_for(std::size_t tasks, unsigned workers, const std::function<void(std::size_t)>& fn)
{
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(tasks, 1))));
    if (workers == 1) {
        for (std::size_t t = 0; t < tasks; ++t)
            fn(t);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t t = next.fetch_add(1); t < tasks; t = next.fetch_add(1)) {
                try {
                    fn(t);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error)
                        error = std::current_exception();
                    next.store(tasks);
                }
            }
        });
    for (auto& th : pool)
        th.join();
    if (error)
        std::rethrow_exception(error);
}

} // namespace fanol2::detail

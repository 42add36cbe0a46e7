#pragma once

// Small deterministic parallel-for: results must be written by index, so the
// output never depends on scheduling.  The thread cap is process-global and
// set from the CLI's --threads flag.

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace cov {

inline int& thread_cap() {
    static int cap = 1;
    return cap;
}
inline void set_max_threads(int n) { thread_cap() = n < 1 ? 1 : n; }
inline int max_threads() { return thread_cap(); }

template <class F>
void parallel_for(int n, F f) {
    int workers = std::min(max_threads(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) f(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) f(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace cov

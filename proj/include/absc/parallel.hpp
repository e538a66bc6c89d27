#pragma once

#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

namespace absc {

inline int worker_count() {
    if (const char* env = std::getenv("ABSC_WORKERS")) {
        int n = std::atoi(env);
        if (n >= 1) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? (int)std::min(hw, 8u) : 1;
}

// Ordered parallel map over an index range; results are merged by index, so
// the output does not depend on the worker count.
template <class F>
auto parallel_map(int count, F f) {
    using R = decltype(f(0));
    std::vector<R> out(count);
    int workers = std::min(worker_count(), std::max(1, count));
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) out[i] = f(i);
        return out;
    }
    std::vector<std::future<void>> futs;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
        futs.push_back(std::async(std::launch::async, [&] {
            for (;;) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                out[i] = f(i);
            }
        }));
    for (auto& fu : futs) fu.get();
    return out;
}

}  // namespace absc

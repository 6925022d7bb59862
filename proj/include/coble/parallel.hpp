#pragma once

#include <functional>
#include <thread>
#include <vector>

namespace coble {

// Strided index-parallel loop; fn(i) must write only to slot i of any shared
// output so results are deterministic regardless of scheduling.
inline void parallel_for(long n, int jobs, const std::function<void(long)>& fn) {
    if (jobs <= 1 || n <= 1) {
        for (long i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> workers;
    for (int w = 0; w < jobs; ++w)
        workers.emplace_back([&, w] {
            for (long i = w; i < n; i += jobs) fn(i);
        });
    for (auto& t : workers) t.join();
}

}  // namespace coble

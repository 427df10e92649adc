#ifndef RSCOD_PARALLEL_HPP
#define RSCOD_PARALLEL_HPP

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace rsc {

// Runs `count` independent jobs on a worker pool and hands the results to
// `merge` in job order. Results are therefore independent of the worker
// count; jobs must not share mutable state.
template <typename Result, typename Job, typename Merge>
void parallel_jobs(std::uint64_t count, Job&& job, Merge&& merge, unsigned threads = 0) {
    if (threads == 0) threads = std::thread::hardware_concurrency();
    if (threads == 0) threads = 1;
    if (threads > count) threads = (unsigned)count;
    std::vector<Result> results((size_t)count);
    if (threads <= 1) {
        for (std::uint64_t i = 0; i < count; ++i) results[(size_t)i] = job(i);
    } else {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&] {
                while (true) {
                    std::uint64_t i = next.fetch_add(1);
                    if (i >= count) return;
                    results[(size_t)i] = job(i);
                }
            });
        for (auto& t : pool) t.join();
    }
    for (std::uint64_t i = 0; i < count; ++i) merge(results[(size_t)i]);
}

}  // namespace rsc

#endif

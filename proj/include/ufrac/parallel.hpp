#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace ufrac {

// Runs fn over [begin, end) on `workers` threads and hands each result to
// emit on the calling thread in ascending index order, so output is
// byte-identical no matter the worker count. A bounded reorder window keeps
// a fast worker from racing arbitrarily far ahead of the emitter.
template <typename Fn, typename Emit>
void parallel_for_ordered(std::uint64_t begin, std::uint64_t end, unsigned workers, Fn&& fn,
                          Emit&& emit) {
    using Result = std::invoke_result_t<Fn&, std::uint64_t>;
    if (begin >= end) return;
    if (workers <= 1 || end - begin == 1) {
        for (std::uint64_t i = begin; i < end; ++i) emit(i, fn(i));
        return;
    }

    const std::uint64_t window = std::uint64_t{8} * workers;
    std::mutex mu;
    std::condition_variable produced, drained;
    std::map<std::uint64_t, Result> ready;
    std::atomic<std::uint64_t> next{begin};
    std::uint64_t emitted = begin;  // guarded by mu

    unsigned n = static_cast<unsigned>(std::min<std::uint64_t>(workers, end - begin));
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) {
        pool.emplace_back([&] {
            while (true) {
                std::uint64_t i = next.fetch_add(1);
                if (i >= end) return;
                {
                    std::unique_lock lk(mu);
                    drained.wait(lk, [&] { return i < emitted + window; });
                }
                Result r = fn(i);
                {
                    std::lock_guard lk(mu);
                    ready.emplace(i, std::move(r));
                }
                produced.notify_one();
            }
        });
    }

    {
        std::unique_lock lk(mu);
        while (emitted < end) {
            produced.wait(lk, [&] { return ready.count(emitted) > 0; });
            auto node = ready.extract(emitted);
            lk.unlock();
            emit(emitted, std::move(node.mapped()));
            lk.lock();
            ++emitted;
            drained.notify_all();
        }
    }
    for (auto& th : pool) th.join();
}

}  // namespace ufrac

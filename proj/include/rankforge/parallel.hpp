#pragma once

#include <atomic>
#include <mutex>
#include <optional>
#include <thread>

#include "rankforge/linalg.hpp"

namespace rankforge {

template <typename T>
struct TrialOutcome {
    std::optional<T> result;
    std::uint64_t trials = 0;  // sequential index of the winning trial + 1, or max on failure
};

/// Runs independent trials 0..max_trials-1, each with its own generator seeded
/// by derive_seed(seed, trial), so the outcome does not depend on the worker
/// count: the lowest-index success wins.
template <typename Fn>
auto run_trials(std::uint64_t max_trials, std::uint64_t seed, unsigned workers, Fn&& fn)
    -> TrialOutcome<typename std::invoke_result_t<Fn, std::uint64_t, std::mt19937_64&>::value_type> {
    using T = typename std::invoke_result_t<Fn, std::uint64_t, std::mt19937_64&>::value_type;
    if (workers <= 1) {
        for (std::uint64_t i = 0; i < max_trials; ++i) {
            std::mt19937_64 rng(derive_seed(seed, i));
            if (auto res = fn(i, rng)) return {std::move(res), i + 1};
        }
        return {std::nullopt, max_trials};
    }
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{UINT64_MAX};
    std::optional<T> best_result;
    std::mutex best_mu;
    auto work = [&] {
        while (true) {
            std::uint64_t i = next.fetch_add(1);
            if (i >= max_trials || i > best.load()) return;
            std::mt19937_64 rng(derive_seed(seed, i));
            if (auto res = fn(i, rng)) {
                std::lock_guard<std::mutex> lock(best_mu);
                if (i < best.load()) {
                    best.store(i);
                    best_result = std::move(res);
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (best_result) return {std::move(best_result), best.load() + 1};
    return {std::nullopt, max_trials};
}

}  // namespace rankforge

#include "qemlab/games/estimate.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "qemlab/common.hpp"

namespace qemlab::games {

void run_trials(long trials, int threads, const std::function<void(long)>& fn) {
  require(fn != nullptr, "run_trials: no trial body");
  require(trials >= 0, "run_trials: negative trial count");
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = static_cast<int>(std::min<long>(threads, std::max<long>(trials, 1)));
  std::atomic<long> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const long t = next.fetch_add(1, std::memory_order_relaxed);
      if (t >= trials || failed.load(std::memory_order_relaxed)) return;
      try {
        fn(t);
      } catch (...) {
        {
          const std::scoped_lock lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(threads));
    for (int t = 0; t < threads; ++t) workers.emplace_back(worker);
    for (auto& w : workers) w.join();
  }
  if (first_error) std::rethrow_exception(first_error);
}

AdvantageEstimate estimate_advantage(const TrialRunner& runner, long trials, uint64_t seed,
                                     int threads, uint64_t stream_tag) {
  require(runner != nullptr, "estimate: no trial runner");
  require(trials >= 1, "estimate: trials must be positive");
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }

  // 2 * trials work items: item i is trial i/2 of world i%2. Results land in
  // preallocated slots so aggregation order is fixed regardless of threads.
  const long items = 2 * trials;
  std::vector<uint8_t> guesses(static_cast<size_t>(items));
  std::vector<double> stats(static_cast<size_t>(items));
  std::atomic<long> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (;;) {
      const long i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= items || failed.load(std::memory_order_relaxed)) return;
      const long trial = i / 2;
      const bool world1 = (i % 2) != 0;
      Rng rng = Rng::for_trial(seed, 2 * stream_tag + (world1 ? 1 : 0),
                               static_cast<uint64_t>(trial));
      try {
        const WorldOutcome out = runner(world1, rng);
        guesses[static_cast<size_t>(i)] = out.guess != 0 ? 1 : 0;
        stats[static_cast<size_t>(i)] = out.stat;
      } catch (...) {
        {
          const std::scoped_lock lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  const int pool = static_cast<int>(std::min<long>(threads, items));
  if (pool <= 1) {
    worker();
  } else {
    std::vector<std::thread> workers;
    workers.reserve(static_cast<size_t>(pool));
    for (int t = 0; t < pool; ++t) workers.emplace_back(worker);
    for (auto& w : workers) w.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  AdvantageEstimate est;
  est.trials = trials;
  long ones1 = 0, ones0 = 0;
  double stat1 = 0.0, stat0 = 0.0;
  for (long i = 0; i < items; ++i) {
    if (i % 2 != 0) {
      ones1 += guesses[static_cast<size_t>(i)];
      stat1 += stats[static_cast<size_t>(i)];
    } else {
      ones0 += guesses[static_cast<size_t>(i)];
      stat0 += stats[static_cast<size_t>(i)];
    }
  }
  const double t = static_cast<double>(trials);
  est.p_world1 = static_cast<double>(ones1) / t;
  est.p_world0 = static_cast<double>(ones0) / t;
  est.advantage = std::fabs(est.p_world1 - est.p_world0);
  est.mean_stat1 = stat1 / t;
  est.mean_stat0 = stat0 / t;
  const double var = est.p_world1 * (1.0 - est.p_world1) + est.p_world0 * (1.0 - est.p_world0);
  est.ci_halfwidth = std::max(1.96 * std::sqrt(var / t), 1.0 / t);
  return est;
}

}  // namespace qemlab::games

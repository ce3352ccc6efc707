#include "kgbh/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kgbh {

namespace {
std::atomic<int> g_jobs{0};
// Nested calls from a worker thread run serially.
thread_local bool t_in_worker = false;
}

int default_jobs() {
  const int j = g_jobs.load();
  if (j > 0) return j;
  if (const char* env = std::getenv("KGBH_JOBS")) {
    const int e = std::atoi(env);
    if (e > 0) return e;
  }
  return 1;
}

void set_jobs(int jobs) { g_jobs.store(jobs); }

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int jobs) {
  if (jobs <= 0) jobs = default_jobs();
  if (jobs == 1 || n < 2 || t_in_worker) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    t_in_worker = true;
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (!err) err = std::current_exception();
        next.store(n);
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t nt = std::min<std::size_t>(static_cast<std::size_t>(jobs), n);
  for (std::size_t t = 0; t < nt; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace kgbh

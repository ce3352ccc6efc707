#pragma once

#include <cstddef>
#include <functional>

namespace kgbh {

// Worker count: set_jobs() if called, else KGBH_JOBS, else 1.
int default_jobs();
void set_jobs(int jobs);

// Runs fn(i) for i in [0, n) on up to `jobs` threads; rethrows the first exception.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int jobs = 0);

}  // namespace kgbh

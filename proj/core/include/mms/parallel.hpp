#pragma once

#include <algorithm>
#include <thread>
#include <vector>

namespace mms {

inline int default_jobs() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

/// Run body(i) for i in [0, n). Work is split into contiguous chunks, one per
/// worker; outputs must go to disjoint slots so that the result is identical
/// for every job count.
template <class Body>
void parallel_for(int n, int jobs, Body&& body) {
  jobs = std::clamp(jobs, 1, std::max(1, n));
  if (jobs == 1 || n <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(jobs);
  const int chunk = (n + jobs - 1) / jobs;
  for (int w = 0; w < jobs; ++w) {
    const int lo = w * chunk;
    const int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    workers.emplace_back([lo, hi, &body] {
      for (int i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace mms

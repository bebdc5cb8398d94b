#include "hdw/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hdw {

namespace {

int initial_thread_count() {
  if (const char* env = std::getenv("HDW_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

std::atomic<int>& count_ref() {
  static std::atomic<int> count{initial_thread_count()};
  return count;
}

}  // namespace

int thread_count() { return count_ref().load(); }

void set_thread_count(int n) { count_ref().store(std::max(1, n)); }

void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)>& fn) {
  const int nthreads = std::min<std::size_t>(thread_count(), count ? count : 1);
  if (nthreads <= 1) {
    fn(0, count);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(static_cast<std::size_t>(nthreads));
  const std::size_t chunk = (count + nthreads - 1) / nthreads;
  for (int i = 0; i < nthreads; ++i) {
    const std::size_t b = std::min(count, static_cast<std::size_t>(i) * chunk);
    const std::size_t e = std::min(count, b + chunk);
    if (b >= e) break;
    workers.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& w : workers) w.join();
}

}  // namespace hdw

#include "ischur/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace ischur {

int thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ISCHUR_THREADS")) {
    try {
      int k = std::stoi(env);
      if (k > 0) return k;
    } catch (const std::exception&) {
      // Fall through to the hardware default on a malformed value.
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for(long count, int threads,
                  const std::function<void(long)>& fn) {
  if (count <= 0) return;
  threads = thread_count(threads);
  if (threads > count) threads = static_cast<int>(count);

  if (threads <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<long> next{0};
  std::exception_ptr first_error;
  std::mutex error_mu;

  auto worker = [&]() {
    for (;;) {
      long i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace ischur

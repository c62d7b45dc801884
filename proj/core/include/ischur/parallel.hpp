#pragma once

#include <functional>

namespace ischur {

// Resolves the number of worker threads.  A positive request wins; otherwise
// the ISCHUR_THREADS environment variable is consulted, and failing that the
// hardware concurrency.  The result is always at least 1.
int thread_count(int requested = 0);

// Runs fn(i) for every i in [0, count) on up to `threads` workers and blocks
// until all calls finish.  Work is handed out through a shared counter, so
// fn must be safe to call concurrently; deterministic output is obtained by
// writing results into pre-sized per-index slots.  The first exception thrown
// by any call is rethrown on the calling thread.
void parallel_for(long count, int threads, const std::function<void(long)>& fn);

}  // namespace ischur

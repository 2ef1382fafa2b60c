#ifndef UNICOMP_SRC_CHUNK_RUNNER_H_
#define UNICOMP_SRC_CHUNK_RUNNER_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "unicomp/haar_stream.h"
#include "unicomp/integrate.h"

namespace unicomp::internal {

// Calls body(chunk, substream, begin, end) for every chunk of kMcChunkSize
// draws. Chunk c always sees stream.substream(c); callers store per-chunk
// results and reduce them in chunk order. The first exception thrown by any
// chunk is rethrown after all workers stop.
template <typename Body>
void run_in_chunks(std::uint64_t n, const HaarStream& stream, int threads,
                   Body&& body) {
  const std::uint64_t n_chunks = (n + kMcChunkSize - 1) / kMcChunkSize;
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= n_chunks) return;
      HaarStream sub = stream.substream(c);
      const std::uint64_t begin = c * kMcChunkSize;
      const std::uint64_t end = std::min(n, begin + kMcChunkSize);
      try {
        body(c, sub, begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n_chunks);
        return;
      }
    }
  };

  const int workers = std::max(1, threads);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
}

inline std::uint64_t chunk_count(std::uint64_t n) {
  return (n + kMcChunkSize - 1) / kMcChunkSize;
}

}  // namespace unicomp::internal

#endif  // UNICOMP_SRC_CHUNK_RUNNER_H_

#pragma once

#include <thread>
#include <vector>

namespace alcove {

// Runs fn(begin, end) over contiguous chunks of [0, total). Chunk boundaries
// depend only on (total, workers), and callers merge per-chunk results in
// chunk order, so output is independent of scheduling.
template <typename Fn>
void for_chunks(std::size_t total, int workers, Fn&& fn) {
  if (workers <= 1 || total <= 1) {
    fn(std::size_t{0}, total);
    return;
  }
  const std::size_t w = std::min<std::size_t>(workers, total);
  std::vector<std::thread> threads;
  threads.reserve(w);
  const std::size_t chunk = (total + w - 1) / w;
  for (std::size_t t = 0; t < w; ++t) {
    const std::size_t b = t * chunk;
    const std::size_t e = std::min(total, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& th : threads) th.join();
}

}  // namespace alcove

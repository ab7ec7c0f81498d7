#pragma once

#include <atomic>
#include <condition_variable>
#include <cstdint>
#include <map>
#include <mutex>
#include <thread>
#include <vector>

namespace desmallworld::detail {

inline constexpr std::int64_t kSourceChunk = 64;

// Runs work(begin, end) over [0, n) split into fixed-size chunks. No result
// ordering; use only when chunk outputs go to disjoint slots.
template <class Work>
void parallel_chunks(int threads, std::int64_t n, std::int64_t chunk_size, Work&& work) {
  if (n <= 0) return;
  const std::int64_t chunks = (n + chunk_size - 1) / chunk_size;
  if (threads <= 1 || chunks == 1) {
    for (std::int64_t c = 0; c < chunks; ++c)
      work(c * chunk_size, std::min(n, (c + 1) * chunk_size));
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto body = [&] {
    for (;;) {
      const std::int64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      work(c * chunk_size, std::min(n, (c + 1) * chunk_size));
    }
  };
  std::vector<std::thread> pool;
  const int workers = static_cast<int>(std::min<std::int64_t>(threads, chunks));
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
}

// Splits [0, n) into fixed-size chunks, computes Partial = work(begin, end)
// in parallel and feeds partials to consume() strictly in chunk-index order.
// Chunk boundaries do not depend on the thread count, so floating-point
// reductions are bit-identical for every value of `threads`.
template <class Partial, class Work, class Consume>
void ordered_chunk_reduce(int threads, std::int64_t n, std::int64_t chunk_size, Work&& work,
                          Consume&& consume) {
  if (n <= 0) return;
  const std::int64_t chunks = (n + chunk_size - 1) / chunk_size;
  if (threads <= 1 || chunks == 1) {
    for (std::int64_t c = 0; c < chunks; ++c)
      consume(work(c * chunk_size, std::min(n, (c + 1) * chunk_size)), c);
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::mutex mu;
  std::condition_variable cv_ready;
  std::condition_variable cv_space;
  std::map<std::int64_t, Partial> done;
  std::int64_t consumed = 0;
  const std::int64_t window = 4 * static_cast<std::int64_t>(threads);

  auto body = [&] {
    for (;;) {
      const std::int64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      {
        std::unique_lock lk(mu);
        cv_space.wait(lk, [&] { return c - consumed < window; });
      }
      Partial p = work(c * chunk_size, std::min(n, (c + 1) * chunk_size));
      {
        std::lock_guard lk(mu);
        done.emplace(c, std::move(p));
      }
      cv_ready.notify_all();
    }
  };

  std::vector<std::thread> pool;
  const int workers = static_cast<int>(std::min<std::int64_t>(threads, chunks));
  pool.reserve(static_cast<std::size_t>(workers));
  for (int t = 0; t < workers; ++t) pool.emplace_back(body);

  {
    std::unique_lock lk(mu);
    while (consumed < chunks) {
      cv_ready.wait(lk, [&] { return done.contains(consumed); });
      auto node = done.extract(consumed);
      lk.unlock();
      consume(std::move(node.mapped()), consumed);
      lk.lock();
      ++consumed;
      cv_space.notify_all();
    }
  }
  for (auto& th : pool) th.join();
}

}  // namespace desmallworld::detail

#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace ajcable {

// Evaluates fn on every index with up to `threads` workers. Results come back
// in input order whatever the scheduling; the first exception is rethrown.
template <class Fn>
auto parallel_map(const std::vector<long>& indices, Fn fn, unsigned threads)
    -> std::vector<std::invoke_result_t<Fn, long>> {
  using Result = std::invoke_result_t<Fn, long>;
  std::vector<Result> out(indices.size());
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1U, threads), indices.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < indices.size(); ++i) out[i] = fn(indices[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < indices.size(); i = next++) {
        try {
          out[i] = fn(indices[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ajcable

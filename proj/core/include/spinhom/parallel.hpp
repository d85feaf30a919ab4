#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace spinhom {

// Worker count: SPINHOM_THREADS if set and positive, else hardware concurrency.
unsigned thread_count();

// Applies fn to every item on up to thread_count() threads; results keep input order.
template <class T, class Fn>
auto parallel_map(const std::vector<T>& items, Fn fn) -> std::vector<decltype(fn(items.front()))> {
  using R = decltype(fn(items.front()));
  std::vector<R> out(items.size());
  unsigned workers = std::min<std::size_t>(thread_count(), items.size());
  if (workers <= 1) {
    for (std::size_t k = 0; k < items.size(); ++k) out[k] = fn(items[k]);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t k = w; k < items.size(); k += workers) out[k] = fn(items[k]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace spinhom

#pragma once

// Evaluates a function over a list of weights, optionally on a pool of
// threads; results always come back in input order.

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "toric/lattice.hpp"

namespace toric {

template <typename F>
auto sweep(const std::vector<LatticeVector>& weights, F&& fn, bool parallel)
    -> std::vector<decltype(fn(weights.front()))> {
  using R = decltype(fn(weights.front()));
  std::vector<R> out(weights.size());
  if (!parallel || weights.size() < 2) {
    for (std::size_t i = 0; i < weights.size(); ++i) out[i] = fn(weights[i]);
    return out;
  }
  const std::size_t workers =
      std::min<std::size_t>(weights.size(), std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < weights.size(); i = next++) {
        try {
          out[i] = fn(weights[i]);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace toric

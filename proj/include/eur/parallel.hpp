#pragma once

#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace eur {

/// Calls fn(i) for i in [0, count). Worker w handles indices w, w + T, ...
/// so results stored by index are independent of the worker count. The
/// first exception (lowest index) is rethrown after all workers finish.
template <typename Fn>
void parallel_for_index(std::size_t count, std::size_t threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  if (threads > count) threads = count;
  std::vector<std::exception_ptr> errors(count);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::size_t w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += threads) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace eur

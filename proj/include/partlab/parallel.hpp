#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace partlab {

  // Runs body(i) for i in [0, count) on up to `workers` threads and returns
  // the results in index order, so the output never depends on scheduling.
  template <class Result, class Body>
  std::vector<Result> parallel_collect(std::size_t count, unsigned workers,
                                       Body&& body) {
    std::vector<Result> out(count);
    unsigned const threads
        = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, workers), count));
    if (threads <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        out[i] = body(i);
      }
      return out;
    }
    std::vector<std::exception_ptr> errors(threads);
    std::vector<std::thread>        pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += threads) {
            out[i] = body(i);
          }
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) {
      th.join();
    }
    for (auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return out;
  }

}  // namespace partlab

#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace deloop {

/// Runs body(i) for i < count under OpenMP; the first exception (by index) is rethrown afterwards.
template <class F>
void parallel_for(std::size_t count, F&& body) {
  std::vector<std::exception_ptr> errors(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < static_cast<long>(count); ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace deloop

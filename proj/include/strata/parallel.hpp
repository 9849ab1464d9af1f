#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace strata {

enum class Execution { Serial, Parallel };

/// out[i] = body(i) for i < count. Results land by index, so both modes give
/// the same vector. The first exception in index order is rethrown.
template <class T, class Body>
std::vector<T> map_indexed(std::size_t count, Execution mode, Body&& body) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  const bool parallel = mode == Execution::Parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t k = 0; k < static_cast<std::ptrdiff_t>(count); ++k) {
    const auto i = static_cast<std::size_t>(k);
    try {
      out[i] = body(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace strata

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <type_traits>
#include <vector>

namespace detthick {

/// Upper bound on worker threads. Defaults to DETTHICK_THREADS if set,
/// otherwise the hardware concurrency. 1 disables threading.
unsigned max_threads();
void set_max_threads(unsigned count);

namespace detail {
void run_indexed(std::size_t count, const std::function<void(std::size_t)>& body);
}

/// Applies `fn` to 0..count-1 and returns the results in index order, so the
/// output does not depend on scheduling.
template <class Fn>
auto parallel_map(std::size_t count, Fn&& fn) {
  using Result = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<Result> out(count);
  detail::run_indexed(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace detthick

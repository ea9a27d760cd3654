#include "sphere_search/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

namespace sphere_search {

std::size_t worker_count() {
  if (const char* env = std::getenv("SPHERE_SEARCH_THREADS")) {
    try {
      const long requested = std::stol(env);
      if (requested > 0) return static_cast<std::size_t>(requested);
    } catch (const std::exception&) {
      // Ignore unparsable values.
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::size_t parallel_chunks(
    std::size_t n,
    const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
  if (n == 0) return 0;
  const std::size_t chunks = std::min(worker_count(), n);
  const std::size_t per = (n + chunks - 1) / chunks;
  if (chunks == 1) {
    body(0, 0, n);
    return 1;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::size_t used = 0;
  {
    std::vector<std::jthread> threads;
    threads.reserve(chunks);
    for (std::size_t c = 0; c < chunks; ++c) {
      const std::size_t begin = c * per;
      const std::size_t end = std::min(n, begin + per);
      if (begin >= end) break;
      threads.emplace_back([&body, &errors, c, begin, end] {
        try {
          body(c, begin, end);
        } catch (...) {
          errors[c] = std::current_exception();
        }
      });
    }
    used = threads.size();
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  return used;
}

}  // namespace sphere_search

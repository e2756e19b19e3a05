#ifndef DELJOIN_COMMON_HPP
#define DELJOIN_COMMON_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace deljoin {

// Raised when a construction would produce more cells than the global cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an internal cross-check fails. Always an implementation bug,
// never a mathematical outcome.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when an involution is not free, not simplicial or not self-inverse.
class FreenessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultCellCap = 5'000'000;
inline constexpr std::size_t kDefaultIsoNodeCap = 500'000;

namespace detail {
inline std::atomic<std::size_t> g_cell_cap{kDefaultCellCap};
inline std::atomic<unsigned> g_threads{0};  // 0 = hardware concurrency
}  // namespace detail

inline std::size_t cell_cap() { return detail::g_cell_cap.load(std::memory_order_relaxed); }

inline void set_cell_cap(std::size_t cap) {
  if (cap < 1) throw std::invalid_argument("cell cap must be >= 1");
  detail::g_cell_cap.store(cap, std::memory_order_relaxed);
}

inline unsigned thread_count() {
  unsigned t = detail::g_threads.load(std::memory_order_relaxed);
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  return t;
}

inline void set_thread_count(unsigned threads) {
  if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
  detail::g_threads.store(threads, std::memory_order_relaxed);
}

inline void check_cap(std::size_t cells, const std::string& what) {
  if (cells > cell_cap()) {
    throw CapExceeded(what + ": " + std::to_string(cells) + " cells exceeds cap " +
                      std::to_string(cell_cap()));
  }
}

// Splits [0, n) into contiguous chunks and runs fn(chunk, begin, end) on
// up to thread_count() threads. Returns the number of chunks; callers merge
// per-chunk results in chunk order, which keeps output independent of the
// thread count.
template <class Fn>
std::size_t parallel_chunks(std::size_t n, Fn&& fn) {
  const std::size_t threads = std::min<std::size_t>(thread_count(), std::max<std::size_t>(n, 1));
  if (threads <= 1 || n < 64) {
    fn(std::size_t{0}, std::size_t{0}, n);
    return 1;
  }
  const std::size_t step = (n + threads - 1) / threads;
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t t = 0; t < threads; ++t) {
    const std::size_t begin = std::min(n, t * step);
    const std::size_t end = std::min(n, begin + step);
    pool.emplace_back([&, t, begin, end] {
      try {
        fn(t, begin, end);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return threads;
}

inline std::size_t chunk_count(std::size_t n) {
  const std::size_t threads = std::min<std::size_t>(thread_count(), std::max<std::size_t>(n, 1));
  return (threads <= 1 || n < 64) ? 1 : threads;
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace deljoin

#endif  // DELJOIN_COMMON_HPP

#pragma once

#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace epglab {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Input failed structural validation (bad Cayley table, malformed file, ...).
class validation_error : public std::runtime_error {
public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Parameter outside the documented domain (e.g. semidihedral n < 2).
class parameter_error : public std::invalid_argument {
public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Instance exceeds a configured capacity cap; carries the cap for reporting.
class capacity_error : public std::runtime_error {
public:
  capacity_error(const std::string& what, int cap) : std::runtime_error(what), cap_(cap) {}
  int cap() const { return cap_; }

private:
  int cap_;
};

/// Reads EPGLAB_THREADS; falls back to hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("EPGLAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs fn(i) for i in [0, count). Work items must be independent; results keyed
// by index stay deterministic regardless of the worker count.
inline void parallel_for(int count, const std::function<void(int)>& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<int> next{0};
  unsigned used = std::min<unsigned>(workers, static_cast<unsigned>(count));
  pool.reserve(used);
  for (unsigned w = 0; w < used; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1);
        if (i >= count) break;
        fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace epglab

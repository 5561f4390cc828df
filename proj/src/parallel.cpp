#include "symnet/parallel.hpp"

#include <cstdlib>

namespace symnet {

namespace {

unsigned from_env() noexcept {
  if (const char* env = std::getenv("QMC_THREADS"); env != nullptr) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 0;
}

std::atomic<unsigned>& setting() noexcept {
  static std::atomic<unsigned> threads{from_env()};
  return threads;
}

}  // namespace

void set_thread_count(unsigned threads) noexcept { setting().store(threads); }

unsigned thread_count() noexcept {
  const unsigned t = setting().load();
  if (t != 0) return t;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace symnet

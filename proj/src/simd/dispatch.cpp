#include <atomic>
#include <cstdlib>
#include <cstring>

#include "symnet/simd/kernels.hpp"

namespace symnet::simd {

namespace {

Isa detect() noexcept {
  if (const char* env = std::getenv("QMC_SIMD"); env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::scalar;
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() noexcept {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept { return current().load(std::memory_order_relaxed); }

void force_isa(Isa isa) noexcept { current().store(isa_available(isa) ? isa : Isa::scalar, std::memory_order_relaxed); }

const char* isa_name(Isa isa) noexcept { return isa == Isa::avx2 ? "avx2" : "scalar"; }

u128 warnock_row_sum(std::uint64_t den, std::uint64_t xi, std::uint64_t yi, std::span<const std::uint64_t> xs,
                     std::span<const std::uint64_t> ys) {
#if defined(__x86_64__) || defined(_M_X64)
  if (active_isa() == Isa::avx2 && den < (std::uint64_t{1} << 32)) return avx2::warnock_row_sum(den, xi, yi, xs, ys);
#endif
  return scalar::warnock_row_sum(den, xi, yi, xs, ys);
}

std::uint64_t count_below(std::span<const std::uint64_t> xs, std::span<const std::uint64_t> ys, std::uint64_t tx,
                          std::uint64_t ty) {
#if defined(__x86_64__) || defined(_M_X64)
  if (active_isa() == Isa::avx2) return avx2::count_below(xs, ys, tx, ty);
#endif
  return scalar::count_below(xs, ys, tx, ty);
}

}  // namespace symnet::simd

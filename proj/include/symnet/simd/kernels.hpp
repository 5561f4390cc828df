#pragma once

// Data-parallel inner loops of the discrepancy code.
//
// Each kernel has a scalar reference implementation and an AVX2 variant.
// The variant is picked once at runtime from CPUID; setting QMC_SIMD=scalar
// in the environment, or calling force_isa(), pins the scalar path. Both
// paths are integer-exact and must agree bit for bit.

#include <cstdint>
#include <span>

namespace symnet::simd {

enum class Isa { scalar, avx2 };

bool isa_available(Isa isa) noexcept;
/// ISA currently used by the dispatching entry points below.
Isa active_isa() noexcept;
/// Pins the dispatching entry points to an ISA; unavailable ISAs fall back to scalar.
void force_isa(Isa isa) noexcept;
const char* isa_name(Isa isa) noexcept;

using u128 = unsigned __int128;

/// sum_j (den - max(xi, xs[j])) * (den - max(yi, ys[j])).
/// Requires den < 2^32 and every coordinate <= den.
u128 warnock_row_sum(std::uint64_t den, std::uint64_t xi, std::uint64_t yi, std::span<const std::uint64_t> xs,
                     std::span<const std::uint64_t> ys);

/// #{j : xs[j] < tx and ys[j] < ty}. Coordinates must be below 2^63.
std::uint64_t count_below(std::span<const std::uint64_t> xs, std::span<const std::uint64_t> ys, std::uint64_t tx,
                          std::uint64_t ty);

namespace scalar {
u128 warnock_row_sum(std::uint64_t den, std::uint64_t xi, std::uint64_t yi, std::span<const std::uint64_t> xs,
                     std::span<const std::uint64_t> ys);
std::uint64_t count_below(std::span<const std::uint64_t> xs, std::span<const std::uint64_t> ys, std::uint64_t tx,
                          std::uint64_t ty);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
u128 warnock_row_sum(std::uint64_t den, std::uint64_t xi, std::uint64_t yi, std::span<const std::uint64_t> xs,
                     std::span<const std::uint64_t> ys);
std::uint64_t count_below(std::span<const std::uint64_t> xs, std::span<const std::uint64_t> ys, std::uint64_t tx,
                          std::uint64_t ty);
}  // namespace avx2
#endif

}  // namespace symnet::simd

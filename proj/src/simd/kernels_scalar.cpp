#include <algorithm>

#include "symnet/simd/kernels.hpp"

namespace symnet::simd::scalar {

u128 warnock_row_sum(std::uint64_t den, std::uint64_t xi, std::uint64_t yi, std::span<const std::uint64_t> xs,
                     std::span<const std::uint64_t> ys) {
  u128 acc = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) {
    const std::uint64_t dx = den - std::max(xi, xs[j]);
    const std::uint64_t dy = den - std::max(yi, ys[j]);
    acc += static_cast<u128>(dx) * dy;
  }
  return acc;
}

std::uint64_t count_below(std::span<const std::uint64_t> xs, std::span<const std::uint64_t> ys, std::uint64_t tx,
                          std::uint64_t ty) {
  std::uint64_t c = 0;
  for (std::size_t j = 0; j < xs.size(); ++j) c += static_cast<std::uint64_t>(xs[j] < tx) & static_cast<std::uint64_t>(ys[j] < ty);
  return c;
}

}  // namespace symnet::simd::scalar

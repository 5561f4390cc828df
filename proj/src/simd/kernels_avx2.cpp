// AVX2 variants. Functions carry a target attribute instead of the whole
// file being built with -mavx2, so nothing here can leak AVX2 code into
// paths taken on CPUs without it.

#include "symnet/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <algorithm>
#include <limits>

namespace symnet::simd::avx2 {

namespace {

__attribute__((target("avx2"))) inline std::uint64_t hsum_epi64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

__attribute__((target("avx2"))) inline u128 hsum_wide(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return static_cast<u128>(lanes[0]) + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

__attribute__((target("avx2"))) u128 warnock_row_sum(std::uint64_t den, std::uint64_t xi, std::uint64_t yi,
                                                     std::span<const std::uint64_t> xs,
                                                     std::span<const std::uint64_t> ys) {
  const std::size_t len = xs.size();
  const __m256i vden = _mm256_set1_epi64x(static_cast<long long>(den));
  const __m256i vxi = _mm256_set1_epi64x(static_cast<long long>(xi));
  const __m256i vyi = _mm256_set1_epi64x(static_cast<long long>(yi));

  // Each 64-bit lane accumulates products below den^2; flush before a lane can wrap.
  const std::uint64_t d2 = std::max<std::uint64_t>(den * den, 1);
  const std::uint64_t per_flush = std::max<std::uint64_t>(std::numeric_limits<std::uint64_t>::max() / d2, 1);

  u128 total = 0;
  __m256i acc = _mm256_setzero_si256();
  std::uint64_t pending = 0;
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs.data() + j));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ys.data() + j));
    const __m256i mx = _mm256_blendv_epi8(vxi, x, _mm256_cmpgt_epi64(x, vxi));
    const __m256i my = _mm256_blendv_epi8(vyi, y, _mm256_cmpgt_epi64(y, vyi));
    const __m256i dx = _mm256_sub_epi64(vden, mx);
    const __m256i dy = _mm256_sub_epi64(vden, my);
    acc = _mm256_add_epi64(acc, _mm256_mul_epu32(dx, dy));
    if (++pending == per_flush) {
      total += hsum_wide(acc);
      acc = _mm256_setzero_si256();
      pending = 0;
    }
  }
  total += hsum_wide(acc);
  for (; j < len; ++j) {
    const std::uint64_t dx = den - std::max(xi, xs[j]);
    const std::uint64_t dy = den - std::max(yi, ys[j]);
    total += static_cast<u128>(dx) * dy;
  }
  return total;
}

__attribute__((target("avx2"))) std::uint64_t count_below(std::span<const std::uint64_t> xs,
                                                          std::span<const std::uint64_t> ys, std::uint64_t tx,
                                                          std::uint64_t ty) {
  const std::size_t len = xs.size();
  const __m256i vtx = _mm256_set1_epi64x(static_cast<long long>(tx));
  const __m256i vty = _mm256_set1_epi64x(static_cast<long long>(ty));
  __m256i acc = _mm256_setzero_si256();
  std::size_t j = 0;
  for (; j + 4 <= len; j += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(xs.data() + j));
    const __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(ys.data() + j));
    const __m256i inside = _mm256_and_si256(_mm256_cmpgt_epi64(vtx, x), _mm256_cmpgt_epi64(vty, y));
    acc = _mm256_sub_epi64(acc, inside);  // inside lanes are all-ones, i.e. -1
  }
  std::uint64_t c = hsum_epi64(acc);
  for (; j < len; ++j) c += static_cast<std::uint64_t>(xs[j] < tx) & static_cast<std::uint64_t>(ys[j] < ty);
  return c;
}

}  // namespace symnet::simd::avx2

#endif

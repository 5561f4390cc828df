#pragma once

// Characters W_k on G^s and b-adic Walsh functions on [0,1]^s.
//
// Character values are powers of the primitive b-th root of unity and are
// carried as exponents mod b. Sums of character values are carried as
// residue counts (an element of Z[omega_b]); zero and integer tests on them
// are exact, via reduction modulo the b-th cyclotomic polynomial.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "symnet/badic.hpp"

namespace symnet {

/// Frequency vector k = (k_1, ..., k_s).
using KVector = std::vector<std::uint64_t>;

/// omega_b^e.
class UnityExponent {
 public:
  UnityExponent(Base base, std::uint64_t e) : base_(base), e_(static_cast<int>(e % static_cast<std::uint64_t>(base.value()))) {}

  Base base() const noexcept { return base_; }
  int exponent() const noexcept { return e_; }
  std::complex<double> value() const;

  UnityExponent operator*(UnityExponent o) const;
  UnityExponent conj() const;

  friend bool operator==(UnityExponent, UnityExponent) = default;

 private:
  Base base_;
  int e_;
};

/// W_k(z) = omega^(kappa_0 zeta_1 + kappa_1 zeta_2 + ...). Digits of k past the
/// precision of z pair with the tail digit of z.
UnityExponent character(std::uint64_t k, const GElement& z);

/// W_k(z) = prod_j W_{k_j}(z_j).
UnityExponent character(const KVector& k, const GVector& z);

/// wal_k(x) = W_k(sigma(x)); x must be representable by section().
UnityExponent walsh(const KVector& k, std::span<const Rational> x, Base base, int precision);
UnityExponent walsh(std::uint64_t k, const Rational& x, Base base, int precision);

/// Multiset of exponents: counts[r] values equal to omega^r.
class ResidueCounts {
 public:
  explicit ResidueCounts(Base base) : base_(base), counts_(static_cast<std::size_t>(base.value()), 0) {}

  void add(UnityExponent e, std::uint64_t times = 1) { counts_[static_cast<std::size_t>(e.exponent())] += times; }
  void merge(const ResidueCounts& other);

  Base base() const noexcept { return base_; }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  std::uint64_t total() const noexcept;

  /// Exact test: sum_r counts[r] omega^r == 0.
  bool is_zero() const;
  /// Exact test: sum_r counts[r] omega^r == v.
  bool equals(std::int64_t v) const;

  std::complex<double> value() const;

 private:
  Base base_;
  std::vector<std::uint64_t> counts_;
};

/// Coefficients of the b-th cyclotomic polynomial, lowest degree first.
std::vector<std::int64_t> cyclotomic_polynomial(int b);

struct CharacterSum {
  ResidueCounts counts;
  std::complex<double> value;  // compensated complex accumulation
};

/// sum over z in points of W_k(z).
CharacterSum character_sum(std::span<const GVector> points, const KVector& k);

}  // namespace symnet

#pragma once

// b-adic digit arithmetic on the truncated group G = (Z_b)^N.
//
// An element of G is stored as n explicit digits followed by a constant
// tail digit that repeats forever. A tail of 0 is the "zeros" tail; the
// constant streams e_l = (l, l, ...) have every digit and the tail equal
// to l. Every point produced by digital nets, symmetrization and digital
// shifts in this library stays inside this class, so arithmetic and the
// projection to [0,1] remain exact.

#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symnet/error.hpp"

namespace symnet {

using Digit = std::uint8_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Integer base b >= 2 (at most 255 so digits fit a byte).
class Base {
 public:
  explicit Base(int b);

  int value() const noexcept { return b_; }
  bool is_prime() const noexcept { return prime_; }

  friend bool operator==(Base, Base) = default;

 private:
  int b_;
  bool prime_;
};

/// b^e as an unsigned 64-bit integer; throws guard_exceeded on overflow.
std::uint64_t ipow(int b, int e);

/// Digits of a nonnegative integer, least significant first.
class DigitVec {
 public:
  DigitVec(Base base, std::uint64_t k);

  Base base() const noexcept { return base_; }
  std::span<const Digit> digits() const noexcept { return digits_; }
  std::size_t size() const noexcept { return digits_.size(); }
  Digit operator[](std::size_t i) const noexcept { return i < digits_.size() ? digits_[i] : Digit{0}; }
  std::uint64_t value() const;

 private:
  Base base_;
  std::vector<Digit> digits_;  // canonical: no high-order zeros
};

/// b-adic sum of digits of k.
std::uint64_t digit_sum(std::uint64_t k, Base base);

/// True iff the digit sum of k is divisible by b (membership in the set E).
bool in_E(std::uint64_t k, Base base);

class GElement {
 public:
  /// digits[i] is the (i+1)-th digit; the element has precision digits.size() >= 1.
  GElement(Base base, std::vector<Digit> digits, Digit tail = 0);

  static GElement zero(Base base, int precision);
  /// e_l = (l, l, l, ...).
  static GElement constant(Base base, int precision, Digit l);

  Base base() const noexcept { return base_; }
  int precision() const noexcept { return static_cast<int>(digits_.size()); }
  std::span<const Digit> digits() const noexcept { return digits_; }
  Digit tail() const noexcept { return tail_; }
  bool has_zero_tail() const noexcept { return tail_ == 0; }

  /// Digit at 0-based position i; positions past the precision read the tail.
  Digit digit(std::size_t i) const noexcept { return i < digits_.size() ? digits_[i] : tail_; }

  bool is_zero() const noexcept;

  /// 1-based position of the first nonzero digit; precision()+1 when only the
  /// tail is nonzero, and 0 for the zero element.
  int first_nonzero_position() const noexcept;

  friend bool operator==(const GElement&, const GElement&) = default;

 private:
  Base base_;
  std::vector<Digit> digits_;
  Digit tail_;
};

/// Digitwise addition / subtraction mod b, tails included.
GElement operator+(const GElement& a, const GElement& c);
GElement operator-(const GElement& a, const GElement& c);
GElement operator-(const GElement& a);

/// Projection pi: sum of digits b^-i plus the geometric tail contribution.
Rational project(const GElement& z);

/// Section sigma: the canonical expansion of x at the given precision.
///
/// Accepts x = 1 (mapped to e_{b-1}) and every x in [0,1) whose expansion is
/// n explicit digits followed by a constant tail c != b-1, i.e. every x with
/// x * b^n * (b-1) integral. Anything else is rejected as unsupported.
GElement section(const Rational& x, Base base, int precision);

class GVector {
 public:
  explicit GVector(std::vector<GElement> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  Base base() const noexcept { return coords_.front().base(); }
  int precision() const noexcept { return coords_.front().precision(); }

  const GElement& operator[](std::size_t j) const noexcept { return coords_[j]; }
  std::span<const GElement> coords() const noexcept { return coords_; }

  static GVector zero(Base base, int precision, std::size_t dim);
  /// e_l = (e_{l_1}, ..., e_{l_s}).
  static GVector constant(Base base, int precision, std::span<const Digit> l);

  friend bool operator==(const GVector&, const GVector&) = default;

 private:
  std::vector<GElement> coords_;
};

GVector operator+(const GVector& a, const GVector& c);
GVector operator-(const GVector& a, const GVector& c);

std::vector<Rational> project(const GVector& z);
GVector section(std::span<const Rational> x, Base base, int precision);

}  // namespace symnet

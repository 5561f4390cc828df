#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "symnet/badic.hpp"

namespace symnet {

/// Multiset of exact points in [0,1]^2 over one common denominator.
///
/// Coordinate i of point k is num / denominator(); multiplicities are kept.
class PointSet2 {
 public:
  PointSet2() = default;
  PointSet2(std::uint64_t denominator, std::vector<std::uint64_t> xs, std::vector<std::uint64_t> ys);

  /// Builds a set from exact rationals, choosing the least common denominator.
  static PointSet2 from_rationals(std::span<const std::pair<Rational, Rational>> points);

  std::size_t size() const noexcept { return xs_.size(); }
  bool empty() const noexcept { return xs_.empty(); }
  std::uint64_t denominator() const noexcept { return den_; }
  std::span<const std::uint64_t> xs() const noexcept { return xs_; }
  std::span<const std::uint64_t> ys() const noexcept { return ys_; }

  std::pair<Rational, Rational> point(std::size_t i) const;
  std::pair<double, double> point_double(std::size_t i) const;

  /// Divides out the gcd of the denominator and every numerator.
  PointSet2 reduced() const;

 private:
  std::uint64_t den_ = 1;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> ys_;
};

/// Exact multiset equality, independent of point order and denominators.
bool multiset_equal(const PointSet2& a, const PointSet2& b);

}  // namespace symnet

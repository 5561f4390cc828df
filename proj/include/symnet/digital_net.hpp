#pragma once

// Digital nets over Z_b with finite generating matrices plus a repeating
// tail row, Hammersley constructions and b-adic symmetrization.
//
// A generating matrix has n explicit rows and a tail row that repeats past
// row n. Plain matrices have a zero tail row; the all-ones columns of the
// symmetrizer extend through the tail row, which is what keeps matrix-level
// and point-level symmetrization identical.

#include <cstdint>
#include <span>
#include <vector>

#include "symnet/badic.hpp"
#include "symnet/point_set.hpp"

namespace symnet {

class GeneratingMatrix {
 public:
  /// entries are row-major, rows x cols; tail_row may be empty (all zeros).
  GeneratingMatrix(Base base, int rows, int cols, std::vector<Digit> entries, std::vector<Digit> tail_row = {});

  static GeneratingMatrix zeros(Base base, int rows, int cols);

  Base base() const noexcept { return base_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Digit at(int r, int c) const noexcept { return entries_[static_cast<std::size_t>(r * cols_ + c)]; }
  std::span<const Digit> row(int r) const noexcept {
    return {entries_.data() + static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_), static_cast<std::size_t>(cols_)};
  }
  /// Row r for any r >= 0; rows past the explicit ones read the tail row.
  std::span<const Digit> row_or_tail(int r) const noexcept { return r < rows_ ? row(r) : std::span<const Digit>(tail_); }
  std::span<const Digit> tail_row() const noexcept { return tail_; }
  bool has_zero_tail() const noexcept;

  std::span<const Digit> entries() const noexcept { return entries_; }

  friend bool operator==(const GeneratingMatrix&, const GeneratingMatrix&) = default;

 private:
  Base base_;
  int rows_;
  int cols_;
  std::vector<Digit> entries_;
  std::vector<Digit> tail_;
};

class DigitalNet {
 public:
  DigitalNet(Base base, std::vector<GeneratingMatrix> matrices);

  Base base() const noexcept { return base_; }
  int dim() const noexcept { return static_cast<int>(matrices_.size()); }
  int m() const noexcept { return matrices_.front().cols(); }
  int n() const noexcept { return matrices_.front().rows(); }
  std::uint64_t size() const { return ipow(base_.value(), m()); }

  const GeneratingMatrix& matrix(int j) const noexcept { return matrices_[static_cast<std::size_t>(j)]; }
  std::span<const GeneratingMatrix> matrices() const noexcept { return matrices_; }
  bool has_zero_tails() const noexcept;

  friend bool operator==(const DigitalNet&, const DigitalNet&) = default;

 private:
  Base base_;
  std::vector<GeneratingMatrix> matrices_;
};

/// Default cap on the number of points any enumeration may materialize.
inline constexpr std::uint64_t kDefaultMaxPoints = std::uint64_t{1} << 26;

/// Points z_0, ..., z_{b^m - 1} in index order; z_i uses the b-adic digits of i.
std::vector<GVector> enumerate_points(const DigitalNet& net, std::uint64_t max_points = kDefaultMaxPoints);

/// Two-dimensional Hammersley net: C_1 identity, C_2 anti-diagonal identity, n = m.
DigitalNet hammersley_matrices(Base base, int m);

/// D_j = (C_j, E_j): E_j carries a column of ones at position m+j through
/// every explicit row and the tail row.
DigitalNet symmetrize_matrices(const DigitalNet& net);

/// All z + e_l for l in Z_b^s. The output is l-major with l_1 varying fastest,
/// which coincides with the index order of symmetrize_matrices(net).
std::vector<GVector> symmetrize_points(std::span<const GVector> points);

/// Truncated symmetrized Hammersley net: n x (m+2) matrices, zero tail rows.
DigitalNet truncated_sym_hammersley(Base base, int m, int n);

/// Symmetrized Hammersley point set from its closed form, b^(m+2) points with
/// exact coordinates over the common denominator b^m (b-1).
PointSet2 sym_hammersley_points(Base base, int m);

/// Projection of two-dimensional G points to an exact point set.
PointSet2 project_points(std::span<const GVector> points);

/// A symmetrized net together with the inner net it was built from, which is
/// what characterizes its dual net.
class SymmetrizedNet {
 public:
  explicit SymmetrizedNet(DigitalNet inner);

  const DigitalNet& inner() const noexcept { return inner_; }
  const DigitalNet& net() const noexcept { return net_; }
  std::vector<GVector> points(std::uint64_t max_points = kDefaultMaxPoints) const { return enumerate_points(net_, max_points); }

 private:
  DigitalNet inner_;
  DigitalNet net_;
};

}  // namespace symnet

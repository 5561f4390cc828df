#pragma once

// Local discrepancy and L_p star discrepancy of two-dimensional point sets.
//
// Boxes are half-open, [0,t): a point with x_j == t_j is not counted. On
// the grid spanned by the distinct coordinates (plus 0 and 1) the box count
// is constant on every open cell, which is what all finite-p routines and the
// supremum sweep work from.

#include <cstdint>
#include <limits>

#include "symnet/badic.hpp"
#include "symnet/point_set.hpp"

namespace symnet {

enum class DiscrepancyMethod { warnock, piecewise_exact, quadrature, corner_sweep };

const char* method_name(DiscrepancyMethod m) noexcept;

struct DiscrepancyResult {
  double p = 2.0;  // +inf for the star discrepancy
  double value = 0.0;
  DiscrepancyMethod method = DiscrepancyMethod::warnock;
  double error_bound = 0.0;
};

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Default cap on grid cells visited by lp_star / linf_star.
inline constexpr std::uint64_t kDefaultMaxCells = std::uint64_t{1} << 26;

/// #{x in P : x_1 < t_1, x_2 < t_2} / N - t_1 t_2, exactly.
Rational local_discrepancy(const PointSet2& P, const Rational& t1, const Rational& t2);

/// L_2^2 exactly, from the closed-form double sum over point pairs.
Rational l2_star_squared(const PointSet2& P);
DiscrepancyResult l2_star(const PointSet2& P);

/// L_p^p exactly for even integer p, by summing polynomial cell integrals.
Rational lp_star_power_exact(const PointSet2& P, int p, std::uint64_t max_cells = kDefaultMaxCells);

/// Even integer p: exact cell integrals. Other p >= 1: per-cell adaptive
/// Gauss-Kronrod with a total error bound of at most 1e-10 on L_p^p.
DiscrepancyResult lp_star(const PointSet2& P, double p, std::uint64_t max_cells = kDefaultMaxCells);

/// sup_t |Delta(t)| exactly. The sup is often a limit that is not attained.
Rational linf_star_exact(const PointSet2& P, std::uint64_t max_cells = kDefaultMaxCells);
DiscrepancyResult linf_star(const PointSet2& P, std::uint64_t max_cells = kDefaultMaxCells);

/// b^-(m + 2(n-m-1)/p); p may be +inf.
double truncation_bound(Base base, int m, int n, double p);

}  // namespace symnet

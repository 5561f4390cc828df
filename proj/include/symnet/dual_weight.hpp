#pragma once

// Dual nets, the Dick weight mu_2 and the minimum Dick weight rho_2.
//
// Two independent routes to rho_2 are provided: exhaustive enumeration of
// low-weight frequency pairs (any base) and certification through linear
// independence of generating-matrix rows over the prime field Z_b.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symnet/digital_net.hpp"
#include "symnet/walsh.hpp"

namespace symnet {

inline constexpr std::uint64_t kDefaultMaxCandidates = std::uint64_t{1} << 26;

/// sum_j vec(k_j) C_j in Z_b^m. Digits of k_j past the explicit rows pair
/// with the tail row, so this is the syndrome for the infinite-row net.
std::vector<Digit> dual_syndrome(const DigitalNet& net, const KVector& k);

/// k in P^perp. Each k_j must be below b^n: digits past the stored rows are
/// rejected rather than silently paired with zero rows.
bool dual_contains(const DigitalNet& net, const KVector& k);

/// k in P^perp intersected with E^s, with P^perp taken for the infinite-row
/// net (rows past n read the tail row). This is the dual of the symmetrized net.
bool in_symmetrized_dual(const DigitalNet& inner, const KVector& k);

/// All k with k_j < b^digits whose syndrome vanishes, in lexicographic order.
/// Digits past the explicit rows pair with the tail row (the infinite-row
/// net), so digits may exceed n here, unlike dual_contains.
std::vector<KVector> dual_enumerate_below(const DigitalNet& net, int digits,
                                          std::uint64_t max_candidates = kDefaultMaxCandidates);

struct WeightProfile {
  std::uint64_t k = 0;
  std::vector<int> positions;  // a_1 > a_2 > ... > a_v, 1-based positions of nonzero digits
  int mu2 = 0;
};

WeightProfile mu2(std::uint64_t k, Base base);
int dick_weight(std::uint64_t k, Base base);
int dick_weight(const KVector& k, Base base);

struct Rho2Result {
  std::optional<int> rho2;  // empty when rho_2 exceeds the cap
  int cap = 0;
  std::uint64_t candidates = 0;
  std::string certified_by = "enumeration";

  bool exceeds_cap() const noexcept { return !rho2.has_value(); }
};

/// Minimum of mu_2(k_1) + mu_2(k_2) over nonzero dual vectors, if at most cap.
/// Requires s = 2, zero tail rows and 0 <= cap <= 2n.
Rho2Result rho2_min_weight(const DigitalNet& net, int cap, std::uint64_t max_candidates = kDefaultMaxCandidates);

/// Rank over Z_p of the given rows (p = base, prime).
int rank_mod_p(std::vector<std::vector<Digit>> rows, Base base);

/// Reference to row `index` (1-based) of generating matrix `matrix` (0-based).
struct RowRef {
  int matrix;
  int index;
};

/// Rows past the explicit ones are zero vectors.
bool rows_independent(const DigitalNet& net, std::span<const RowRef> rows);

struct IndependenceFailure {
  int family;
  std::string rows;
};

struct IndependenceReport {
  std::uint64_t sets_checked = 0;
  std::vector<IndependenceFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Checks the four row-set families that give the truncated symmetrized
/// Hammersley net its large minimum Dick weight. Requires a prime base and an
/// n x (m+2) two-dimensional net.
IndependenceReport check_independence_sets(const DigitalNet& net);

/// True when every row set whose truncated weight is at most rho is linearly
/// independent; true implies rho_2(net) > rho. Requires a prime base and s = 2.
bool certify_rho2_via_independence(const DigitalNet& net, int rho);

}  // namespace symnet

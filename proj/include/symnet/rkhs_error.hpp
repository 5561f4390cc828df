#pragma once

// Worst-case error of QMC rules in reproducing kernel Hilbert spaces, given
// by Walsh coefficients K^(k,l) of the kernel:
//
//   K(pi(z), pi(w)) = sum_{k,l} K^(k,l) W_k(z) conj(W_l(w)).
//
// Walsh functions jump at b-adic rationals, and so do these kernels. Kernels
// are therefore evaluated on G (at the digit level) rather than on [0,1],
// which is where the spectral identities hold pointwise.
//
// Two kernel families:
//  * band-limited: K^(k,l) = sum_r v_r(k) conj(v_r(l)) with k_j, l_j < b^K.
//    Positive semidefinite by construction; every sum is finite.
//  * diagonal smoothness-alpha: K^(k,k) = prod_j r_j(k_j), r_j(0) = 1 and
//    r_j(k) = gamma_j b^(-2 alpha a_1(k)), with a closed pointwise form.

#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "symnet/badic.hpp"
#include "symnet/digital_net.hpp"
#include "symnet/walsh.hpp"

namespace symnet {

using Complex = std::complex<double>;

class BandLimitedKernel {
 public:
  /// factors[r] has support() entries, indexed by flat_index(k).
  BandLimitedKernel(Base base, int s, int k_digits, std::vector<std::vector<Complex>> factors);

  /// K^ = delta at (0,0), i.e. K == 1.
  static BandLimitedKernel constant(Base base, int s);
  /// Random rank-`rank` kernel; entries complex normal, damped by the Dick
  /// weight of k so low frequencies dominate.
  static BandLimitedKernel random(Base base, int s, int k_digits, int rank, std::uint64_t seed);
  /// K^(k,l) = d[k] if k == l else 0, with d[k] >= 0.
  static BandLimitedKernel diagonal(Base base, int s, int k_digits, std::vector<double> d);

  Base base() const noexcept { return base_; }
  int dim() const noexcept { return s_; }
  int k_digits() const noexcept { return k_digits_; }
  /// Number of frequency vectors in the support box, b^(K s).
  std::size_t support() const noexcept { return support_; }
  bool is_diagonal() const noexcept { return diagonal_; }
  /// Factor count: the rank for factored kernels, support() for diagonal ones.
  std::size_t rank() const noexcept { return diagonal_ ? support_ : factors_.size(); }
  /// Entry k of factor r (for diagonal kernels factor r is sqrt(d[r]) e_r).
  Complex factor(std::size_t r, std::size_t k) const;

  std::size_t flat_index(const KVector& k) const;
  KVector frequency(std::size_t index) const;

  Complex coeff(std::size_t k, std::size_t l) const;
  Complex coeff(const KVector& k, const KVector& l) const { return coeff(flat_index(k), flat_index(l)); }

 private:
  Base base_;
  int s_;
  int k_digits_;
  std::uint64_t per_coord_;
  std::size_t support_;
  std::vector<std::vector<Complex>> factors_;
  bool diagonal_ = false;
  std::vector<double> diag_;
};

class SpectralDiagonalKernel {
 public:
  SpectralDiagonalKernel(Base base, double alpha, std::vector<double> gamma);

  Base base() const noexcept { return base_; }
  int dim() const noexcept { return static_cast<int>(gamma_.size()); }
  double alpha() const noexcept { return alpha_; }
  const std::vector<double>& gamma() const noexcept { return gamma_; }

  /// r_j(k) for one coordinate.
  double coeff(int j, std::uint64_t k) const;
  /// prod_j r_j(k_j).
  double coeff(const KVector& k) const;

  /// phi(z) = sum_{k >= 1} b^(-2 alpha a_1(k)) W_k(z), as a function of the
  /// first nonzero position i0 of z (0 for the zero element).
  double phi_at(int i0) const;
  double phi(const GElement& z) const { return phi_at(z.first_nonzero_position()); }

 private:
  Base base_;
  double alpha_;
  std::vector<double> gamma_;
};

using Kernel = std::variant<BandLimitedKernel, SpectralDiagonalKernel>;

Base kernel_base(const Kernel& kernel);
int kernel_dim(const Kernel& kernel);

/// K(pi(z), pi(w)).
Complex kernel_eval(const Kernel& kernel, const GVector& z, const GVector& w);
/// K(x, y) for representable rational points, through the section map.
Complex kernel_eval(const Kernel& kernel, std::span<const Rational> x, std::span<const Rational> y);

/// Smallest n with x b^n (b-1) an integer, i.e. the precision section() needs.
int representable_precision(const Rational& x, Base base);

enum class WceMethod { direct, spectral, monte_carlo };

const char* method_name(WceMethod m) noexcept;

struct WceResult {
  double value = 0.0;  // e^2, clamped at 0
  WceMethod method = WceMethod::direct;
  double tail_bound = 0.0;  // spectral: omitted tail (0, both families sum exactly); Monte Carlo: standard error
  std::uint64_t terms_used = 0;
  double raw = 0.0;      // before clamping
  bool clamped = false;  // raw < 0 was replaced by 0
};

/// e^2 from the three-term formula
///   int int K - (2/N) Re sum_z int K(z, y) dy + (1/N^2) sum_{z,w} K(z, w).
WceResult wce_direct(std::span<const GVector> points, const Kernel& kernel);

/// e^2 = sum over k, l in the dual of the symmetrized net, minus 0, of K^(k,l).
/// Needs an inner net with zero tail rows for the diagonal family.
WceResult wce_spectral(const SymmetrizedNet& net, const Kernel& kernel,
                       std::uint64_t max_candidates = std::uint64_t{1} << 26);

/// Digital-shift-invariant kernel: K^(k,l) with the off-diagonal part removed.
Kernel ds_invariant_coeffs(const Kernel& kernel);

/// Mean square worst-case error under a random digital shift, spectrally.
WceResult ms_wce_spectral(const SymmetrizedNet& net, const Kernel& kernel,
                          std::uint64_t max_candidates = std::uint64_t{1} << 26);

/// Average of wce_direct over `shifts` random digital shifts; tail_bound
/// carries the standard error of the mean.
WceResult ms_wce_monte_carlo(std::span<const GVector> points, const Kernel& kernel, int shifts, std::uint64_t seed);

/// Uniform shift with `precision` random digits per coordinate and a zeros tail.
GVector random_shift_vector(Base base, int s, int precision, std::mt19937_64& rng);
/// x + sigma for every x, with one sigma drawn from `seed`.
std::vector<GVector> random_digital_shift(std::span<const GVector> points, std::uint64_t seed);

enum class IntegrandKind { constant, product_linear, product_quadratic, product_exp, walsh };

struct Integrand {
  IntegrandKind kind = IntegrandKind::constant;
  double c = 0.0;  // product_quadratic: prod (x_j^2 + c)
  KVector k;       // walsh
};

/// "constant", "product_linear", "product_quadratic:c", "product_exp", "walsh:k1,k2,...".
Integrand parse_integrand(const std::string& spec);

struct QmcEstimate {
  double estimate = 0.0;
  double exact = 0.0;
};

/// (1/N) sum f(pi(z)); Walsh integrands are evaluated on G.
QmcEstimate qmc_integrate(std::span<const GVector> points, const Integrand& f);

}  // namespace symnet

#include "doctest.h"

#include <cmath>
#include <random>

#include "property_checks.hpp"
#include "symnet/rkhs_error.hpp"

using namespace symnet;

namespace {
SymmetrizedNet sym_ham(int b, int m) { return SymmetrizedNet(hammersley_matrices(Base(b), m)); }

// f(z) = sum_k v(k) W_k(z) over the support box of the kernel's first factor
Complex factor_function(const BandLimitedKernel& K, const GVector& z) {
  Complex acc = 0;
  for (std::size_t i = 0; i < K.support(); ++i) acc += K.factor(0, i) * character(K.frequency(i), z).value();
  return acc;
}
}  // namespace

TEST_CASE("phi closed form") {
  SpectralDiagonalKernel K(Base(2), 1.0, {1.0, 1.0});
  CHECK(K.phi_at(0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(K.phi_at(2) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(K.phi_at(1) == doctest::Approx(-0.25).epsilon(1e-15));
  CHECK_THROWS_AS(SpectralDiagonalKernel(Base(2), 0.5, {1.0}), Error);
}

TEST_CASE("phi matches its truncated Walsh series") {
  for (int b : {2, 3})
    for (double alpha : {1.0, 1.5}) {
      Base base(b);
      SpectralDiagonalKernel K(base, alpha, {1.0});
      const int T = b == 2 ? 14 : 9;
      for (int i0 = 0; i0 <= 5; ++i0)
        for (int d = 1; d < b; ++d) {
          std::vector<Digit> ds(16, 0);
          if (i0 > 0) ds[static_cast<std::size_t>(i0 - 1)] = static_cast<Digit>(d);
          ds[7] = 1;  // later digits must not matter
          GElement z(base, ds);
          if (i0 == 0) z = GElement::zero(base, 16);
          double series = 0;
          for (std::uint64_t k = 1; k < ipow(b, T); ++k) {
            const int a1 = static_cast<int>(DigitVec(base, k).size());
            series += std::pow(b, -2.0 * alpha * a1) * character(k, z).value().real();
          }
          // the omitted terms a_1 > T sum to at most beta^T in absolute value
          CHECK(std::abs(K.phi(z) - series) <= std::pow(b, (1.0 - 2.0 * alpha) * T));
        }
    }
}

TEST_CASE("constant kernel integrates everything exactly") {
  Kernel K = BandLimitedKernel::constant(Base(2), 2);
  auto net = sym_ham(2, 2);
  auto pts = net.points();
  CHECK(wce_direct(pts, K).value == doctest::Approx(0.0));
  CHECK(wce_spectral(net, K).value == 0.0);
}

TEST_CASE("diagonal kernel values") {
  Kernel K = SpectralDiagonalKernel(Base(2), 1.0, {1.0, 1.0});
  auto n1 = sym_ham(2, 1);
  auto n2 = sym_ham(2, 2);
  CHECK(wce_direct(n1.points(), K).value == doctest::Approx(37.0 / 512.0).epsilon(1e-14));
  CHECK(wce_spectral(n1, K).value == doctest::Approx(37.0 / 512.0).epsilon(1e-14));
  CHECK(wce_direct(n2.points(), K).value == doctest::Approx(89.0 / 4096.0).epsilon(1e-14));
  CHECK(wce_spectral(n2, K).value == doctest::Approx(89.0 / 4096.0).epsilon(1e-14));
}

TEST_CASE("direct and spectral agree") {
  for (int b : {2, 3})
    for (int m = 1; m <= 2; ++m) {
      auto net = sym_ham(b, m);
      auto pts = net.points();
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Kernel K = BandLimitedKernel::random(Base(b), 2, 2, 2, seed);
        auto d = wce_direct(pts, K), s = wce_spectral(net, K);
        CHECK(std::abs(d.raw - s.raw) <= s.tail_bound + 1e-12);
      }
      Kernel D = SpectralDiagonalKernel(Base(b), 1.5, {0.7, 1.3});
      CHECK(std::abs(wce_direct(pts, D).raw - wce_spectral(net, D).raw) <= 1e-12);
    }
}

TEST_CASE("rank one kernel gives the squared integration error of its factor") {
  auto net = sym_ham(2, 1);
  auto pts = net.points();
  auto B = BandLimitedKernel::random(Base(2), 2, 2, 1, 9);
  Complex mean = 0;
  for (const auto& z : pts) mean += factor_function(B, z);
  mean /= static_cast<double>(pts.size());
  const double expect = std::norm(B.factor(0, 0) - mean);
  CHECK(wce_direct(pts, Kernel(B)).raw == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("kernel evaluation on rationals") {
  Kernel K = SpectralDiagonalKernel(Base(2), 1.0, {1.0});
  std::vector<Rational> x{Rational(1, 4)}, y{Rational(1, 4)}, z{Rational(3, 4)};
  // K(x, x) = 1 + phi(0)
  CHECK(kernel_eval(K, x, y).real() == doctest::Approx(1.5));
  // x - z differs first at position 1
  CHECK(kernel_eval(K, x, z).real() == doctest::Approx(0.75));
  CHECK(representable_precision(Rational(3, 8), Base(2)) == 3);
  // 1/2 = 0.111..._3 is all tail, but section() needs at least one digit
  CHECK(representable_precision(Rational(1, 2), Base(3)) == 1);
}

TEST_CASE("band kernels are hermitian") {
  auto B = BandLimitedKernel::random(Base(3), 2, 1, 3, 4);
  for (std::size_t k = 0; k < B.support(); ++k)
    for (std::size_t l = 0; l < B.support(); ++l) CHECK(std::abs(B.coeff(k, l) - std::conj(B.coeff(l, k))) < 1e-15);
  CHECK(B.flat_index(B.frequency(5)) == 5);
  CHECK_THROWS_AS(BandLimitedKernel::random(Base(2), 2, 13, 1, 1), Error);
}

TEST_CASE("shift-invariant part is invariant under digital shifts") {
  auto pts = sym_ham(2, 2).points();
  Kernel K = ds_invariant_coeffs(BandLimitedKernel::random(Base(2), 2, 2, 3, 12));
  const double base = wce_direct(pts, K).raw;
  for (std::uint64_t seed = 1; seed <= 4; ++seed)
    CHECK(wce_direct(random_digital_shift(pts, seed), K).raw == doctest::Approx(base).epsilon(1e-12));
}

TEST_CASE("digital shifts are seeded") {
  auto pts = sym_ham(3, 1).points();
  CHECK(random_digital_shift(pts, 5) == random_digital_shift(pts, 5));
  CHECK_FALSE(random_digital_shift(pts, 5) == random_digital_shift(pts, 6));
  Kernel K = BandLimitedKernel::random(Base(3), 2, 1, 2, 3);
  auto a = ms_wce_monte_carlo(pts, K, 20, 8), b = ms_wce_monte_carlo(pts, K, 20, 8);
  CHECK(a.value == b.value);
  CHECK(a.tail_bound == b.tail_bound);
}

TEST_CASE("integrands") {
  auto grid = checks::all_prefix_vectors(Base(2), 3, 2);
  auto est = qmc_integrate(grid, parse_integrand("product_linear"));
  CHECK(est.estimate == doctest::Approx(49.0 / 256.0).epsilon(1e-15));
  CHECK(est.exact == 0.25);
  CHECK(qmc_integrate(grid, parse_integrand("constant")).estimate == 1.0);
  auto q = parse_integrand("product_quadratic:0.5");
  CHECK(q.c == 0.5);
  CHECK(qmc_integrate(grid, q).exact == doctest::Approx(std::pow(1.0 / 3.0 + 0.5, 2)));

  auto ham = enumerate_points(hammersley_matrices(Base(2), 2));
  auto w = parse_integrand("walsh:1,2");
  CHECK(w.k == KVector{1, 2});
  CHECK(qmc_integrate(ham, w).estimate == 1.0);
  CHECK(qmc_integrate(ham, w).exact == 0.0);
  CHECK(qmc_integrate(ham, parse_integrand("walsh:1,1")).estimate == 0.0);
  CHECK_THROWS_AS(parse_integrand("cubic"), Error);
}

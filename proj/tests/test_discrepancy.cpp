#include "doctest.h"

#include <cmath>
#include <random>

#include "symnet/digital_net.hpp"
#include "symnet/discrepancy.hpp"

using namespace symnet;

namespace {
Rational q(long a, long b) { return Rational(a, b); }

PointSet2 single(std::uint64_t den, std::uint64_t x, std::uint64_t y) { return PointSet2(den, {x}, {y}); }

PointSet2 random_set(std::mt19937_64& rng, std::uint64_t den, std::size_t count) {
  std::vector<std::uint64_t> xs(count), ys(count);
  for (std::size_t i = 0; i < count; ++i) {
    xs[i] = rng() % (den + 1);
    ys[i] = rng() % (den + 1);
  }
  return PointSet2(den, xs, ys);
}
}  // namespace

TEST_CASE("local discrepancy") {
  auto origin = single(1, 0, 0);
  CHECK(local_discrepancy(origin, q(1, 2), q(1, 2)) == q(3, 4));
  // half-open boxes: a point on the boundary is outside
  auto mid = single(2, 1, 1);
  CHECK(local_discrepancy(mid, q(1, 2), q(1, 2)) == q(-1, 4));
  CHECK(local_discrepancy(mid, q(3, 4), q(3, 4)) == q(7, 16));
  CHECK(local_discrepancy(mid, Rational(1), Rational(1)) == 0);
  CHECK_THROWS_AS(local_discrepancy(mid, q(3, 2), q(1, 2)), Error);
}

TEST_CASE("single point values") {
  auto origin = single(1, 0, 0);
  CHECK(l2_star_squared(origin) == q(11, 18));
  CHECK(lp_star_power_exact(origin, 2) == q(11, 18));
  CHECK(linf_star_exact(origin) == 1);
  CHECK(lp_star(origin, 1.0).value == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(linf_star_exact(single(2, 1, 1)) == q(3, 4));
  CHECK(linf_star(single(2, 1, 1)).value == 0.75);
  // a point at (1,1) is never counted
  CHECK(l2_star_squared(single(1, 1, 1)) == q(1, 9));
}

TEST_CASE("hammersley values") {
  auto ham = project_points(enumerate_points(hammersley_matrices(Base(2), 2)));
  CHECK(l2_star_squared(ham) == q(887, 18432));
  CHECK(lp_star_power_exact(ham, 2) == q(887, 18432));
  CHECK(lp_star_power_exact(ham, 4) == q(290453, 78643200));
  auto sym = sym_hammersley_points(Base(2), 1);
  CHECK(l2_star_squared(sym) == q(5, 288));
  CHECK(lp_star(ham, 4.0).value == doctest::Approx(std::pow(290453.0 / 78643200.0, 0.25)).epsilon(1e-14));
  CHECK(lp_star(ham, 4.0).method == DiscrepancyMethod::piecewise_exact);
}

TEST_CASE("closed form and cell integration agree") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    auto P = random_set(rng, 16 + static_cast<std::uint64_t>(t), 3 + static_cast<std::size_t>(t));
    CHECK(l2_star_squared(P) == lp_star_power_exact(P, 2));
    CHECK(l2_star(P).value == doctest::Approx(lp_star(P, 2.0).value).epsilon(1e-12));
  }
}

TEST_CASE("quadrature agrees with exact even powers") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 5; ++t) {
    auto P = random_set(rng, 32, 9);
    // p = 2.0000001 goes through quadrature and must sit next to p = 2
    auto near = lp_star(P, 2.0000001);
    CHECK(near.method == DiscrepancyMethod::quadrature);
    CHECK(near.value == doctest::Approx(lp_star(P, 2.0).value).epsilon(1e-6));
    CHECK(near.error_bound <= 1e-9);
  }
}

TEST_CASE("norms are ordered") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 8; ++t) {
    auto P = random_set(rng, 27, 7);
    const double l1 = lp_star(P, 1.0).value, l15 = lp_star(P, 1.5).value, l2 = lp_star(P, 2.0).value;
    const double l4 = lp_star(P, 4.0).value, li = linf_star(P).value;
    CHECK(l1 <= l15 + 1e-10);
    CHECK(l15 <= l2 + 1e-10);
    CHECK(l2 <= l4 + 1e-12);
    CHECK(l4 <= li + 1e-12);
  }
}

TEST_CASE("star discrepancy against a dense corner scan") {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 6; ++t) {
    const std::uint64_t den = 12;
    auto P = random_set(rng, den, 5);
    // sup over t on the grid j/den, approached from either side of each grid line
    Rational best = 0;
    for (std::uint64_t i = 0; i <= den; ++i)
      for (std::uint64_t j = 0; j <= den; ++j) {
        Rational t1(i, den), t2(j, den);
        Rational d = abs(local_discrepancy(P, t1, t2));
        best = std::max(best, d);
        // from above the grid line the count includes the boundary points
        std::size_t c = 0;
        for (std::size_t k = 0; k < P.size(); ++k) c += (P.xs()[k] <= i && P.ys()[k] <= j) ? 1 : 0;
        best = std::max(best, Rational(abs(Rational(c, P.size()) - t1 * t2)));
      }
    CHECK(linf_star_exact(P) == best);
  }
}

TEST_CASE("guards and preconditions") {
  CHECK_THROWS_AS(l2_star_squared(PointSet2()), Error);
  CHECK_THROWS_AS(lp_star(single(1, 0, 0), 0.5), Error);
  CHECK_THROWS_AS(lp_star_power_exact(single(1, 0, 0), 3), Error);
  auto ham = project_points(enumerate_points(hammersley_matrices(Base(2), 4)));
  try {
    lp_star(ham, 3.0, 10);
    FAIL("expected guard");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::guard_exceeded);
  }
}

TEST_CASE("truncation bound") {
  CHECK(truncation_bound(Base(2), 3, 8, 2.0) == std::ldexp(1.0, -7));
  CHECK(truncation_bound(Base(2), 3, 8, kInfinity) == 0.125);
  CHECK(truncation_bound(Base(3), 1, 3, 1.0) == doctest::Approx(1.0 / 27.0));
  CHECK_THROWS_AS(truncation_bound(Base(2), 3, 4, 2.0), Error);
}

TEST_CASE("quadrature L1 matches high-precision reference") {
  // 30-digit cell quadrature, frozen
  auto full = sym_hammersley_points(Base(2), 3);
  auto trunc = project_points(enumerate_points(truncated_sym_hammersley(Base(2), 3, 8)));
  auto a = lp_star(full, 1.0), b = lp_star(trunc, 1.0);
  CHECK(std::abs(a.value - 0.02636872517293980322) <= 1e-13);
  CHECK(std::abs(b.value - 0.02552795764252263303) <= 1e-13);
  CHECK(a.error_bound <= 1e-12);
}

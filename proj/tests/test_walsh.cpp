#include "doctest.h"

#include <random>

#include "property_checks.hpp"
#include "symnet/walsh.hpp"

using namespace symnet;

TEST_CASE("character spot values") {
  Base b2(2), b3(3);
  CHECK(character(0, GElement(b3, {2, 1})).exponent() == 0);
  CHECK(character(1, GElement(b2, {1, 0})).exponent() == 1);
  // k = 4 = (11)_3 against e_2: 2 + 2 = 1 mod 3
  CHECK(character(4, GElement::constant(b3, 3, 2)).exponent() == 1);
  // digits of k past the precision read the tail
  CHECK(character(4, GElement(b2, {0}, 1)).exponent() == 1);
  CHECK(character(4, GElement(b2, {1}, 0)).exponent() == 0);
}

TEST_CASE("character on constant streams depends on the digit sum") {
  for (int b : {2, 3, 5}) {
    Base base(b);
    for (std::uint64_t k = 0; k < 200; ++k)
      for (int l = 0; l < b; ++l)
        CHECK(character(k, GElement::constant(base, 3, static_cast<Digit>(l))).exponent() ==
              static_cast<int>((static_cast<std::uint64_t>(l) * digit_sum(k, base)) % static_cast<std::uint64_t>(b)));
  }
}

TEST_CASE("character is a homomorphism") {
  std::mt19937_64 rng(5);
  Base b3(3);
  std::uniform_int_distribution<int> d(0, 2);
  auto rand_vec = [&] {
    std::vector<GElement> cs;
    for (int j = 0; j < 2; ++j) {
      std::vector<Digit> ds(4);
      for (auto& x : ds) x = static_cast<Digit>(d(rng));
      cs.emplace_back(b3, ds, static_cast<Digit>(d(rng)));
    }
    return GVector(cs);
  };
  for (int t = 0; t < 100; ++t) {
    auto z = rand_vec(), w = rand_vec();
    KVector k{rng() % 500, rng() % 500};
    CHECK(character(k, z + w) == character(k, z) * character(k, w));
    CHECK(character(k, z - w) == character(k, z) * character(k, w).conj());
    CHECK(character(k, z) == character(k[0], z[0]) * character(k[1], z[1]));
  }
}

TEST_CASE("walsh functions") {
  Base b2(2), b3(3);
  CHECK(walsh(1, Rational(1, 2), b2, 3).exponent() == 1);
  CHECK(walsh(1, Rational(1, 3), b3, 2).exponent() == 1);
  CHECK(walsh(0, Rational(5, 8), b2, 3).exponent() == 0);
  CHECK(walsh(3, Rational(1), b2, 3).exponent() == 0);  // 1 -> e_1, digit sum 2
  std::vector<Rational> x{Rational(1, 4), Rational(3, 4)};
  CHECK(walsh(KVector{2, 3}, x, b2, 2) == character(KVector{2, 3}, section(x, b2, 2)));
  CHECK(walsh(KVector{2, 3}, x, b2, 2).value().real() == doctest::Approx(-1.0));
}

TEST_CASE("residue counts are exact") {
  Base b3(3);
  ResidueCounts c(b3);
  c.add(UnityExponent(b3, 0), 4);
  c.add(UnityExponent(b3, 1), 4);
  c.add(UnityExponent(b3, 2), 4);
  CHECK(c.is_zero());
  CHECK(c.total() == 12);
  c.add(UnityExponent(b3, 0), 2);
  CHECK(c.equals(2));
  CHECK_FALSE(c.is_zero());

  // base 4: 1 + i^2 = 0, and i alone is not an integer
  Base b4(4);
  ResidueCounts d(b4);
  d.add(UnityExponent(b4, 0));
  d.add(UnityExponent(b4, 2));
  CHECK(d.is_zero());
  d.add(UnityExponent(b4, 1));
  CHECK_FALSE(d.equals(0));
  CHECK_FALSE(d.equals(1));

  // base 6: 1 + w^2 + w^4 = 0 but 1 + w^3 = 0 too
  Base b6(6);
  ResidueCounts e(b6);
  e.add(UnityExponent(b6, 1));
  e.add(UnityExponent(b6, 4));
  CHECK(e.is_zero());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
}

TEST_CASE("empty character sum") {
  std::vector<GVector> none;
  auto s = character_sum(none, KVector{1});
  CHECK(s.counts.total() == 0);
  CHECK(std::abs(s.value) == 0.0);
}

TEST_CASE("character average is a delta") {
  for (int b : {2, 3})
    for (int n = 1; n <= 4; ++n) {
      CHECK(checks::characters_average_to_delta(Base(b), n, 1));
      if (ipow(b, n) <= 27) CHECK(checks::characters_average_to_delta(Base(b), n, 2));
    }
}

TEST_CASE("characters are orthonormal") {
  CHECK(checks::characters_orthonormal(Base(2), 3, 1));
  CHECK(checks::characters_orthonormal(Base(3), 2, 1));
  CHECK(checks::characters_orthonormal(Base(2), 2, 2));
}

TEST_CASE("full character sum detects vanishing prefix") {
  CHECK(checks::character_sum_detects_prefix(Base(2), 3, 1));
  CHECK(checks::character_sum_detects_prefix(Base(3), 2, 2));
}

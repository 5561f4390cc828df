#include "symnet/walsh.hpp"

#include <numbers>

#include "symnet/compensated.hpp"

namespace symnet {

namespace {

using Poly = std::vector<std::int64_t>;  // lowest degree first

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient of num by a monic divisor.
Poly divide_exact(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  trim(q);
  return q;
}

}  // namespace

std::complex<double> UnityExponent::value() const {
  if (e_ == 0) return {1.0, 0.0};
  const double ang = 2.0 * std::numbers::pi * e_ / base_.value();
  return {std::cos(ang), std::sin(ang)};
}

UnityExponent UnityExponent::operator*(UnityExponent o) const {
  require(o.base_ == base_, ErrorKind::incompatible, "character values in different bases");
  return UnityExponent(base_, static_cast<std::uint64_t>(e_ + o.e_));
}

UnityExponent UnityExponent::conj() const {
  return UnityExponent(base_, static_cast<std::uint64_t>((base_.value() - e_) % base_.value()));
}

UnityExponent character(std::uint64_t k, const GElement& z) {
  const auto b = static_cast<std::uint64_t>(z.base().value());
  std::uint64_t e = 0;
  for (std::size_t i = 0; k > 0; ++i, k /= b) e += (k % b) * z.digit(i);
  return UnityExponent(z.base(), e);
}

UnityExponent character(const KVector& k, const GVector& z) {
  require(k.size() == z.dim(), ErrorKind::incompatible, "dimension mismatch between k and z");
  UnityExponent acc(z.base(), 0);
  for (std::size_t j = 0; j < k.size(); ++j) acc = acc * character(k[j], z[j]);
  return acc;
}

UnityExponent walsh(const KVector& k, std::span<const Rational> x, Base base, int precision) {
  require(k.size() == x.size(), ErrorKind::incompatible, "dimension mismatch between k and x");
  return character(k, section(x, base, precision));
}

UnityExponent walsh(std::uint64_t k, const Rational& x, Base base, int precision) {
  return character(k, section(x, base, precision));
}

void ResidueCounts::merge(const ResidueCounts& other) {
  require(other.base_ == base_, ErrorKind::incompatible, "residue counts in different bases");
  for (std::size_t r = 0; r < counts_.size(); ++r) counts_[r] += other.counts_[r];
}

std::uint64_t ResidueCounts::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

std::vector<std::int64_t> cyclotomic_polynomial(int b) {
  require(b >= 1, ErrorKind::invalid_argument, "cyclotomic index must be positive");
  Poly p(static_cast<std::size_t>(b) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(b)] = 1;
  for (int d = 1; d < b; ++d)
    if (b % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  return p;
}

bool ResidueCounts::equals(std::int64_t v) const {
  const Poly phi = cyclotomic_polynomial(base_.value());
  std::vector<__int128> r(counts_.begin(), counts_.end());
  r[0] -= v;
  // Reduce modulo the monic cyclotomic polynomial; the remainder vanishes iff
  // the element is zero in Z[omega_b].
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = r.size(); i-- > deg;) {
    const __int128 c = r[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) r[i - deg + j] -= c * phi[j];
  }
  for (std::size_t i = 0; i < deg && i < r.size(); ++i)
    if (r[i] != 0) return false;
  return true;
}

bool ResidueCounts::is_zero() const { return equals(0); }

std::complex<double> ResidueCounts::value() const {
  CompensatedComplexSum acc;
  for (std::size_t r = 0; r < counts_.size(); ++r)
    if (counts_[r] != 0)
      acc.add(static_cast<double>(counts_[r]) * UnityExponent(base_, r).value());
  return acc.value();
}

CharacterSum character_sum(std::span<const GVector> points, const KVector& k) {
  if (points.empty()) {
    // No base to speak of; the empty sum is 0 in any base.
    return CharacterSum{ResidueCounts(Base(2)), {0.0, 0.0}};
  }
  ResidueCounts counts(points.front().base());
  for (const auto& z : points) counts.add(character(k, z));
  return CharacterSum{counts, counts.value()};
}

}  // namespace symnet

#include "symnet/badic.hpp"

#include <limits>
#include <string>

namespace symnet {

namespace {

bool trial_division_prime(int b) {
  if (b < 2) return false;
  for (int d = 2; d * d <= b; ++d)
    if (b % d == 0) return false;
  return true;
}

void check_compatible(const GElement& a, const GElement& c) {
  if (a.base() != c.base() || a.precision() != c.precision())
    fail(ErrorKind::incompatible, "incompatible elements");
}

void check_compatible(const GVector& a, const GVector& c) {
  if (a.dim() != c.dim()) fail(ErrorKind::incompatible, "incompatible elements");
}

}  // namespace

Base::Base(int b) : b_(b), prime_(trial_division_prime(b)) {
  require(b >= 2 && b <= 255, ErrorKind::invalid_argument, "base must lie in [2, 255], got " + std::to_string(b));
}

std::uint64_t ipow(int b, int e) {
  require(e >= 0, ErrorKind::invalid_argument, "negative exponent");
  std::uint64_t r = 1;
  const auto ub = static_cast<std::uint64_t>(b);
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / ub)
      fail(ErrorKind::guard_exceeded, "b^e overflows 64 bits");
    r *= ub;
  }
  return r;
}

DigitVec::DigitVec(Base base, std::uint64_t k) : base_(base) {
  const auto b = static_cast<std::uint64_t>(base.value());
  while (k > 0) {
    digits_.push_back(static_cast<Digit>(k % b));
    k /= b;
  }
}

std::uint64_t DigitVec::value() const {
  std::uint64_t v = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) v = v * static_cast<std::uint64_t>(base_.value()) + *it;
  return v;
}

std::uint64_t digit_sum(std::uint64_t k, Base base) {
  const auto b = static_cast<std::uint64_t>(base.value());
  std::uint64_t s = 0;
  for (; k > 0; k /= b) s += k % b;
  return s;
}

bool in_E(std::uint64_t k, Base base) { return digit_sum(k, base) % static_cast<std::uint64_t>(base.value()) == 0; }

GElement::GElement(Base base, std::vector<Digit> digits, Digit tail)
    : base_(base), digits_(std::move(digits)), tail_(tail) {
  require(!digits_.empty(), ErrorKind::invalid_argument, "precision must be at least 1");
  for (Digit d : digits_)
    require(d < base_.value(), ErrorKind::invalid_argument, "digit out of range for base");
  require(tail_ < base_.value(), ErrorKind::invalid_argument, "tail digit out of range for base");
}

GElement GElement::zero(Base base, int precision) {
  require(precision >= 1, ErrorKind::invalid_argument, "precision must be at least 1");
  return GElement(base, std::vector<Digit>(static_cast<std::size_t>(precision), 0), 0);
}

GElement GElement::constant(Base base, int precision, Digit l) {
  require(precision >= 1, ErrorKind::invalid_argument, "precision must be at least 1");
  return GElement(base, std::vector<Digit>(static_cast<std::size_t>(precision), l), l);
}

bool GElement::is_zero() const noexcept { return first_nonzero_position() == 0; }

int GElement::first_nonzero_position() const noexcept {
  for (std::size_t i = 0; i < digits_.size(); ++i)
    if (digits_[i] != 0) return static_cast<int>(i) + 1;
  return tail_ != 0 ? precision() + 1 : 0;
}

GElement operator+(const GElement& a, const GElement& c) {
  check_compatible(a, c);
  const int b = a.base().value();
  std::vector<Digit> out(a.digits().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Digit>((a.digits()[i] + c.digits()[i]) % b);
  return GElement(a.base(), std::move(out), static_cast<Digit>((a.tail() + c.tail()) % b));
}

GElement operator-(const GElement& a) {
  const int b = a.base().value();
  std::vector<Digit> out(a.digits().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Digit>((b - a.digits()[i]) % b);
  return GElement(a.base(), std::move(out), static_cast<Digit>((b - a.tail()) % b));
}

GElement operator-(const GElement& a, const GElement& c) {
  check_compatible(a, c);
  const int b = a.base().value();
  std::vector<Digit> out(a.digits().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Digit>((a.digits()[i] + b - c.digits()[i]) % b);
  return GElement(a.base(), std::move(out), static_cast<Digit>((a.tail() + b - c.tail()) % b));
}

Rational project(const GElement& z) {
  // pi(z) = (A*(b-1) + tail) / (b^n (b-1)) with A the integer spelled by the digits.
  const int b = z.base().value();
  BigInt a = 0;
  for (Digit d : z.digits()) a = a * b + d;
  BigInt den = 1;
  for (int i = 0; i < z.precision(); ++i) den *= b;
  den *= (b - 1);
  return Rational(a * (b - 1) + z.tail(), den);
}

GElement section(const Rational& x, Base base, int precision) {
  require(precision >= 1, ErrorKind::invalid_argument, "precision must be at least 1");
  require(x >= 0 && x <= 1, ErrorKind::invalid_argument, "section requires x in [0,1]");
  const int b = base.value();
  if (x == 1) return GElement::constant(base, precision, static_cast<Digit>(b - 1));

  BigInt scale = 1;
  for (int i = 0; i < precision; ++i) scale *= b;
  const Rational y = x * Rational(scale * (b - 1));
  if (boost::multiprecision::denominator(y) != 1) fail(ErrorKind::unsupported, "unsupported expansion");
  const BigInt yi = boost::multiprecision::numerator(y);
  // y = A (b-1) + c with 0 <= c < b-1; c is the repeating tail digit.
  const BigInt c = yi % (b - 1);
  BigInt a = (yi - c) / (b - 1);
  std::vector<Digit> digits(static_cast<std::size_t>(precision));
  for (int i = precision - 1; i >= 0; --i) {
    digits[static_cast<std::size_t>(i)] = static_cast<Digit>(static_cast<int>(a % b));
    a /= b;
  }
  return GElement(base, std::move(digits), static_cast<Digit>(static_cast<int>(c)));
}

GVector::GVector(std::vector<GElement> coords) : coords_(std::move(coords)) {
  require(!coords_.empty(), ErrorKind::invalid_argument, "GVector needs at least one coordinate");
  for (const auto& c : coords_)
    if (c.base() != coords_.front().base() || c.precision() != coords_.front().precision())
      fail(ErrorKind::incompatible, "GVector coordinates must share base and precision");
}

GVector GVector::zero(Base base, int precision, std::size_t dim) {
  return GVector(std::vector<GElement>(dim, GElement::zero(base, precision)));
}

GVector GVector::constant(Base base, int precision, std::span<const Digit> l) {
  std::vector<GElement> coords;
  coords.reserve(l.size());
  for (Digit d : l) coords.push_back(GElement::constant(base, precision, d));
  return GVector(std::move(coords));
}

GVector operator+(const GVector& a, const GVector& c) {
  check_compatible(a, c);
  std::vector<GElement> out;
  out.reserve(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) out.push_back(a[j] + c[j]);
  return GVector(std::move(out));
}

GVector operator-(const GVector& a, const GVector& c) {
  check_compatible(a, c);
  std::vector<GElement> out;
  out.reserve(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) out.push_back(a[j] - c[j]);
  return GVector(std::move(out));
}

std::vector<Rational> project(const GVector& z) {
  std::vector<Rational> out;
  out.reserve(z.dim());
  for (const auto& c : z.coords()) out.push_back(project(c));
  return out;
}

GVector section(std::span<const Rational> x, Base base, int precision) {
  require(!x.empty(), ErrorKind::invalid_argument, "empty point");
  std::vector<GElement> coords;
  coords.reserve(x.size());
  for (const auto& xi : x) coords.push_back(section(xi, base, precision));
  return GVector(std::move(coords));
}

}  // namespace symnet

#include "symnet/point_set.hpp"

#include <algorithm>
#include <numeric>

namespace symnet {

namespace {

constexpr std::uint64_t kMaxDenominator = std::uint64_t{1} << 62;

}  // namespace

PointSet2::PointSet2(std::uint64_t denominator, std::vector<std::uint64_t> xs, std::vector<std::uint64_t> ys)
    : den_(denominator), xs_(std::move(xs)), ys_(std::move(ys)) {
  require(den_ >= 1 && den_ <= kMaxDenominator, ErrorKind::invalid_argument, "point set denominator out of range");
  require(xs_.size() == ys_.size(), ErrorKind::invalid_argument, "coordinate arrays differ in length");
  for (std::size_t i = 0; i < xs_.size(); ++i)
    require(xs_[i] <= den_ && ys_[i] <= den_, ErrorKind::invalid_argument, "point outside [0,1]^2");
}

PointSet2 PointSet2::from_rationals(std::span<const std::pair<Rational, Rational>> points) {
  BigInt den = 1;
  for (const auto& [x, y] : points) {
    require(x >= 0 && x <= 1 && y >= 0 && y <= 1, ErrorKind::invalid_argument, "point outside [0,1]^2");
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
    den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(y));
    require(den <= kMaxDenominator, ErrorKind::unsupported, "common denominator exceeds 2^62");
  }
  std::vector<std::uint64_t> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& [x, y] : points) {
    xs.push_back(static_cast<std::uint64_t>(boost::multiprecision::numerator(x) * (den / boost::multiprecision::denominator(x))));
    ys.push_back(static_cast<std::uint64_t>(boost::multiprecision::numerator(y) * (den / boost::multiprecision::denominator(y))));
  }
  return PointSet2(static_cast<std::uint64_t>(den), std::move(xs), std::move(ys));
}

std::pair<Rational, Rational> PointSet2::point(std::size_t i) const {
  return {Rational(BigInt(xs_[i]), BigInt(den_)), Rational(BigInt(ys_[i]), BigInt(den_))};
}

std::pair<double, double> PointSet2::point_double(std::size_t i) const {
  const auto d = static_cast<double>(den_);
  return {static_cast<double>(xs_[i]) / d, static_cast<double>(ys_[i]) / d};
}

PointSet2 PointSet2::reduced() const {
  std::uint64_t g = den_;
  for (std::size_t i = 0; i < xs_.size() && g > 1; ++i) g = std::gcd(g, std::gcd(xs_[i], ys_[i]));
  std::vector<std::uint64_t> xs(xs_.size()), ys(ys_.size());
  for (std::size_t i = 0; i < xs_.size(); ++i) {
    xs[i] = xs_[i] / g;
    ys[i] = ys_[i] / g;
  }
  return PointSet2(den_ / g, std::move(xs), std::move(ys));
}

bool multiset_equal(const PointSet2& a, const PointSet2& b) {
  if (a.size() != b.size()) return false;
  const PointSet2 ra = a.reduced();
  const PointSet2 rb = b.reduced();
  if (ra.denominator() != rb.denominator()) return false;
  auto sorted_pairs = [](const PointSet2& p) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> v(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) v[i] = {p.xs()[i], p.ys()[i]};
    std::sort(v.begin(), v.end());
    return v;
  };
  return sorted_pairs(ra) == sorted_pairs(rb);
}

}  // namespace symnet

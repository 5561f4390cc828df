#include "symnet/digital_net.hpp"

#include <algorithm>
#include <string>

namespace symnet {

GeneratingMatrix::GeneratingMatrix(Base base, int rows, int cols, std::vector<Digit> entries, std::vector<Digit> tail_row)
    : base_(base), rows_(rows), cols_(cols), entries_(std::move(entries)), tail_(std::move(tail_row)) {
  require(rows_ >= 1 && cols_ >= 1, ErrorKind::invalid_argument, "generating matrix needs n >= 1 and m >= 1");
  require(entries_.size() == static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_),
          ErrorKind::invalid_argument, "generating matrix entry count does not match its shape");
  if (tail_.empty()) tail_.assign(static_cast<std::size_t>(cols_), 0);
  require(tail_.size() == static_cast<std::size_t>(cols_), ErrorKind::invalid_argument, "tail row length differs from column count");
  for (Digit d : entries_) require(d < base_.value(), ErrorKind::invalid_argument, "matrix entry out of range for base");
  for (Digit d : tail_) require(d < base_.value(), ErrorKind::invalid_argument, "tail entry out of range for base");
}

GeneratingMatrix GeneratingMatrix::zeros(Base base, int rows, int cols) {
  return GeneratingMatrix(base, rows, cols, std::vector<Digit>(static_cast<std::size_t>(rows * cols), 0));
}

bool GeneratingMatrix::has_zero_tail() const noexcept {
  return std::all_of(tail_.begin(), tail_.end(), [](Digit d) { return d == 0; });
}

DigitalNet::DigitalNet(Base base, std::vector<GeneratingMatrix> matrices) : base_(base), matrices_(std::move(matrices)) {
  require(!matrices_.empty(), ErrorKind::invalid_argument, "digital net needs at least one generating matrix");
  for (const auto& c : matrices_) {
    require(c.base() == base_, ErrorKind::incompatible, "generating matrix base differs from net base");
    require(c.rows() == matrices_.front().rows() && c.cols() == matrices_.front().cols(), ErrorKind::incompatible,
            "generating matrices must share their shape");
  }
}

bool DigitalNet::has_zero_tails() const noexcept {
  return std::all_of(matrices_.begin(), matrices_.end(), [](const GeneratingMatrix& c) { return c.has_zero_tail(); });
}

std::vector<GVector> enumerate_points(const DigitalNet& net, std::uint64_t max_points) {
  const std::uint64_t count = net.size();
  if (count > max_points)
    fail(ErrorKind::guard_exceeded, "net has " + std::to_string(count) + " points, above the cap of " + std::to_string(max_points));
  const int b = net.base().value();
  const int m = net.m();
  const int n = net.n();

  std::vector<GVector> out;
  out.reserve(count);
  std::vector<Digit> nu(static_cast<std::size_t>(m), 0);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<GElement> coords;
    coords.reserve(static_cast<std::size_t>(net.dim()));
    for (const auto& c : net.matrices()) {
      std::vector<Digit> digits(static_cast<std::size_t>(n));
      for (int r = 0; r < n; ++r) {
        int acc = 0;
        const auto row = c.row(r);
        for (int col = 0; col < m; ++col) acc += nu[static_cast<std::size_t>(col)] * row[static_cast<std::size_t>(col)];
        digits[static_cast<std::size_t>(r)] = static_cast<Digit>(acc % b);
      }
      int tail = 0;
      for (int col = 0; col < m; ++col) tail += nu[static_cast<std::size_t>(col)] * c.tail_row()[static_cast<std::size_t>(col)];
      coords.emplace_back(net.base(), std::move(digits), static_cast<Digit>(tail % b));
    }
    out.emplace_back(std::move(coords));
    // increment the b-adic digit vector of idx
    for (int col = 0; col < m; ++col) {
      if (++nu[static_cast<std::size_t>(col)] < b) break;
      nu[static_cast<std::size_t>(col)] = 0;
    }
  }
  return out;
}

DigitalNet hammersley_matrices(Base base, int m) {
  require(m >= 1, ErrorKind::invalid_argument, "Hammersley net needs m >= 1");
  const auto sm = static_cast<std::size_t>(m);
  std::vector<Digit> id(sm * sm, 0), anti(sm * sm, 0);
  for (std::size_t r = 0; r < sm; ++r) {
    id[r * sm + r] = 1;
    anti[r * sm + (sm - 1 - r)] = 1;
  }
  return DigitalNet(base, {GeneratingMatrix(base, m, m, std::move(id)), GeneratingMatrix(base, m, m, std::move(anti))});
}

DigitalNet symmetrize_matrices(const DigitalNet& net) {
  const int s = net.dim();
  const int m = net.m();
  const int n = net.n();
  const int cols = m + s;
  std::vector<GeneratingMatrix> out;
  out.reserve(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) {
    const auto& c = net.matrix(j);
    std::vector<Digit> entries(static_cast<std::size_t>(n * cols), 0);
    for (int r = 0; r < n; ++r) {
      for (int col = 0; col < m; ++col) entries[static_cast<std::size_t>(r * cols + col)] = c.at(r, col);
      entries[static_cast<std::size_t>(r * cols + m + j)] = 1;
    }
    std::vector<Digit> tail(static_cast<std::size_t>(cols), 0);
    std::copy(c.tail_row().begin(), c.tail_row().end(), tail.begin());
    tail[static_cast<std::size_t>(m + j)] = 1;
    out.emplace_back(net.base(), n, cols, std::move(entries), std::move(tail));
  }
  return DigitalNet(net.base(), std::move(out));
}

std::vector<GVector> symmetrize_points(std::span<const GVector> points) {
  if (points.empty()) return {};
  const Base base = points.front().base();
  const int b = base.value();
  const int prec = points.front().precision();
  const std::size_t s = points.front().dim();
  const std::uint64_t shifts = ipow(b, static_cast<int>(s));

  std::vector<GVector> out;
  out.reserve(points.size() * shifts);
  std::vector<Digit> l(s, 0);
  for (std::uint64_t t = 0; t < shifts; ++t) {
    const GVector e = GVector::constant(base, prec, l);
    for (const auto& z : points) out.push_back(z + e);
    for (std::size_t j = 0; j < s; ++j) {
      if (++l[j] < b) break;
      l[j] = 0;
    }
  }
  return out;
}

DigitalNet truncated_sym_hammersley(Base base, int m, int n) {
  require(m >= 1, ErrorKind::invalid_argument, "truncated symmetrized Hammersley needs m >= 1");
  if (n < m + 2) fail(ErrorKind::invalid_argument, "truncation too short: need n >= m+2");
  const int cols = m + 2;
  std::vector<Digit> c1(static_cast<std::size_t>(n * cols), 0), c2(static_cast<std::size_t>(n * cols), 0);
  for (int r = 0; r < n; ++r) {
    if (r < m) {
      c1[static_cast<std::size_t>(r * cols + r)] = 1;
      c2[static_cast<std::size_t>(r * cols + (m - 1 - r))] = 1;
    }
    c1[static_cast<std::size_t>(r * cols + m)] = 1;
    c2[static_cast<std::size_t>(r * cols + m + 1)] = 1;
  }
  return DigitalNet(base, {GeneratingMatrix(base, n, cols, std::move(c1)), GeneratingMatrix(base, n, cols, std::move(c2))});
}

PointSet2 sym_hammersley_points(Base base, int m) {
  require(m >= 1, ErrorKind::invalid_argument, "symmetrized Hammersley needs m >= 1");
  const auto b = static_cast<std::uint64_t>(base.value());
  const std::uint64_t bm = ipow(base.value(), m);
  const std::uint64_t den = bm * (b - 1);
  const std::uint64_t count = ipow(base.value(), m + 2);

  std::vector<std::uint64_t> xs(count), ys(count);
  std::vector<std::uint64_t> a(static_cast<std::size_t>(m) + 2, 0);  // a[0] = a_1, ..., a_1 fastest
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const std::uint64_t ax = a[static_cast<std::size_t>(m)];
    const std::uint64_t ay = a[static_cast<std::size_t>(m) + 1];
    std::uint64_t x = 0, y = 0;
    for (int i = 0; i < m; ++i) {
      x = x * b + (a[static_cast<std::size_t>(i)] + ax) % b;
      y = y * b + (a[static_cast<std::size_t>(m - 1 - i)] + ay) % b;
    }
    xs[idx] = x * (b - 1) + ax;
    ys[idx] = y * (b - 1) + ay;
    for (auto& d : a) {
      if (++d < b) break;
      d = 0;
    }
  }
  return PointSet2(den, std::move(xs), std::move(ys)).reduced();
}

PointSet2 project_points(std::span<const GVector> points) {
  if (points.empty()) return {};
  const Base base = points.front().base();
  const int n = points.front().precision();
  const auto b = static_cast<std::uint64_t>(base.value());
  const std::uint64_t den = ipow(base.value(), n) * (b - 1);
  require(den <= (std::uint64_t{1} << 62), ErrorKind::unsupported, "b^n (b-1) exceeds 2^62");

  std::vector<std::uint64_t> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  auto numerator = [b](const GElement& z) {
    std::uint64_t a = 0;
    for (Digit d : z.digits()) a = a * b + d;
    return a * (b - 1) + z.tail();
  };
  for (const auto& z : points) {
    require(z.dim() == 2, ErrorKind::unsupported, "exact point sets are two-dimensional");
    require(z.base() == base && z.precision() == n, ErrorKind::incompatible, "points differ in base or precision");
    xs.push_back(numerator(z[0]));
    ys.push_back(numerator(z[1]));
  }
  return PointSet2(den, std::move(xs), std::move(ys)).reduced();
}

SymmetrizedNet::SymmetrizedNet(DigitalNet inner) : inner_(std::move(inner)), net_(symmetrize_matrices(inner_)) {}

}  // namespace symnet

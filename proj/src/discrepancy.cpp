#include "symnet/discrepancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "symnet/compensated.hpp"
#include "symnet/parallel.hpp"
#include "symnet/simd/kernels.hpp"

namespace symnet {

namespace {

using simd::u128;

BigInt to_big(u128 v) {
  BigInt r = static_cast<std::uint64_t>(v >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(v);
  return r;
}

// Breaks of the cell grid along one axis: distinct coordinates plus 0 and D,
// and the index of every point's coordinate among them.
struct Axis {
  std::vector<std::uint64_t> breaks;
  std::vector<std::uint32_t> rank;
  std::size_t cells() const { return breaks.size() - 1; }
};

Axis make_axis(std::span<const std::uint64_t> coords, std::uint64_t den) {
  Axis a;
  a.breaks.assign(coords.begin(), coords.end());
  a.breaks.push_back(0);
  a.breaks.push_back(den);
  std::sort(a.breaks.begin(), a.breaks.end());
  a.breaks.erase(std::unique(a.breaks.begin(), a.breaks.end()), a.breaks.end());
  a.rank.resize(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i)
    a.rank[i] = static_cast<std::uint32_t>(std::lower_bound(a.breaks.begin(), a.breaks.end(), coords[i]) - a.breaks.begin());
  return a;
}

struct Grid {
  Axis x, y;
  std::vector<std::uint32_t> order;  // points sorted by x rank
};

Grid make_grid(const PointSet2& P, std::uint64_t max_cells) {
  require(!P.empty(), ErrorKind::invalid_argument, "point set is empty");
  Grid g{make_axis(P.xs(), P.denominator()), make_axis(P.ys(), P.denominator()), {}};
  const auto cells = static_cast<std::uint64_t>(g.x.cells()) * g.y.cells();
  if (cells > max_cells) fail(ErrorKind::guard_exceeded, "cell grid exceeds the cell cap");
  g.order.resize(P.size());
  std::iota(g.order.begin(), g.order.end(), 0u);
  std::stable_sort(g.order.begin(), g.order.end(), [&g](std::uint32_t a, std::uint32_t b) { return g.x.rank[a] < g.x.rank[b]; });
  return g;
}

// Calls row(i, counts) for every column i of cells, where counts[j] is the
// box count on the open cell (x_i, x_{i+1}) x (y_j, y_{j+1}).
template <class RowFn>
void sweep_cells(const Grid& g, RowFn&& row) {
  std::vector<std::uint64_t> hist(g.y.breaks.size(), 0);
  std::vector<std::uint64_t> counts(g.y.cells());
  std::size_t next = 0;
  for (std::size_t i = 0; i < g.x.cells(); ++i) {
    while (next < g.order.size() && g.x.rank[g.order[next]] <= i) ++hist[g.y.rank[g.order[next++]]];
    std::uint64_t run = 0;
    for (std::size_t j = 0; j < counts.size(); ++j) counts[j] = (run += hist[j]);
    row(i, std::span<const std::uint64_t>(counts));
  }
}

BigInt pow_big(std::uint64_t v, int e) { return boost::multiprecision::pow(BigInt(v), static_cast<unsigned>(e)); }

// Integral of |a - t y|^p over y in [y0, y0 + h], t >= 0, arranged so that
// nothing cancels when t h is small against |a - t y|.
double inner_integral(double a, double t, double y0, double h, double p) {
  const double q = p + 1.0;
  const double u0 = a - t * y0;
  const double u1 = u0 - t * h;
  auto one_signed = [&](double far) {
    // |u| runs monotonically from near (smaller) to far over the interval
    const double r = t * h / far;
    if (r == 0.0) return h * std::pow(far, p);
    const double L = std::log1p(-r);
    return h * std::pow(far, p) * std::expm1(q * L) / (q * std::expm1(L));
  };
  if (u1 >= 0.0) return one_signed(u0);
  if (u0 <= 0.0) return one_signed(-u1);
  return (std::pow(u0, q) + std::pow(-u1, q)) / (q * t);
}

}  // namespace

const char* method_name(DiscrepancyMethod m) noexcept {
  switch (m) {
    case DiscrepancyMethod::warnock: return "warnock";
    case DiscrepancyMethod::piecewise_exact: return "piecewise_exact";
    case DiscrepancyMethod::quadrature: return "quadrature";
    case DiscrepancyMethod::corner_sweep: return "corner_sweep";
  }
  return "?";
}

Rational local_discrepancy(const PointSet2& P, const Rational& t1, const Rational& t2) {
  require(t1 >= 0 && t1 <= 1 && t2 >= 0 && t2 <= 1, ErrorKind::invalid_argument, "t outside [0,1]^2");
  require(!P.empty(), ErrorKind::invalid_argument, "point set is empty");
  // x/D < t  <=>  x < ceil(t D) for integer x
  auto threshold = [&P](const Rational& t) {
    const Rational s = t * BigInt(P.denominator());
    BigInt q = boost::multiprecision::numerator(s) / boost::multiprecision::denominator(s);
    if (q * boost::multiprecision::denominator(s) != boost::multiprecision::numerator(s)) ++q;
    return static_cast<std::uint64_t>(q);
  };
  const std::uint64_t c = simd::count_below(P.xs(), P.ys(), threshold(t1), threshold(t2));
  return Rational(BigInt(c), BigInt(P.size())) - t1 * t2;
}

Rational l2_star_squared(const PointSet2& P) {
  require(!P.empty(), ErrorKind::invalid_argument, "point set is empty");
  const std::uint64_t D = P.denominator();
  const std::size_t N = P.size();
  const auto xs = P.xs();
  const auto ys = P.ys();

  const BigInt D2 = BigInt(D) * D;
  BigInt mid = 0;
  for (std::size_t i = 0; i < N; ++i) mid += (D2 - BigInt(xs[i]) * xs[i]) * (D2 - BigInt(ys[i]) * ys[i]);

  const bool narrow = D < (std::uint64_t{1} << 32);
  BigInt pairs = parallel_reduce(
      N, 64, BigInt(0),
      [&](std::size_t lo, std::size_t hi) {
        BigInt acc = 0;
        for (std::size_t i = lo; i < hi; ++i) {
          if (narrow) {
            acc += to_big(simd::warnock_row_sum(D, xs[i], ys[i], xs, ys));
          } else {
            for (std::size_t j = 0; j < N; ++j)
              acc += to_big(static_cast<u128>(D - std::max(xs[i], xs[j])) * (D - std::max(ys[i], ys[j])));
          }
        }
        return acc;
      },
      [](BigInt& total, const BigInt& part) { total += part; });

  const BigInt n = N;
  return Rational(1, 9) - Rational(mid, 2 * n * D2 * D2) + Rational(pairs, n * n * D2);
}

DiscrepancyResult l2_star(const PointSet2& P) {
  const double v = std::sqrt(std::max(0.0, l2_star_squared(P).convert_to<double>()));
  return {2.0, v, DiscrepancyMethod::warnock, 1e-14 * v};
}

Rational lp_star_power_exact(const PointSet2& P, int p, std::uint64_t max_cells) {
  require(p >= 2 && p % 2 == 0, ErrorKind::invalid_argument, "exact cell integration needs an even integer p");
  const Grid g = make_grid(P, max_cells);
  const std::uint64_t D = P.denominator();
  const std::size_t N = P.size();

  // dX[k][i] = x_{i+1}^{k+1} - x_i^{k+1} in units of D^{k+1}
  auto diffs = [p](const Axis& a) {
    std::vector<std::vector<BigInt>> d(static_cast<std::size_t>(p + 1), std::vector<BigInt>(a.cells()));
    for (int k = 0; k <= p; ++k)
      for (std::size_t i = 0; i < a.cells(); ++i) d[static_cast<std::size_t>(k)][i] = pow_big(a.breaks[i + 1], k + 1) - pow_big(a.breaks[i], k + 1);
    return d;
  };
  const auto dX = diffs(g.x);
  const auto dY = diffs(g.y);

  std::vector<BigInt> S(static_cast<std::size_t>(p + 1), 0);
  std::vector<BigInt> row(static_cast<std::size_t>(p + 1));
  std::vector<BigInt> cp(static_cast<std::size_t>(p + 1));
  sweep_cells(g, [&](std::size_t i, std::span<const std::uint64_t> counts) {
    std::fill(row.begin(), row.end(), BigInt(0));
    for (std::size_t j = 0; j < counts.size(); ++j) {
      const std::uint64_t c = counts[j];
      // cp[e] = c^e
      cp[0] = 1;
      for (int e = 1; e <= p; ++e) cp[static_cast<std::size_t>(e)] = cp[static_cast<std::size_t>(e - 1)] * c;
      for (int k = 0; k <= p; ++k) {
        const auto& ce = cp[static_cast<std::size_t>(p - k)];
        if (ce != 0) row[static_cast<std::size_t>(k)] += ce * dY[static_cast<std::size_t>(k)][j];
      }
    }
    for (int k = 0; k <= p; ++k) S[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k)] * dX[static_cast<std::size_t>(k)][i];
  });

  Rational total = 0;
  BigInt binom = 1;
  for (int k = 0; k <= p; ++k) {
    if (k > 0) binom = binom * (p - k + 1) / k;
    const BigInt den = pow_big(N, p - k) * pow_big(D, 2 * k + 2) * ((k + 1) * (k + 1));
    const Rational term(binom * S[static_cast<std::size_t>(k)], den);
    if (k % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

DiscrepancyResult lp_star(const PointSet2& P, double p, std::uint64_t max_cells) {
  require(p >= 1.0 && std::isfinite(p), ErrorKind::invalid_argument, "p must satisfy 1 <= p < inf");
  if (p == std::floor(p) && static_cast<int>(p) % 2 == 0 && p <= 64) {
    const Rational s = lp_star_power_exact(P, static_cast<int>(p), max_cells);
    const double v = std::pow(std::max(0.0, s.convert_to<double>()), 1.0 / p);
    return {p, v, DiscrepancyMethod::piecewise_exact, 1e-14 * v};
  }

  const Grid g = make_grid(P, max_cells);
  const double D = static_cast<double>(P.denominator());
  const double N = static_cast<double>(P.size());
  const double q = p + 1.0;
  std::vector<double> xb(g.x.breaks.size()), yb(g.y.breaks.size());
  for (std::size_t i = 0; i < xb.size(); ++i) xb[i] = static_cast<double>(g.x.breaks[i]) / D;
  for (std::size_t j = 0; j < yb.size(); ++j) yb[j] = static_cast<double>(g.y.breaks[j]) / D;

  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  CompensatedSum sum;
  double err = 0.0;
  sweep_cells(g, [&](std::size_t i, std::span<const std::uint64_t> counts) {
    const double x0 = xb[i], x1 = xb[i + 1];
    for (std::size_t j = 0; j < counts.size(); ++j) {
      const double y0 = yb[j], y1 = yb[j + 1], h = y1 - y0;
      if (counts[j] == 0) {
        // |t1 t2|^p separates
        const double v = (std::pow(x1, q) - std::pow(x0, q)) * (std::pow(y1, q) - std::pow(y0, q)) / (q * q);
        sum.add(v);
        err += 4e-16 * v;
        continue;
      }
      const double a = static_cast<double>(counts[j]) / N;
      // the integrand in t1 is smooth between the points where a - t1 y
      // changes sign at an edge of [y0, y1]
      double cuts[4] = {x0, x1, x1, x1};
      int nc = 1;
      for (double c : {a / y1, y0 > 0 ? a / y0 : x1})
        if (c > x0 && c < x1) cuts[nc++] = c;
      cuts[nc] = x1;
      std::sort(cuts + 1, cuts + nc);
      for (int k = 0; k < nc; ++k) {
        if (cuts[k + 1] <= cuts[k]) continue;
        auto f = [&](double t) { return inner_integral(a, t, y0, h, p); };
        // absolute target 1e-13 per unit area; near a cut the integrand has a
        // fractional-power kink and a purely relative target stalls there
        const double target = 1e-13 * (cuts[k + 1] - cuts[k]) * h;
        double e = 0.0, l1 = 0.0;
        double v = GK::integrate(f, cuts[k], cuts[k + 1], 0, 0.0, &e, &l1);
        if (e > target) v = GK::integrate(f, cuts[k], cuts[k + 1], 12, std::max(1e-15, target / l1), &e);
        sum.add(v);
        err += e + 4e-16 * std::fabs(v);
      }
    }
  });
  const double s = std::max(0.0, sum.value());
  const double v = std::pow(s, 1.0 / p);
  // d(S^(1/p)) = S^(1/p - 1) dS / p
  const double bound = s > 0 ? v / (p * s) * err + 1e-15 * v : std::pow(err, 1.0 / p);
  return {p, v, DiscrepancyMethod::quadrature, bound};
}

namespace {

// sup over cells of max(c/N - x_i y_j, x_{i+1} y_{j+1} - c/N), scaled by N D^2.
template <class Int>
Int corner_sweep(const Grid& g, std::uint64_t N, std::uint64_t D) {
  const Int scale = Int(D) * Int(D);
  Int best = 0;
  sweep_cells(g, [&](std::size_t i, std::span<const std::uint64_t> counts) {
    const Int x0 = Int(g.x.breaks[i]), x1 = Int(g.x.breaks[i + 1]);
    for (std::size_t j = 0; j < counts.size(); ++j) {
      const Int cD = Int(counts[j]) * scale;
      const Int above = cD - Int(N) * x0 * Int(g.y.breaks[j]);
      const Int below = Int(N) * x1 * Int(g.y.breaks[j + 1]) - cD;
      if (above > best) best = above;
      if (below > best) best = below;
    }
  });
  return best;
}

}  // namespace

Rational linf_star_exact(const PointSet2& P, std::uint64_t max_cells) {
  const Grid g = make_grid(P, max_cells);
  const std::uint64_t D = P.denominator();
  const std::uint64_t N = P.size();
  const BigInt den = BigInt(N) * D * D;
  if (std::bit_width(N) + 2 * std::bit_width(D) <= 125) {
    return Rational(to_big(static_cast<u128>(corner_sweep<__int128>(g, N, D))), den);
  }
  return Rational(corner_sweep<BigInt>(g, N, D), den);
}

DiscrepancyResult linf_star(const PointSet2& P, std::uint64_t max_cells) {
  const double v = linf_star_exact(P, max_cells).convert_to<double>();
  return {kInfinity, v, DiscrepancyMethod::corner_sweep, 1e-16 * v};
}

double truncation_bound(Base base, int m, int n, double p) {
  require(m >= 1 && n >= m + 2, ErrorKind::invalid_argument, "truncation bound needs n >= m+2");
  require(p >= 1.0, ErrorKind::invalid_argument, "p must be at least 1");
  const double b = base.value();
  if (std::isinf(p)) return std::pow(b, -m);
  return std::pow(b, -(m + 2.0 * (n - m - 1) / p));
}

}  // namespace symnet

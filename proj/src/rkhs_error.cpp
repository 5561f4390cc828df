#include "symnet/rkhs_error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "symnet/compensated.hpp"
#include "symnet/dual_weight.hpp"
#include "symnet/parallel.hpp"

namespace symnet {

namespace {

// omega_b^e for e in [0, b).
std::vector<Complex> unity_table(Base base) {
  const int b = base.value();
  std::vector<Complex> t(static_cast<std::size_t>(b));
  for (int e = 0; e < b; ++e) t[static_cast<std::size_t>(e)] = std::polar(1.0, 2.0 * std::numbers::pi * e / b);
  return t;
}

// Leading digit position a_1(k), 1-based; 0 for k = 0.
int leading_position(std::uint64_t k, Base base) {
  int a = 0;
  for (; k > 0; k /= static_cast<std::uint64_t>(base.value())) ++a;
  return a;
}

// Exponents of W_k(z) for every k in the support box, in flat order.
std::vector<int> support_exponents(const BandLimitedKernel& K, const GVector& z) {
  const int b = K.base().value();
  const int s = K.dim();
  const std::uint64_t per = ipow(b, K.k_digits());
  // per-coordinate exponent of W_k(z_j) for every k < b^K
  std::vector<std::vector<int>> coord(static_cast<std::size_t>(s), std::vector<int>(per));
  for (int j = 0; j < s; ++j) {
    const auto& zj = z[static_cast<std::size_t>(j)];
    for (std::uint64_t k = 0; k < per; ++k) coord[static_cast<std::size_t>(j)][k] = character(k, zj).exponent();
  }
  std::vector<int> out(K.support());
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    std::size_t rest = idx;
    int e = 0;
    for (int j = 0; j < s; ++j, rest /= per) e += coord[static_cast<std::size_t>(j)][rest % per];
    out[idx] = e % b;
  }
  return out;
}

// f_r(z) = sum_k v_r(k) W_k(z) for every factor r.
std::vector<Complex> features(const BandLimitedKernel& K, const GVector& z, const std::vector<Complex>& unity) {
  const auto ex = support_exponents(K, z);
  std::vector<Complex> f(K.rank());
  if (K.is_diagonal()) {
    for (std::size_t k = 0; k < ex.size(); ++k) f[k] = K.factor(k, k) * unity[static_cast<std::size_t>(ex[k])];
    return f;
  }
  for (std::size_t r = 0; r < f.size(); ++r) {
    CompensatedComplexSum acc;
    for (std::size_t k = 0; k < ex.size(); ++k) acc.add(K.factor(r, k) * unity[static_cast<std::size_t>(ex[k])]);
    f[r] = acc.value();
  }
  return f;
}

void check_points(std::span<const GVector> points, Base base, int s) {
  require(!points.empty(), ErrorKind::invalid_argument, "point set is empty");
  for (const auto& z : points) {
    require(z.base() == base, ErrorKind::incompatible, "kernel and points use different bases");
    require(static_cast<int>(z.dim()) == s, ErrorKind::incompatible, "kernel and points differ in dimension");
  }
}

WceResult finish(double raw, WceMethod method, double tail, std::uint64_t terms) {
  WceResult r;
  r.raw = raw;
  r.clamped = raw < 0;
  r.value = std::max(raw, 0.0);
  r.method = method;
  r.tail_bound = tail;
  r.terms_used = terms;
  return r;
}

WceResult direct_band(std::span<const GVector> points, const BandLimitedKernel& K) {
  check_points(points, K.base(), K.dim());
  const auto unity = unity_table(K.base());
  const std::size_t N = points.size();
  const std::size_t R = K.rank();
  std::vector<std::vector<Complex>> F(N);
  for (std::size_t i = 0; i < N; ++i) F[i] = features(K, points[i], unity);

  // int K(z, y) dy = sum_k K^(k,0) W_k(z) = sum_r f_r(z) conj(v_r(0))
  CompensatedSum single;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t r = 0; r < R; ++r) single.add((F[i][r] * std::conj(K.factor(r, 0))).real());

  CompensatedSum pair = parallel_reduce(
      N, 16, CompensatedSum{},
      [&](std::size_t lo, std::size_t hi) {
        CompensatedSum acc;
        for (std::size_t i = lo; i < hi; ++i)
          for (std::size_t j = 0; j < N; ++j) {
            Complex k = 0;
            for (std::size_t r = 0; r < R; ++r) k += F[i][r] * std::conj(F[j][r]);
            acc.add(k.real());
          }
        return acc;
      },
      [](CompensatedSum& t, const CompensatedSum& p) { t.add(p); });

  const double n = static_cast<double>(N);
  const double raw = K.coeff(0, 0).real() - 2.0 * single.value() / n + pair.value() / (n * n);
  return finish(raw, WceMethod::direct, 0.0, static_cast<std::uint64_t>(N) * N);
}

WceResult direct_diagonal(std::span<const GVector> points, const SpectralDiagonalKernel& K) {
  const int s = K.dim();
  check_points(points, K.base(), s);
  const int n = points.front().precision();
  for (const auto& z : points) require(z.precision() == n, ErrorKind::incompatible, "points differ in precision");

  // phi for every possible first differing position, and log1p(gamma_j phi)
  std::vector<std::vector<double>> lg(static_cast<std::size_t>(s), std::vector<double>(static_cast<std::size_t>(n) + 2));
  for (int j = 0; j < s; ++j)
    for (int i0 = 0; i0 <= n + 1; ++i0)
      lg[static_cast<std::size_t>(j)][static_cast<std::size_t>(i0)] = std::log1p(K.gamma()[static_cast<std::size_t>(j)] * K.phi_at(i0));

  // first nonzero position of z - w is the first position where they differ
  const std::size_t N = points.size();
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  std::vector<Digit> packed(N * static_cast<std::size_t>(s) * stride);
  for (std::size_t i = 0; i < N; ++i)
    for (int j = 0; j < s; ++j) {
      const auto& e = points[i][static_cast<std::size_t>(j)];
      Digit* dst = packed.data() + (i * static_cast<std::size_t>(s) + static_cast<std::size_t>(j)) * stride;
      std::copy(e.digits().begin(), e.digits().end(), dst);
      dst[n] = e.tail();
    }
  auto first_diff = [&](std::size_t a, std::size_t c, int j) {
    const Digit* p = packed.data() + (a * static_cast<std::size_t>(s) + static_cast<std::size_t>(j)) * stride;
    const Digit* q = packed.data() + (c * static_cast<std::size_t>(s) + static_cast<std::size_t>(j)) * stride;
    for (std::size_t i = 0; i < stride; ++i)
      if (p[i] != q[i]) return static_cast<int>(i) + 1;
    return 0;
  };

  // e^2 = (1/N^2) sum (K(z,w) - 1), each term formed without cancellation
  CompensatedSum pair = parallel_reduce(
      N, 16, CompensatedSum{},
      [&](std::size_t lo, std::size_t hi) {
        CompensatedSum acc;
        for (std::size_t a = lo; a < hi; ++a)
          for (std::size_t c = 0; c < N; ++c) {
            double l = 0.0;
            for (int j = 0; j < s; ++j) l += lg[static_cast<std::size_t>(j)][static_cast<std::size_t>(first_diff(a, c, j))];
            acc.add(std::expm1(l));
          }
        return acc;
      },
      [](CompensatedSum& t, const CompensatedSum& p) { t.add(p); });
  const double nn = static_cast<double>(N) * static_cast<double>(N);
  return finish(pair.value() / nn, WceMethod::direct, 0.0, static_cast<std::uint64_t>(N) * N);
}

// Syndrome of one coordinate's k in matrix C, as a byte string.
std::string syndrome_key(const GeneratingMatrix& c, std::uint64_t k) {
  const int b = c.base().value();
  std::vector<int> acc(static_cast<std::size_t>(c.cols()), 0);
  for (int i = 0; k > 0; ++i, k /= static_cast<std::uint64_t>(b)) {
    const int kappa = static_cast<int>(k % static_cast<std::uint64_t>(b));
    if (kappa == 0) continue;
    const auto row = c.row_or_tail(i);
    for (std::size_t col = 0; col < row.size(); ++col) acc[col] += kappa * row[col];
  }
  std::string key(acc.size(), '\0');
  for (std::size_t i = 0; i < acc.size(); ++i) key[i] = static_cast<char>(acc[i] % b);
  return key;
}

std::string add_keys(const std::string& a, const std::string& c, int b) {
  std::string out(a.size(), '\0');
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<char>((a[i] + c[i]) % b);
  return out;
}

WceResult spectral_diagonal(const SymmetrizedNet& net, const SpectralDiagonalKernel& K, std::uint64_t max_candidates) {
  const DigitalNet& inner = net.inner();
  require(inner.base() == K.base() && inner.dim() == K.dim(), ErrorKind::incompatible, "kernel and net differ in base or dimension");
  if (!inner.has_zero_tails()) fail(ErrorKind::unsupported, "diagonal spectral sum needs an inner net with zero tail rows");
  const int b = K.base().value();
  const int s = K.dim();
  const int n = inner.n();
  const std::uint64_t low = ipow(b, n);
  if (low > max_candidates / static_cast<std::uint64_t>(s)) fail(ErrorKind::guard_exceeded, "spectral enumeration exceeds the candidate cap");

  // Digits at positions > n meet zero rows, so for fixed low digits the
  // high part only has to restore the digit-sum condition. Summing r over
  // all admissible high parts in closed form:
  //   F_j(k) = [delta(k) = 0 mod b] r_j(k) + gamma_j b^(-2 alpha n) T(rho),
  //   T(rho) = [rho != 0] b^(-2 alpha) + (b-1) b^-2 beta^2 / (1 - beta),
  // with rho = -delta(k) mod b and beta = b^(1 - 2 alpha).
  const double beta = std::pow(b, 1.0 - 2.0 * K.alpha());
  const double t_common = (b - 1.0) / (static_cast<double>(b) * b) * beta * beta / (1.0 - beta);
  const double t_lead = std::pow(b, -2.0 * K.alpha());
  const double scale_n = std::pow(b, -2.0 * K.alpha() * n);

  const std::string zero_key(static_cast<std::size_t>(inner.m()), '\0');
  std::map<std::string, CompensatedSum> nz;  // tuples with some nonzero low part, by syndrome
  double zprod = 1.0;                        // product of F_j(0)
  double zlog = 0.0;                         // sum of log1p(F_j(0) - 1)
  for (int j = 0; j < s; ++j) {
    const double g = K.gamma()[static_cast<std::size_t>(j)];
    std::map<std::string, CompensatedSum> a;  // nonzero low parts of coordinate j
    for (std::uint64_t k = 1; k < low; ++k) {
      const auto rho = static_cast<int>((b - static_cast<int>(digit_sum(k, K.base()) % static_cast<std::uint64_t>(b))) % b);
      const double f = (rho == 0 ? K.coeff(j, k) : 0.0) + g * scale_n * ((rho != 0 ? t_lead : 0.0) + t_common);
      a[syndrome_key(inner.matrix(j), k)].add(f);
    }
    const double eps0 = g * scale_n * t_common;
    const double f0 = 1.0 + eps0;

    std::map<std::string, CompensatedSum> next;
    for (const auto& [k1, v1] : nz) {
      next[k1].add(v1.value() * f0);
      for (const auto& [k2, v2] : a) next[add_keys(k1, k2, b)].add(v1.value() * v2.value());
    }
    for (const auto& [k2, v2] : a) next[k2].add(zprod * v2.value());
    nz = std::move(next);
    zprod *= f0;
    zlog += std::log1p(eps0);
  }
  const double tail = nz.count(zero_key) ? nz[zero_key].value() : 0.0;
  const double raw = tail + std::expm1(zlog);
  // closed form over the whole dual: no truncation tail
  return finish(raw, WceMethod::spectral, 0.0, low * static_cast<std::uint64_t>(s));
}

std::vector<std::size_t> dual_support(const DigitalNet& inner, const BandLimitedKernel& K) {
  require(inner.base() == K.base() && inner.dim() == K.dim(), ErrorKind::incompatible, "kernel and net differ in base or dimension");
  std::vector<std::size_t> out;
  for (std::size_t idx = 1; idx < K.support(); ++idx)
    if (in_symmetrized_dual(inner, K.frequency(idx))) out.push_back(idx);
  return out;
}

WceResult spectral_band(const SymmetrizedNet& net, const BandLimitedKernel& K, std::uint64_t max_candidates, bool diagonal_only) {
  if (K.support() > max_candidates) fail(ErrorKind::guard_exceeded, "spectral enumeration exceeds the candidate cap");
  const auto dual = dual_support(net.inner(), K);
  CompensatedComplexSum sum;
  std::uint64_t terms = 0;
  if (diagonal_only) {
    for (auto k : dual) {
      sum.add(K.coeff(k, k));
      ++terms;
    }
  } else {
    if (static_cast<std::uint64_t>(dual.size()) * dual.size() > max_candidates)
      fail(ErrorKind::guard_exceeded, "spectral enumeration exceeds the candidate cap");
    for (auto k : dual)
      for (auto l : dual) {
        sum.add(K.coeff(k, l));
        ++terms;
      }
  }
  return finish(sum.value().real(), WceMethod::spectral, 0.0, terms);
}

}  // namespace

// ---------------------------------------------------------------------------

BandLimitedKernel::BandLimitedKernel(Base base, int s, int k_digits, std::vector<std::vector<Complex>> factors)
    : base_(base), s_(s), k_digits_(k_digits), factors_(std::move(factors)) {
  require(s >= 1 && k_digits >= 0, ErrorKind::invalid_argument, "kernel needs s >= 1 and K >= 0");
  per_coord_ = ipow(base.value(), k_digits);
  std::uint64_t total = 1;
  for (int j = 0; j < s; ++j) {
    require(total <= (std::uint64_t{1} << 24) / per_coord_, ErrorKind::guard_exceeded, "kernel support too large");
    total *= per_coord_;
  }
  support_ = static_cast<std::size_t>(total);
  for (const auto& f : factors_) require(f.size() == support_, ErrorKind::invalid_argument, "factor length differs from support size");
}

BandLimitedKernel BandLimitedKernel::constant(Base base, int s) {
  return BandLimitedKernel(base, s, 0, {{Complex(1.0, 0.0)}});
}

BandLimitedKernel BandLimitedKernel::random(Base base, int s, int k_digits, int rank, std::uint64_t seed) {
  require(rank >= 1, ErrorKind::invalid_argument, "rank must be positive");
  BandLimitedKernel K(base, s, k_digits, {});
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  K.factors_.assign(static_cast<std::size_t>(rank), std::vector<Complex>(K.support_));
  for (auto& f : K.factors_)
    for (std::size_t idx = 0; idx < K.support_; ++idx) {
      const double damp = std::pow(static_cast<double>(base.value()), -0.5 * dick_weight(K.frequency(idx), base));
      f[idx] = Complex(normal(rng), normal(rng)) * damp;
    }
  return K;
}

BandLimitedKernel BandLimitedKernel::diagonal(Base base, int s, int k_digits, std::vector<double> d) {
  BandLimitedKernel K(base, s, k_digits, {});
  require(d.size() == K.support_, ErrorKind::invalid_argument, "diagonal length differs from support size");
  for (double v : d) require(v >= 0.0, ErrorKind::invalid_argument, "diagonal coefficients must be nonnegative");
  K.diagonal_ = true;
  K.diag_ = std::move(d);
  return K;
}

Complex BandLimitedKernel::factor(std::size_t r, std::size_t k) const {
  if (diagonal_) return r == k ? Complex(std::sqrt(diag_[k]), 0.0) : Complex(0.0, 0.0);
  return factors_[r][k];
}

std::size_t BandLimitedKernel::flat_index(const KVector& k) const {
  require(static_cast<int>(k.size()) == s_, ErrorKind::incompatible, "dimension mismatch between k and kernel");
  std::size_t idx = 0;
  for (int j = s_ - 1; j >= 0; --j) {
    require(k[static_cast<std::size_t>(j)] < per_coord_, ErrorKind::invalid_argument, "frequency outside the kernel support");
    idx = idx * per_coord_ + k[static_cast<std::size_t>(j)];
  }
  return idx;
}

KVector BandLimitedKernel::frequency(std::size_t index) const {
  KVector k(static_cast<std::size_t>(s_));
  for (int j = 0; j < s_; ++j, index /= per_coord_) k[static_cast<std::size_t>(j)] = index % per_coord_;
  return k;
}

Complex BandLimitedKernel::coeff(std::size_t k, std::size_t l) const {
  if (diagonal_) return k == l ? Complex(diag_[k], 0.0) : Complex(0.0, 0.0);
  Complex c = 0;
  for (const auto& f : factors_) c += f[k] * std::conj(f[l]);
  return c;
}

SpectralDiagonalKernel::SpectralDiagonalKernel(Base base, double alpha, std::vector<double> gamma)
    : base_(base), alpha_(alpha), gamma_(std::move(gamma)) {
  require(alpha > 0.5, ErrorKind::invalid_argument, "alpha must exceed 1/2 (the series diverges otherwise)");
  require(!gamma_.empty(), ErrorKind::invalid_argument, "kernel needs at least one weight");
  for (double g : gamma_) require(g > 0.0, ErrorKind::invalid_argument, "weights must be positive");
}

double SpectralDiagonalKernel::coeff(int j, std::uint64_t k) const {
  if (k == 0) return 1.0;
  return gamma_[static_cast<std::size_t>(j)] * std::pow(static_cast<double>(base_.value()), -2.0 * alpha_ * leading_position(k, base_));
}

double SpectralDiagonalKernel::coeff(const KVector& k) const {
  require(static_cast<int>(k.size()) == dim(), ErrorKind::incompatible, "dimension mismatch between k and kernel");
  double r = 1.0;
  for (int j = 0; j < dim(); ++j) r *= coeff(j, k[static_cast<std::size_t>(j)]);
  return r;
}

double SpectralDiagonalKernel::phi_at(int i0) const {
  const double b = base_.value();
  const double beta = std::pow(b, 1.0 - 2.0 * alpha_);
  const double lead = 1.0 - 1.0 / b;
  if (i0 == 0) return lead * beta / (1.0 - beta);
  // sum_{a=1}^{i0-1} beta^a = beta (1 - beta^(i0-1)) / (1 - beta)
  const double head = lead * beta * -std::expm1((i0 - 1) * std::log(beta)) / (1.0 - beta);
  return head - std::pow(b, -2.0 * alpha_ * i0 + i0 - 1);
}

Base kernel_base(const Kernel& kernel) {
  return std::visit([](const auto& k) { return k.base(); }, kernel);
}

int kernel_dim(const Kernel& kernel) {
  return std::visit([](const auto& k) { return k.dim(); }, kernel);
}

Complex kernel_eval(const Kernel& kernel, const GVector& z, const GVector& w) {
  require(z.dim() == w.dim() && static_cast<int>(z.dim()) == kernel_dim(kernel), ErrorKind::incompatible,
          "kernel and points differ in dimension");
  if (const auto* K = std::get_if<SpectralDiagonalKernel>(&kernel)) {
    double v = 1.0;
    for (std::size_t j = 0; j < z.dim(); ++j) v *= 1.0 + K->gamma()[j] * K->phi(z[j] - w[j]);
    return v;
  }
  const auto& K = std::get<BandLimitedKernel>(kernel);
  const auto unity = unity_table(K.base());
  const auto ez = support_exponents(K, z);
  const auto ew = support_exponents(K, w);
  const int b = K.base().value();
  CompensatedComplexSum acc;
  for (std::size_t k = 0; k < K.support(); ++k)
    for (std::size_t l = 0; l < K.support(); ++l) {
      const Complex c = K.coeff(k, l);
      if (c != Complex(0.0, 0.0)) acc.add(c * unity[static_cast<std::size_t>((ez[k] + b - ew[l]) % b)]);
    }
  return acc.value();
}

int representable_precision(const Rational& x, Base base) {
  const BigInt q = boost::multiprecision::denominator(x);
  BigInt pow = base.value() - 1;
  for (int n = 0; n <= 64; ++n, pow *= base.value())
    if (pow % q == 0) return std::max(n, 1);
  fail(ErrorKind::unsupported, "unsupported expansion");
}

Complex kernel_eval(const Kernel& kernel, std::span<const Rational> x, std::span<const Rational> y) {
  const Base base = kernel_base(kernel);
  int n = 1;
  for (const auto& v : x) n = std::max(n, representable_precision(v, base));
  for (const auto& v : y) n = std::max(n, representable_precision(v, base));
  return kernel_eval(kernel, section(x, base, n), section(y, base, n));
}

const char* method_name(WceMethod m) noexcept {
  switch (m) {
    case WceMethod::direct: return "direct";
    case WceMethod::spectral: return "spectral";
    case WceMethod::monte_carlo: return "monte_carlo";
  }
  return "?";
}

WceResult wce_direct(std::span<const GVector> points, const Kernel& kernel) {
  if (const auto* K = std::get_if<SpectralDiagonalKernel>(&kernel)) return direct_diagonal(points, *K);
  return direct_band(points, std::get<BandLimitedKernel>(kernel));
}

WceResult wce_spectral(const SymmetrizedNet& net, const Kernel& kernel, std::uint64_t max_candidates) {
  if (const auto* K = std::get_if<SpectralDiagonalKernel>(&kernel)) return spectral_diagonal(net, *K, max_candidates);
  return spectral_band(net, std::get<BandLimitedKernel>(kernel), max_candidates, false);
}

Kernel ds_invariant_coeffs(const Kernel& kernel) {
  if (std::holds_alternative<SpectralDiagonalKernel>(kernel)) return kernel;
  const auto& K = std::get<BandLimitedKernel>(kernel);
  if (K.is_diagonal()) return kernel;
  std::vector<double> d(K.support());
  for (std::size_t k = 0; k < d.size(); ++k) d[k] = std::max(0.0, K.coeff(k, k).real());
  return BandLimitedKernel::diagonal(K.base(), K.dim(), K.k_digits(), std::move(d));
}

WceResult ms_wce_spectral(const SymmetrizedNet& net, const Kernel& kernel, std::uint64_t max_candidates) {
  if (const auto* K = std::get_if<SpectralDiagonalKernel>(&kernel)) return spectral_diagonal(net, *K, max_candidates);
  return spectral_band(net, std::get<BandLimitedKernel>(kernel), max_candidates, true);
}

GVector random_shift_vector(Base base, int s, int precision, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> digit(0, base.value() - 1);
  std::vector<GElement> coords;
  coords.reserve(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) {
    std::vector<Digit> d(static_cast<std::size_t>(precision));
    for (auto& v : d) v = static_cast<Digit>(digit(rng));
    coords.emplace_back(base, std::move(d));
  }
  return GVector(std::move(coords));
}

std::vector<GVector> random_digital_shift(std::span<const GVector> points, std::uint64_t seed) {
  if (points.empty()) return {};
  std::mt19937_64 rng(seed);
  const GVector sigma = random_shift_vector(points.front().base(), static_cast<int>(points.front().dim()), points.front().precision(), rng);
  std::vector<GVector> out;
  out.reserve(points.size());
  for (const auto& z : points) out.push_back(z + sigma);
  return out;
}

WceResult ms_wce_monte_carlo(std::span<const GVector> points, const Kernel& kernel, int shifts, std::uint64_t seed) {
  require(shifts >= 2, ErrorKind::invalid_argument, "need at least two shifts");
  require(!points.empty(), ErrorKind::invalid_argument, "point set is empty");
  std::mt19937_64 rng(seed);
  const auto& z0 = points.front();
  CompensatedSum sum, sq;
  std::vector<GVector> shifted;
  shifted.reserve(points.size());
  for (int r = 0; r < shifts; ++r) {
    const GVector sigma = random_shift_vector(z0.base(), static_cast<int>(z0.dim()), z0.precision(), rng);
    shifted.clear();
    for (const auto& z : points) shifted.push_back(z + sigma);
    const double v = wce_direct(shifted, kernel).raw;
    sum.add(v);
    sq.add(v * v);
  }
  const double R = shifts;
  const double mean = sum.value() / R;
  const double var = std::max(0.0, (sq.value() - R * mean * mean) / (R - 1.0));
  return finish(mean, WceMethod::monte_carlo, std::sqrt(var / R), static_cast<std::uint64_t>(shifts));
}

Integrand parse_integrand(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  Integrand f;
  if (name == "constant") {
    f.kind = IntegrandKind::constant;
  } else if (name == "product_linear") {
    f.kind = IntegrandKind::product_linear;
  } else if (name == "product_exp") {
    f.kind = IntegrandKind::product_exp;
  } else if (name == "product_quadratic") {
    f.kind = IntegrandKind::product_quadratic;
    if (!arg.empty()) f.c = std::stod(arg);
  } else if (name == "walsh") {
    f.kind = IntegrandKind::walsh;
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      const auto comma = std::min(arg.find(',', pos), arg.size());
      std::uint64_t v = 0;
      const auto [ptr, ec] = std::from_chars(arg.data() + pos, arg.data() + comma, v);
      if (ec != std::errc{} || ptr != arg.data() + comma) fail(ErrorKind::invalid_argument, "bad walsh frequency list: " + arg);
      f.k.push_back(v);
      pos = comma + 1;
    }
  } else {
    fail(ErrorKind::invalid_argument, "unknown integrand id: " + spec);
  }
  return f;
}

QmcEstimate qmc_integrate(std::span<const GVector> points, const Integrand& f) {
  require(!points.empty(), ErrorKind::invalid_argument, "point set is empty");
  const int s = static_cast<int>(points.front().dim());
  QmcEstimate out;
  CompensatedSum sum;
  if (f.kind == IntegrandKind::walsh) {
    require(static_cast<int>(f.k.size()) == s, ErrorKind::incompatible, "dimension mismatch between k and points");
    const auto unity = unity_table(points.front().base());
    for (const auto& z : points) sum.add(unity[static_cast<std::size_t>(character(f.k, z).exponent())].real());
    out.exact = std::all_of(f.k.begin(), f.k.end(), [](std::uint64_t v) { return v == 0; }) ? 1.0 : 0.0;
  } else {
    for (const auto& z : points) {
      double v = 1.0;
      for (const auto& x : project(z)) {
        const double t = x.convert_to<double>();
        switch (f.kind) {
          case IntegrandKind::product_linear: v *= t; break;
          case IntegrandKind::product_quadratic: v *= t * t + f.c; break;
          case IntegrandKind::product_exp: v *= std::exp(t); break;
          default: break;
        }
      }
      sum.add(v);
    }
    switch (f.kind) {
      case IntegrandKind::constant: out.exact = 1.0; break;
      case IntegrandKind::product_linear: out.exact = std::pow(0.5, s); break;
      case IntegrandKind::product_quadratic: out.exact = std::pow(1.0 / 3.0 + f.c, s); break;
      case IntegrandKind::product_exp: out.exact = std::pow(std::numbers::e - 1.0, s); break;
      default: break;
    }
  }
  out.estimate = sum.value() / static_cast<double>(points.size());
  return out;
}

}  // namespace symnet

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Each criterion is also held to its wall-clock budget.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "property_checks.hpp"
#include "symnet/digital_net.hpp"
#include "symnet/discrepancy.hpp"
#include "symnet/dual_weight.hpp"
#include "symnet/rkhs_error.hpp"

using namespace symnet;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = secs < budget_s;
  const bool ok = o.ok && in_time;
  if (!ok) ++failures;
  std::printf("%s %s: %s (%.2fs / %.0fs)%s%s\n", ok ? "PASS" : "FAIL", id, title, secs, budget_s,
              o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

// inner nets with m <= 3 and n <= 6, some with more rows than columns
std::vector<DigitalNet> small_inner_nets(Base base, std::mt19937_64& rng) {
  std::vector<DigitalNet> nets;
  for (int m = 1; m <= 3; ++m) nets.push_back(hammersley_matrices(base, m));
  for (int n = 3; n <= 6; ++n) nets.push_back(truncated_sym_hammersley(base, 1, n));
  for (int t = 0; t < 6; ++t) {
    const int m = 1 + t % 3;
    nets.push_back(checks::random_net(base, 2, m, m + t % 4, rng));
  }
  return nets;
}

Outcome dual_identity() {
  std::mt19937_64 rng(101);
  int nets = 0;
  for (int b : {2, 3})
    for (const auto& inner : small_inner_nets(Base(b), rng)) {
      ++nets;
      if (!checks::dual_identity_holds(inner, 4))
        return {false, "mismatch for b=" + std::to_string(b) + " m=" + std::to_string(inner.m()) + " n=" + std::to_string(inner.n())};
    }
  return {true, std::to_string(nets) + " nets, box k_j < b^4"};
}

Outcome orthogonality() {
  std::mt19937_64 rng(202);
  int nets = 0;
  for (int b : {2, 3})
    for (const auto& inner : small_inner_nets(Base(b), rng)) {
      ++nets;
      if (!checks::orthogonality_dichotomy(inner, 200, rng()))
        return {false, "non-dichotomous sum for b=" + std::to_string(b) + " m=" + std::to_string(inner.m())};
    }
  return {true, std::to_string(nets) + " nets x 200 frequencies"};
}

Outcome min_weight() {
  int certified = 0, enumerated = 0;
  for (int b : {2, 3, 5})
    for (int m = 1; m <= 4; ++m)
      for (int n = 2 * m + 1; n <= 2 * m + 3; ++n) {
        auto net = truncated_sym_hammersley(Base(b), m, n);
        const std::string tag = " b=" + std::to_string(b) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
        if (!certify_rho2_via_independence(net, 2 * m + 1)) return {false, "certification failed" + tag};
        ++certified;
        if (b <= 3 && m <= 3) {
          if (!rho2_min_weight(net, 2 * m + 1).exceeds_cap()) return {false, "enumeration found weight <= 2m+1" + tag};
          ++enumerated;
        }
      }
  return {true, std::to_string(certified) + " certified, " + std::to_string(enumerated) + " enumerated"};
}

Outcome wce_identity() {
  double worst = 0;
  int cases = 0;
  for (int t = 0; t < 20; ++t) {
    const int m = 1 + t % 3, K = 1 + (t / 3) % 3, rank = 1 + t % 4;
    SymmetrizedNet net(hammersley_matrices(Base(2), m));
    Kernel k = BandLimitedKernel::random(Base(2), 2, K, rank, 1000 + static_cast<std::uint64_t>(t));
    auto d = wce_direct(net.points(), k);
    auto s = wce_spectral(net, k);
    if (s.tail_bound != 0.0) return {false, "band-limited spectral sum reported a tail"};
    const double gap = std::abs(d.raw - s.raw);
    worst = std::max(worst, gap);
    ++cases;
    if (gap > s.tail_bound + 1e-10) return {false, "band kernel " + std::to_string(t) + " gap " + fmt(gap)};
  }
  for (double alpha : {1.0, 1.5})
    for (int m = 1; m <= 3; ++m) {
      SymmetrizedNet net(hammersley_matrices(Base(2), m));
      Kernel k = SpectralDiagonalKernel(Base(2), alpha, {1.0, 1.0});
      auto d = wce_direct(net.points(), k);
      auto s = wce_spectral(net, k);
      const double gap = std::abs(d.raw - s.raw);
      worst = std::max(worst, gap);
      ++cases;
      if (gap > s.tail_bound + 1e-10) return {false, "alpha " + fmt(alpha) + " m=" + std::to_string(m) + " gap " + fmt(gap)};
    }
  return {true, std::to_string(cases) + " cases, max |direct - spectral| = " + fmt(worst)};
}

Outcome mean_square_wce() {
  // inner nets with more rows than columns, so that digital shifts of the
  // symmetrized net are not mere permutations of it
  std::mt19937_64 rng(505);
  double worst = 0;
  for (int t = 0; t < 5; ++t) {
    SymmetrizedNet net(checks::random_net(Base(2), 2, 2, 3, rng));
    auto pts = net.points();
    Kernel k = BandLimitedKernel::random(Base(2), 2, 3, 1 + t % 3, 5000 + static_cast<std::uint64_t>(t));
    auto spec = ms_wce_spectral(net, k);
    auto mc = ms_wce_monte_carlo(pts, k, 200, 77 + static_cast<std::uint64_t>(t));
    const double z = std::abs(spec.raw - mc.raw) / mc.tail_bound;
    worst = std::max(worst, z);
    if (!(std::abs(spec.raw - mc.raw) <= 3 * mc.tail_bound))
      return {false, "kernel " + std::to_string(t) + " off by " + fmt(z) + " standard errors"};
  }
  return {true, "max deviation " + fmt(worst) + " standard errors"};
}

Outcome truncation() {
  int cases = 0;
  std::vector<std::string> violations;
  for (int m = 2; m <= 4; ++m) {
    auto full = sym_hammersley_points(Base(2), m);
    for (int n = m + 2; n <= 2 * m + 2; ++n) {
      auto trunc = project_points(enumerate_points(truncated_sym_hammersley(Base(2), m, n)));
      for (double p : {1.0, 2.0, 4.0}) {
        const double a = lp_star(full, p).value, b = lp_star(trunc, p).value, bound = truncation_bound(Base(2), m, n, p);
        ++cases;
        if (!(a <= b + bound + 1e-10))
          violations.push_back("m=" + std::to_string(m) + " n=" + std::to_string(n) + " p=" + fmt(p) + ": " + fmt(a) + " > " +
                               fmt(b) + " + " + fmt(bound));
      }
    }
  }
  std::string d = std::to_string(cases - static_cast<int>(violations.size())) + "/" + std::to_string(cases) + " cases hold";
  for (const auto& v : violations) d += "; " + v;
  return {violations.empty(), d};
}

Outcome scaling() {
  std::vector<double> sym, ham_log, ham_sqrt;
  for (int m = 4; m <= 12; ++m) {
    const double N = std::ldexp(1.0, m + 2);
    sym.push_back(l2_star(sym_hammersley_points(Base(2), m)).value * N / std::sqrt(m + 2.0));
    const double h = l2_star(project_points(enumerate_points(hammersley_matrices(Base(2), m)))).value;
    ham_log.push_back(h * std::ldexp(1.0, m) / m);
    ham_sqrt.push_back(h * std::ldexp(1.0, m) / std::sqrt(double(m)));
  }
  auto spread = [](const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()) / *std::min_element(v.begin(), v.end()); };
  const bool monotone = std::is_sorted(ham_sqrt.begin(), ham_sqrt.end());
  const double growth = ham_sqrt.back() / ham_sqrt.front();
  std::ostringstream d;
  d << "sym spread " << fmt(spread(sym)) << ", H log spread " << fmt(spread(ham_log)) << ", H sqrt-log growth " << fmt(growth)
    << (monotone ? " monotone" : " not monotone") << " [";
  for (std::size_t i = 0; i < ham_sqrt.size(); ++i) d << (i ? " " : "") << fmt(ham_sqrt[i]);
  d << "]";
  return {spread(sym) <= 2.0 && spread(ham_log) <= 2.0 && monotone && growth >= 1.5, d.str()};
}

Outcome cross_method() {
  std::mt19937_64 rng(303);
  double worst = 0;
  for (int t = 0; t < 20; ++t) {
    const int b = 2 + t % 2, m = 2 + t % 3;
    auto pts = project_points(enumerate_points(checks::random_net(Base(b), 2, m, m + t % 3, rng)));
    const double gap = std::abs(l2_star(pts).value - lp_star(pts, 2.0).value);
    worst = std::max(worst, gap);
    if (gap > 1e-10) return {false, "net " + std::to_string(t) + " gap " + fmt(gap)};
  }
  const PointSet2 origin(1, {0}, {0}), centre(2, {1}, {1});
  if (l2_star_squared(origin) != Rational(11, 18)) return {false, "L2^2 of {(0,0)} != 11/18"};
  if (lp_star_power_exact(origin, 2) != Rational(11, 18)) return {false, "cell L2^2 of {(0,0)} != 11/18"};
  if (local_discrepancy(origin, Rational(1, 2), Rational(1, 2)) != Rational(3, 4)) return {false, "local discrepancy != 3/4"};
  if (linf_star_exact(centre) != Rational(3, 4)) return {false, "sup discrepancy of {(1/2,1/2)} != 3/4"};
  if (std::abs(lp_star(origin, 1.0).value - 0.75) > 1e-10) return {false, "L1 of {(0,0)} != 3/4"};
  return {true, "max gap " + fmt(worst) + "; single-point rationals exact"};
}

Outcome foundations() {
  int cases = 0;
  for (int b : {2, 3})
    for (int s = 1; s <= 2; ++s)
      for (int n = 1; n <= 4; ++n) {
        const Base base(b);
        const std::string tag = " b=" + std::to_string(b) + " s=" + std::to_string(s) + " n=" + std::to_string(n);
        if (!checks::characters_average_to_delta(base, n, s)) return {false, "average" + tag};
        if (!checks::characters_orthonormal(base, n, s, 4096, 17)) return {false, "orthonormality" + tag};
        if (!checks::character_sum_detects_prefix(base, n, s, 2000, 19)) return {false, "prefix sum" + tag};
        ++cases;
      }
  return {true, std::to_string(cases) + " (b, s, n) combinations"};
}

}  // namespace

int main() {
  criterion("AC1", "symmetrized dual equals dual intersected with E^2", 30, dual_identity);
  criterion("AC2", "character sums over nets and symmetrized nets are |P| or 0", 10, orthogonality);
  criterion("AC3", "truncated symmetrized Hammersley has minimum Dick weight > 2m+1", 120, min_weight);
  criterion("AC4", "worst-case error: direct equals spectral", 60, wce_identity);
  criterion("AC5", "mean square worst-case error under digital shifts", 120, mean_square_wce);
  criterion("AC6", "truncation changes L_p by at most the stated bound", 120, truncation);
  criterion("AC7", "L_2 scaling of symmetrized vs plain Hammersley", 180, scaling);
  criterion("AC8", "closed-form and cell-integral L_2 agree; exact single points", 60, cross_method);
  criterion("AC9", "character average, orthonormality and prefix sums", 60, foundations);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

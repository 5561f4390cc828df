#include "symnet/dual_weight.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

namespace symnet {

namespace {

// Syndrome of a single coordinate: sum_i kappa_i row_i(C) mod b.
void add_syndrome(const GeneratingMatrix& c, std::uint64_t k, std::vector<int>& acc) {
  const auto b = static_cast<std::uint64_t>(c.base().value());
  for (int i = 0; k > 0; ++i, k /= b) {
    const auto kappa = static_cast<int>(k % b);
    if (kappa == 0) continue;
    const auto row = c.row_or_tail(i);
    for (std::size_t col = 0; col < row.size(); ++col) acc[col] += kappa * row[col];
  }
}

std::vector<Digit> reduce(const std::vector<int>& acc, int b) {
  std::vector<Digit> out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<Digit>(acc[i] % b);
  return out;
}

std::string key_of(const std::vector<Digit>& syndrome) { return std::string(syndrome.begin(), syndrome.end()); }

std::string negated_key(const std::vector<Digit>& syndrome, int b) {
  std::string out(syndrome.size(), '\0');
  for (std::size_t i = 0; i < syndrome.size(); ++i) out[i] = static_cast<char>((b - syndrome[i]) % b);
  return out;
}

int mod_inverse(int a, int p) {
  // Fermat: a^(p-2) mod p.
  int result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

std::string describe(std::span<const RowRef> rows) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < rows.size(); ++i) os << (i ? "," : "") << "c" << rows[i].matrix + 1 << "," << rows[i].index;
  os << '}';
  return os.str();
}

}  // namespace

std::vector<Digit> dual_syndrome(const DigitalNet& net, const KVector& k) {
  require(k.size() == static_cast<std::size_t>(net.dim()), ErrorKind::incompatible, "dimension mismatch between k and net");
  std::vector<int> acc(static_cast<std::size_t>(net.m()), 0);
  for (int j = 0; j < net.dim(); ++j) add_syndrome(net.matrix(j), k[static_cast<std::size_t>(j)], acc);
  return reduce(acc, net.base().value());
}

bool dual_contains(const DigitalNet& net, const KVector& k) {
  const std::uint64_t limit = ipow(net.base().value(), net.n());
  for (auto kj : k)
    if (kj >= limit) fail(ErrorKind::invalid_argument, "digits exceed matrix rows");
  const auto syn = dual_syndrome(net, k);
  return std::all_of(syn.begin(), syn.end(), [](Digit d) { return d == 0; });
}

bool in_symmetrized_dual(const DigitalNet& inner, const KVector& k) {
  for (auto kj : k)
    if (!in_E(kj, inner.base())) return false;
  const auto syn = dual_syndrome(inner, k);
  return std::all_of(syn.begin(), syn.end(), [](Digit d) { return d == 0; });
}

std::vector<KVector> dual_enumerate_below(const DigitalNet& net, int digits, std::uint64_t max_candidates) {
  require(digits >= 0, ErrorKind::invalid_argument, "digit bound must be nonnegative");
  const int b = net.base().value();
  const int s = net.dim();
  const std::uint64_t per_coord = ipow(b, digits);
  std::uint64_t total = 1;
  for (int j = 0; j < s; ++j) {
    if (total > max_candidates / per_coord) fail(ErrorKind::guard_exceeded, "dual enumeration exceeds the candidate cap");
    total *= per_coord;
  }

  // Per-coordinate syndrome tables, then an odometer over all tuples.
  const auto cols = static_cast<std::size_t>(net.m());
  std::vector<std::vector<std::vector<int>>> table(static_cast<std::size_t>(s));
  for (int j = 0; j < s; ++j) {
    auto& t = table[static_cast<std::size_t>(j)];
    t.resize(per_coord, std::vector<int>(cols, 0));
    for (std::uint64_t k = 0; k < per_coord; ++k) add_syndrome(net.matrix(j), k, t[k]);
  }

  std::vector<KVector> out;
  KVector k(static_cast<std::size_t>(s), 0);
  std::vector<int> acc(cols);
  for (std::uint64_t t = 0; t < total; ++t) {
    std::fill(acc.begin(), acc.end(), 0);
    for (int j = 0; j < s; ++j) {
      const auto& syn = table[static_cast<std::size_t>(j)][k[static_cast<std::size_t>(j)]];
      for (std::size_t c = 0; c < cols; ++c) acc[c] += syn[c];
    }
    if (std::all_of(acc.begin(), acc.end(), [b](int v) { return v % b == 0; })) out.push_back(k);
    for (int j = s - 1; j >= 0; --j) {
      if (++k[static_cast<std::size_t>(j)] < per_coord) break;
      k[static_cast<std::size_t>(j)] = 0;
    }
  }
  return out;
}

WeightProfile mu2(std::uint64_t k, Base base) {
  WeightProfile w;
  w.k = k;
  const auto b = static_cast<std::uint64_t>(base.value());
  int pos = 1;
  for (std::uint64_t r = k; r > 0; r /= b, ++pos)
    if (r % b != 0) w.positions.push_back(pos);
  std::reverse(w.positions.begin(), w.positions.end());
  if (w.positions.size() >= 2)
    w.mu2 = w.positions[0] + w.positions[1];
  else if (w.positions.size() == 1)
    w.mu2 = w.positions[0];
  return w;
}

int dick_weight(std::uint64_t k, Base base) { return mu2(k, base).mu2; }

int dick_weight(const KVector& k, Base base) {
  int w = 0;
  for (auto kj : k) w += dick_weight(kj, base);
  return w;
}

Rho2Result rho2_min_weight(const DigitalNet& net, int cap, std::uint64_t max_candidates) {
  if (net.dim() != 2) fail(ErrorKind::unsupported, "minimum Dick weight is implemented for s = 2 only");
  if (!net.has_zero_tails()) fail(ErrorKind::unsupported, "minimum Dick weight needs finite (zero-tail) generating matrices");
  require(cap >= 0 && cap <= 2 * net.n(), ErrorKind::invalid_argument, "cap must lie in [0, 2n]");
  const int b = net.base().value();
  const int n = net.n();
  const auto ub = static_cast<std::uint64_t>(b);

  // Count candidates per coordinate before generating any.
  std::uint64_t count = 0;
  for (int a1 = 1; a1 <= std::min(n, cap); ++a1) {
    count += ub - 1;
    for (int a2 = 1; a2 < a1 && a1 + a2 <= cap; ++a2) count += (ub - 1) * (ub - 1) * ipow(b, a2 - 1);
  }
  Rho2Result result;
  result.cap = cap;
  result.candidates = 2 * count;
  if (result.candidates > max_candidates) fail(ErrorKind::guard_exceeded, "weight-bounded enumeration exceeds the candidate cap");

  // Best weight per syndrome class for each coordinate (nonzero k only).
  std::unordered_map<std::string, int> best[2];
  auto visit = [&](std::uint64_t k, int w) {
    for (int j = 0; j < 2; ++j) {
      std::vector<int> acc(static_cast<std::size_t>(net.m()), 0);
      add_syndrome(net.matrix(j), k, acc);
      const auto key = key_of(reduce(acc, b));
      auto [it, inserted] = best[j].try_emplace(key, w);
      if (!inserted && w < it->second) it->second = w;
    }
  };
  for (int a1 = 1; a1 <= std::min(n, cap); ++a1) {
    const std::uint64_t top = ipow(b, a1 - 1);
    for (std::uint64_t d1 = 1; d1 < ub; ++d1) {
      visit(d1 * top, a1);
      for (int a2 = 1; a2 < a1 && a1 + a2 <= cap; ++a2) {
        const std::uint64_t mid = ipow(b, a2 - 1);
        for (std::uint64_t d2 = 1; d2 < ub; ++d2)
          for (std::uint64_t low = 0; low < mid; ++low) visit(d1 * top + d2 * mid + low, a1 + a2);
      }
    }
  }

  std::optional<int> rho;
  auto consider = [&rho](int w) {
    if (!rho || w < *rho) rho = w;
  };
  const std::string zero_key(static_cast<std::size_t>(net.m()), '\0');
  for (int j = 0; j < 2; ++j)
    if (auto it = best[j].find(zero_key); it != best[j].end()) consider(it->second);
  for (const auto& [key, w1] : best[0]) {
    const std::vector<Digit> syn(key.begin(), key.end());
    if (auto it = best[1].find(negated_key(syn, b)); it != best[1].end()) consider(w1 + it->second);
  }
  // Rows past n are zero, so (b^n, 0) is always dual with weight n + 1.
  consider(n + 1);

  if (rho && *rho <= cap) result.rho2 = rho;
  return result;
}

int rank_mod_p(std::vector<std::vector<Digit>> rows, Base base) {
  if (!base.is_prime()) fail(ErrorKind::unsupported, "requires prime base");
  const int p = base.value();
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::vector<std::vector<int>> a(rows.size(), std::vector<int>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require(rows[i].size() == cols, ErrorKind::invalid_argument, "rows differ in length");
    for (std::size_t c = 0; c < cols; ++c) a[i][c] = rows[i][c] % p;
  }
  int rank = 0;
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < a.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[static_cast<std::size_t>(rank)]);
    auto& pr = a[static_cast<std::size_t>(rank)];
    const int inv = mod_inverse(pr[c], p);
    for (auto& v : pr) v = v * inv % p;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      const int f = a[r][c];
      for (std::size_t cc = 0; cc < cols; ++cc) a[r][cc] = ((a[r][cc] - f * pr[cc]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

bool rows_independent(const DigitalNet& net, std::span<const RowRef> rows) {
  std::vector<std::vector<Digit>> vecs;
  vecs.reserve(rows.size());
  for (const auto& r : rows) {
    require(r.matrix >= 0 && r.matrix < net.dim() && r.index >= 1, ErrorKind::invalid_argument, "row reference out of range");
    if (r.index > net.n()) return false;  // zero vector
    const auto row = net.matrix(r.matrix).row(r.index - 1);
    vecs.emplace_back(row.begin(), row.end());
  }
  return rank_mod_p(std::move(vecs), net.base()) == static_cast<int>(rows.size());
}

IndependenceReport check_independence_sets(const DigitalNet& net) {
  if (!net.base().is_prime()) fail(ErrorKind::unsupported, "requires prime base");
  require(net.dim() == 2, ErrorKind::unsupported, "independence families are defined for s = 2");
  const int m = net.m() - 2;
  const int n = net.n();
  require(m >= 1 && n >= m + 2, ErrorKind::invalid_argument, "expected an n x (m+2) net with n >= m+2");

  IndependenceReport report;
  std::vector<RowRef> set;
  auto prefix = [&set](int matrix, int count) {
    for (int i = 1; i <= count; ++i) set.push_back({matrix, i});
  };
  auto check = [&](int family) {
    ++report.sets_checked;
    if (!rows_independent(net, set)) report.failures.push_back({family, describe(set)});
    set.clear();
  };

  for (int r = 0; r <= m + 1; ++r) {
    prefix(0, r);
    prefix(1, m + 1 - r);
    check(1);
  }
  for (int r = 1; r <= m; ++r) {
    prefix(0, m + 1);
    set.push_back({1, r});
    check(2);
    prefix(1, m + 1);
    set.push_back({0, r});
    check(2);
  }
  for (int j = 0; j < 2; ++j)
    for (int r = 0; r <= m; ++r)
      for (int s = m + 1; s <= n; ++s) {
        prefix(0, r);
        prefix(1, m - r);
        set.push_back({j, s});
        check(3);
      }
  for (int r11 = 2; r11 <= m; ++r11)
    for (int r12 = 1; r12 < r11; ++r12)
      for (int r21 = 2; r21 <= m; ++r21)
        for (int r22 = 1; r22 < r21; ++r22) {
          if (r11 + r12 + r21 + r22 > 2 * m + 1) continue;
          prefix(0, r12);
          set.push_back({0, r11});
          prefix(1, r22);
          set.push_back({1, r21});
          check(4);
        }
  return report;
}

bool certify_rho2_via_independence(const DigitalNet& net, int rho) {
  if (!net.base().is_prime()) fail(ErrorKind::unsupported, "requires prime base");
  if (net.dim() != 2) fail(ErrorKind::unsupported, "certification is implemented for s = 2 only");
  if (rho <= 0) return true;
  const int limit = 2 * net.m();

  // Row sets are closed under taking subsets, so only the maximal set for each
  // choice of the two largest indices needs checking: {1..i2} u {i1}.
  struct Option {
    int weight;
    std::vector<int> rows;
  };
  std::vector<Option> options{{0, {}}};
  for (int i1 = 1; i1 <= limit && i1 <= rho; ++i1) {
    options.push_back({i1, {i1}});
    for (int i2 = 1; i2 < i1 && i1 + i2 <= rho; ++i2) {
      Option o{i1 + i2, {}};
      for (int i = 1; i <= i2; ++i) o.rows.push_back(i);
      o.rows.push_back(i1);
      options.push_back(std::move(o));
    }
  }
  std::vector<RowRef> set;
  for (const auto& o1 : options)
    for (const auto& o2 : options) {
      if (o1.weight + o2.weight > rho) continue;
      set.clear();
      for (int i : o1.rows) set.push_back({0, i});
      for (int i : o2.rows) set.push_back({1, i});
      if (!rows_independent(net, set)) return false;
    }
  return true;
}

}  // namespace symnet

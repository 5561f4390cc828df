#include "symnet/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "symnet/discrepancy.hpp"
#include "symnet/dual_weight.hpp"
#include "symnet/net_io.hpp"
#include "symnet/parallel.hpp"
#include "symnet/rkhs_error.hpp"

namespace symnet::cli {

namespace {

using nlohmann::json;

// A verification that ran to completion but did not hold.
struct VerificationFailed {};

struct Options {
  int base = 2;
  int m = 0;
  std::optional<int> n;
  std::string kind = "hammersley";
  std::string in;
  std::string out_path;
  std::string format;
  std::optional<std::uint64_t> seed;
  unsigned threads = 0;
  std::uint64_t max_candidates = kDefaultMaxCandidates;
  std::uint64_t max_ops = std::uint64_t{1} << 28;

  // verify / study specific
  int digits = 4;
  int count = 200;
  std::optional<int> cap;
  std::string method = "enumeration";
  std::string m_range;
  std::string p_list = "2";
  std::string kinds = "hammersley,sym-hammersley";
  int n_offset = 0;
  std::string kernel = "diag:1";
  std::string integrand = "product_quadratic:0";
};

void add_common(CLI::App* app, Options& o) {
  app->add_option("--base", o.base, "base b")->check(CLI::Range(2, 255));
  app->add_option("--m", o.m, "number of index digits m")->check(CLI::Range(1, 40));
  app->add_option("--n", o.n, "matrix rows n (truncation precision)")->check(CLI::Range(1, 62));
  app->add_option("--kind", o.kind, "hammersley | sym-hammersley | truncated-sym-hammersley | custom-json")
      ->check(CLI::IsMember({"hammersley", "sym-hammersley", "truncated-sym-hammersley", "custom-json"}));
  app->add_option("--in", o.in, "net JSON file for --kind custom-json");
  app->add_option("-o,--out", o.out_path, "output file (default stdout)");
  app->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--seed", o.seed, "RNG seed");
  app->add_option("--threads", o.threads, "worker cap (default: QMC_THREADS, else all cores)");
  app->add_option("--max-candidates", o.max_candidates, "enumeration guard");
  app->add_option("--max-ops", o.max_ops, "per-row operation guard for studies");
}

struct BuiltNet {
  DigitalNet net;
  std::optional<DigitalNet> inner;  // set when net is the symmetrization of inner
};

BuiltNet build_net(const Options& o) {
  if (o.kind == "custom-json") {
    if (o.in.empty()) fail(ErrorKind::invalid_argument, "--kind custom-json needs --in FILE");
    std::ifstream f(o.in);
    if (!f) fail(ErrorKind::invalid_argument, "cannot open " + o.in);
    json j;
    try {
      f >> j;
    } catch (const json::exception& e) {
      fail(ErrorKind::invalid_argument, std::string("net JSON: ") + e.what());
    }
    return {net_from_json(j), std::nullopt};
  }
  if (o.m < 1) fail(ErrorKind::invalid_argument, "--m is required");
  const Base b(o.base);
  if (o.kind == "hammersley") return {hammersley_matrices(b, o.m), std::nullopt};
  if (o.kind == "truncated-sym-hammersley" && !o.n) fail(ErrorKind::invalid_argument, "--kind truncated-sym-hammersley needs --n");
  if (o.n) return {truncated_sym_hammersley(b, o.m, *o.n), std::nullopt};
  DigitalNet inner = hammersley_matrices(b, o.m);
  return {symmetrize_matrices(inner), inner};
}

// The net whose symmetrization a verification is about.
DigitalNet inner_net(const Options& o) {
  BuiltNet b = build_net(o);
  return b.inner ? *b.inner : b.net;
}

class Output {
 public:
  Output(const Options& o, std::ostream& fallback) {
    if (!o.out_path.empty()) {
      file_.open(o.out_path);
      if (!file_) fail(ErrorKind::invalid_argument, "cannot write " + o.out_path);
    }
    os_ = o.out_path.empty() ? &fallback : &file_;
    *os_ << std::setprecision(17);
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

std::vector<int> parse_range(const std::string& text, int fallback) {
  if (text.empty()) {
    if (fallback < 1) fail(ErrorKind::invalid_argument, "give --m or --m-range A..B");
    return {fallback};
  }
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) return {std::stoi(text)};
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo < 1 || hi < lo) fail(ErrorKind::invalid_argument, "empty m range: " + text);
    std::vector<int> r;
    for (int v = lo; v <= hi; ++v) r.push_back(v);
    return r;
  } catch (const std::logic_error&) {
    fail(ErrorKind::invalid_argument, "bad range: " + text);
  }
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  if (out.empty()) fail(ErrorKind::invalid_argument, "empty list");
  return out;
}

double parse_p(const std::string& s) {
  if (s == "inf") return kInfinity;
  try {
    const double p = std::stod(s);
    if (!(p >= 1.0)) fail(ErrorKind::invalid_argument, "p must be >= 1: " + s);
    return p;
  } catch (const std::logic_error&) {
    fail(ErrorKind::invalid_argument, "bad p value: " + s);
  }
}

std::string format_p(double p) {
  if (std::isinf(p)) return "inf";
  std::ostringstream os;
  os << p;
  return os.str();
}

json result_json(const WceResult& r, const std::optional<std::uint64_t>& seed) {
  json j{{"method", method_name(r.method)}, {"value", r.value}, {"tail_bound", r.tail_bound}, {"terms_used", r.terms_used}};
  if (r.clamped) j["clamped"] = true;
  if (seed) j["seed"] = *seed;
  return j;
}

void emit_csv_or_json(Output& out, const Options& o, const std::vector<std::string>& columns, const std::vector<std::vector<std::string>>& rows) {
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& row : rows) {
      json obj = json::object();
      for (std::size_t c = 0; c < columns.size(); ++c) obj[columns[c]] = row[c];
      arr.push_back(std::move(obj));
    }
    *out << arr.dump(2) << '\n';
    return;
  }
  *out << "# schema=1\n";
  for (std::size_t c = 0; c < columns.size(); ++c) *out << (c ? "," : "") << columns[c];
  *out << '\n';
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) *out << (c ? "," : "") << row[c];
    *out << '\n';
  }
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// --- net -------------------------------------------------------------------

void cmd_net_gen(const Options& o, std::ostream& os) {
  Output out(o, os);
  const DigitalNet net = build_net(o).net;
  json j = net_to_json(net);
  j["size"] = net.size();
  *out << j.dump(2) << '\n';
}

void cmd_net_symmetrize(const Options& o, std::ostream& os) {
  Output out(o, os);
  const DigitalNet net = symmetrize_matrices(build_net(o).net);
  json j = net_to_json(net);
  j["size"] = net.size();
  *out << j.dump(2) << '\n';
}

void cmd_net_points(const Options& o, std::ostream& os) {
  Output out(o, os);
  const DigitalNet net = build_net(o).net;
  const auto pts = enumerate_points(net, o.max_candidates);
  if (o.format == "json")
    *out << json{{"base", o.base}, {"size", pts.size()}, {"points", points_to_json(pts)}}.dump(2) << '\n';
  else
    write_points_csv(*out, pts);
}

// --- verify ----------------------------------------------------------------

void cmd_verify_dual(const Options& o, std::ostream& os) {
  Output out(o, os);
  const DigitalNet inner = inner_net(o);
  const DigitalNet sym = symmetrize_matrices(inner);
  const auto lhs = dual_enumerate_below(sym, o.digits, o.max_candidates);
  std::vector<KVector> rhs;
  for (auto& k : dual_enumerate_below(inner, o.digits, o.max_candidates))
    if (std::all_of(k.begin(), k.end(), [&](std::uint64_t v) { return in_E(v, inner.base()); })) rhs.push_back(std::move(k));
  json report{{"check", "dual"}, {"digits", o.digits}, {"symmetrized_dual", lhs.size()}, {"dual_cap_E", rhs.size()}};
  const bool ok = lhs == rhs;
  report["passed"] = ok;
  if (!ok) {
    std::vector<KVector> diff;
    std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(diff));
    if (!diff.empty()) report["counterexample"] = diff.front();
  }
  *out << report.dump(2) << '\n';
  if (!ok) throw VerificationFailed{};
}

void cmd_verify_orthogonality(const Options& o, std::ostream& os) {
  Output out(o, os);
  const DigitalNet inner = inner_net(o);
  const SymmetrizedNet sym(inner);
  const auto P = enumerate_points(inner, o.max_candidates);
  const auto Q = sym.points(o.max_candidates);
  std::mt19937_64 rng(o.seed.value_or(0));
  const std::uint64_t limit = ipow(inner.base().value(), inner.n());
  std::uniform_int_distribution<std::uint64_t> pick(0, limit - 1);
  std::bernoulli_distribution from_dual(0.5);
  // half the draws come from the dual box so both outcomes are exercised
  std::vector<KVector> box;
  if (std::pow(static_cast<double>(limit), inner.dim()) <= 1048576.0) box = dual_enumerate_below(inner, inner.n(), o.max_candidates);

  json report{{"check", "orthogonality"}, {"count", o.count}};
  int hits = 0, sym_hits = 0;
  std::optional<KVector> bad;
  for (int t = 0; t < o.count && !bad; ++t) {
    KVector k(static_cast<std::size_t>(inner.dim()));
    if (!box.empty() && from_dual(rng))
      k = box[std::uniform_int_distribution<std::size_t>(0, box.size() - 1)(rng)];
    else
      for (auto& v : k) v = pick(rng);
    const bool d = dual_contains(inner, k);
    const bool ds = in_symmetrized_dual(inner, k);
    hits += d;
    sym_hits += ds;
    const auto cp = character_sum(P, k).counts;
    const auto cq = character_sum(Q, k).counts;
    const bool ok = cp.equals(d ? static_cast<std::int64_t>(P.size()) : 0) && cq.equals(ds ? static_cast<std::int64_t>(Q.size()) : 0);
    if (!ok) bad = k;
  }
  report["dual_hits"] = hits;
  report["symmetrized_dual_hits"] = sym_hits;
  report["passed"] = !bad;
  if (bad) report["counterexample"] = *bad;
  if (o.seed) report["seed"] = *o.seed;
  *out << report.dump(2) << '\n';
  if (bad) throw VerificationFailed{};
}

void cmd_verify_independence(const Options& o, std::ostream& os) {
  Output out(o, os);
  const DigitalNet net = build_net(o).net;
  const auto rep = check_independence_sets(net);
  json failures = json::array();
  for (const auto& f : rep.failures) failures.push_back({{"family", f.family}, {"rows", f.rows}});
  *out << json{{"check", "independence"}, {"sets_checked", rep.sets_checked}, {"failures", failures}, {"passed", rep.passed()}}.dump(2) << '\n';
  if (!rep.passed()) throw VerificationFailed{};
}

void cmd_verify_rho2(const Options& o, std::ostream& os) {
  Output out(o, os);
  const DigitalNet net = build_net(o).net;
  const bool sym_kind = o.kind == "sym-hammersley" || o.kind == "truncated-sym-hammersley";
  const int cap = o.cap.value_or(sym_kind ? 2 * o.m + 1 : 2 * net.n());
  json report;
  if ((o.method == "independence" || o.method == "both") && certify_rho2_via_independence(net, cap)) {
    report = {{"rho2", "exceeds"}, {"cap", cap}, {"certified_by", "independence"}};
    if (o.method == "both") {
      const auto r = rho2_min_weight(net, cap, o.max_candidates);
      report["enumeration_agrees"] = r.exceeds_cap();
      *out << report.dump(2) << '\n';
      if (!r.exceeds_cap()) throw VerificationFailed{};
      return;
    }
  } else {
    const auto r = rho2_min_weight(net, cap, o.max_candidates);
    report = {{"cap", cap}, {"certified_by", r.certified_by}, {"candidates", r.candidates}};
    if (r.rho2)
      report["rho2"] = *r.rho2;
    else
      report["rho2"] = "exceeds";
  }
  *out << report.dump(2) << '\n';
}

// --- study -----------------------------------------------------------------

PointSet2 study_points(const std::string& kind, Base b, int m, int n) {
  if (kind == "hammersley") return project_points(enumerate_points(hammersley_matrices(b, m)));
  if (kind == "sym-hammersley") return sym_hammersley_points(b, m);
  if (kind == "truncated-sym-hammersley") return project_points(enumerate_points(truncated_sym_hammersley(b, m, n)));
  fail(ErrorKind::invalid_argument, "unknown study kind: " + kind);
}

void cmd_study_discrepancy(const Options& o, std::ostream& os, std::ostream& err) {
  Output out(o, os);
  const Base b(o.base);
  std::vector<double> ps;
  for (const auto& s : split(o.p_list)) ps.push_back(parse_p(s));
  const auto kinds = split(o.kinds);
  std::vector<std::vector<std::string>> rows;
  for (const auto& kind : kinds)
    for (int m : parse_range(o.m_range, o.m)) {
      const int n = kind == "hammersley" ? m : kind == "sym-hammersley" ? m : 2 * m + 1 + o.n_offset;
      const std::uint64_t N = (kind == "hammersley" ? 1 : static_cast<std::uint64_t>(b.value()) * b.value()) * ipow(b.value(), m);
      if (static_cast<double>(N) * static_cast<double>(N) > static_cast<double>(o.max_ops)) {
        err << "warning: skipping kind=" << kind << " m=" << m << ": N^2 exceeds --max-ops\n";
        continue;
      }
      const PointSet2 P = study_points(kind, b, m, n);
      const double logN = std::log(static_cast<double>(N)) / std::log(static_cast<double>(b.value()));
      for (double p : ps) {
        DiscrepancyResult r;
        try {
          r = std::isinf(p) ? linf_star(P, o.max_ops) : p == 2.0 ? l2_star(P) : lp_star(P, p, o.max_ops);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::guard_exceeded) throw;
          err << "warning: skipping kind=" << kind << " m=" << m << " p=" << format_p(p) << ": " << e.what() << '\n';
          continue;
        }
        const double scaled = r.value * static_cast<double>(N);
        rows.push_back({str(b.value()), str(m), str(n), str(N), format_p(p), method_name(r.method), str(r.value), str(r.error_bound), kind,
                        str(scaled / std::sqrt(logN)), str(scaled / logN)});
      }
    }
  emit_csv_or_json(out, o, {"b", "m", "n", "N", "p", "method", "value", "error_bound", "kind", "ratio_sqrt_log", "ratio_log"}, rows);
}

Kernel parse_kernel(const std::string& spec, Base b, std::uint64_t seed) {
  const auto parts = [&] {
    std::vector<std::string> v;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ':');) v.push_back(item);
    return v;
  }();
  try {
    if (parts.size() >= 2 && parts[0] == "diag") {
      const double alpha = std::stod(parts[1]);
      const double gamma = parts.size() >= 3 ? std::stod(parts[2]) : 1.0;
      return SpectralDiagonalKernel(b, alpha, {gamma, gamma});
    }
    if (parts.size() >= 2 && parts[0] == "band") {
      const int K = std::stoi(parts[1]);
      const int rank = parts.size() >= 3 ? std::stoi(parts[2]) : 2;
      return BandLimitedKernel::random(b, 2, K, rank, seed);
    }
  } catch (const std::logic_error&) {
  }
  fail(ErrorKind::invalid_argument, "bad kernel spec (diag:ALPHA[:GAMMA] or band:K[:RANK]): " + spec);
}

void cmd_study_wce(const Options& o, std::ostream& os, std::ostream& err) {
  Output out(o, os);
  const Base b(o.base);
  const std::uint64_t seed = o.seed.value_or(0);
  const Kernel kernel = parse_kernel(o.kernel, b, seed);
  const bool band = std::holds_alternative<BandLimitedKernel>(kernel);
  std::vector<std::vector<std::string>> rows;
  json items = json::array();
  for (int m : parse_range(o.m_range, o.m)) {
    const SymmetrizedNet net(hammersley_matrices(b, m));
    const std::uint64_t N = net.net().size();
    if (static_cast<double>(N) * static_cast<double>(N) > static_cast<double>(o.max_ops)) {
      err << "warning: skipping m=" << m << ": N^2 exceeds --max-ops\n";
      continue;
    }
    const auto pts = net.points(o.max_candidates);
    const WceResult d = wce_direct(pts, kernel);
    const WceResult s = wce_spectral(net, kernel, o.max_candidates);
    const WceResult ms = ms_wce_spectral(net, kernel, o.max_candidates);
    const double diff = std::fabs(d.raw - s.raw);
    rows.push_back({str(b.value()), str(m), str(net.net().n()), str(N), o.kernel, str(d.value), str(s.value), str(s.tail_bound), str(s.terms_used),
                    str(diff), str(ms.value)});
    items.push_back({{"m", m}, {"N", N}, {"kernel", o.kernel}, {"direct", result_json(d, band ? o.seed : std::nullopt)},
                     {"spectral", result_json(s, band ? o.seed : std::nullopt)}, {"ms_spectral", result_json(ms, band ? o.seed : std::nullopt)}});
  }
  if (o.format == "json")
    *out << items.dump(2) << '\n';
  else
    emit_csv_or_json(out, o, {"b", "m", "n", "N", "kernel", "direct", "spectral", "tail_bound", "terms_used", "abs_diff", "ms_spectral"}, rows);
}

void cmd_study_convergence(const Options& o, std::ostream& os) {
  Output out(o, os);
  const Base b(o.base);
  const Integrand f = parse_integrand(o.integrand);
  std::vector<std::vector<std::string>> rows;
  for (const auto& kind : split(o.kinds))
    for (int m : parse_range(o.m_range, o.m)) {
      std::vector<GVector> pts;
      int n = m;
      if (kind == "hammersley")
        pts = enumerate_points(hammersley_matrices(b, m), o.max_candidates);
      else if (kind == "sym-hammersley")
        pts = SymmetrizedNet(hammersley_matrices(b, m)).points(o.max_candidates);
      else if (kind == "truncated-sym-hammersley")
        pts = enumerate_points(truncated_sym_hammersley(b, m, n = 2 * m + 1 + o.n_offset), o.max_candidates);
      else
        fail(ErrorKind::invalid_argument, "unknown study kind: " + kind);
      if (o.seed) pts = random_digital_shift(pts, *o.seed);
      const QmcEstimate q = qmc_integrate(pts, f);
      rows.push_back({str(b.value()), str(m), str(n), str(pts.size()), kind, o.integrand, str(q.estimate), str(q.exact),
                      str(std::fabs(q.estimate - q.exact)), o.seed ? str(*o.seed) : std::string()});
    }
  emit_csv_or_json(out, o, {"b", "m", "n", "N", "kind", "integrand", "estimate", "exact", "abs_error", "seed"}, rows);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digital nets, b-adic symmetrization and QMC error analysis", "qmc"};
  app.require_subcommand(1);
  Options o;
  std::function<void()> action;

  auto leaf = [&](CLI::App* parent, const char* name, const char* help, std::function<void()> fn) {
    CLI::App* sub = parent->add_subcommand(name, help);
    add_common(sub, o);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  CLI::App* net = app.add_subcommand("net", "build, symmetrize and enumerate nets");
  net->require_subcommand(1);
  leaf(net, "gen", "write a net as JSON", [&] { cmd_net_gen(o, out); });
  leaf(net, "symmetrize", "write the b-adic symmetrization of a net as JSON", [&] { cmd_net_symmetrize(o, out); });
  leaf(net, "points", "write the points of a net (csv or json)", [&] { cmd_net_points(o, out); });

  CLI::App* verify = app.add_subcommand("verify", "check dual-net, orthogonality and weight properties");
  verify->require_subcommand(1);
  leaf(verify, "dual", "symmetrized dual equals dual intersected with E^s on a digit box", [&] { cmd_verify_dual(o, out); })
      ->add_option("--digits", o.digits, "digit box K: k_j < b^K")
      ->check(CLI::Range(0, 20));
  leaf(verify, "orthogonality", "exact character sums over the net and its symmetrization", [&] { cmd_verify_orthogonality(o, out); })
      ->add_option("--count", o.count, "random frequency vectors")
      ->check(CLI::Range(1, 1000000));
  leaf(verify, "independence", "row-set independence families of the truncated net", [&] { cmd_verify_independence(o, out); });
  auto* rho = leaf(verify, "rho2", "minimum Dick weight report", [&] { cmd_verify_rho2(o, out); });
  rho->add_option("--cap", o.cap, "weight cap (default 2m+1 for symmetrized Hammersley, else 2n)");
  rho->add_option("--method", o.method, "enumeration | independence | both")->check(CLI::IsMember({"enumeration", "independence", "both"}));

  CLI::App* study = app.add_subcommand("study", "CSV/JSON studies over ranges of m");
  study->require_subcommand(1);
  auto* disc = leaf(study, "discrepancy", "L_p discrepancy of Hammersley-type sets", [&] { cmd_study_discrepancy(o, out, err); });
  auto* wce = leaf(study, "wce", "worst-case error, direct vs spectral", [&] { cmd_study_wce(o, out, err); });
  auto* conv = leaf(study, "convergence", "QMC integration error of test integrands", [&] { cmd_study_convergence(o, out); });
  for (auto* s : {disc, wce, conv}) s->add_option("--m-range", o.m_range, "A..B");
  for (auto* s : {disc, conv}) {
    s->add_option("--kinds", o.kinds, "comma list of hammersley, sym-hammersley, truncated-sym-hammersley");
    s->add_option("--n-offset", o.n_offset, "truncated nets use n = 2m+1+offset")->check(CLI::Range(0, 20));
  }
  disc->add_option("--p", o.p_list, "comma list of p values, 'inf' allowed");
  wce->add_option("--kernel", o.kernel, "diag:ALPHA[:GAMMA] or band:K[:RANK] (band uses --seed)");
  conv->add_option("--integrand", o.integrand, "constant | product_linear | product_quadratic:c | product_exp | walsh:k1,k2");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (o.threads > 0) set_thread_count(o.threads);
    if (!action) return kExitUsage;
    action();
    return kExitPass;
  } catch (const VerificationFailed&) {
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::guard_exceeded ? kExitGuard : kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace symnet::cli

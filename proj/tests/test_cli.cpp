#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "symnet/cli.hpp"

using namespace symnet;

namespace {
struct Run {
  int code;
  std::string out, err;
};

Run qmc(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }
}  // namespace

TEST_CASE("usage errors") {
  CHECK(qmc({}).code == cli::kExitUsage);
  CHECK(qmc({"net"}).code == cli::kExitUsage);
  CHECK(qmc({"net", "gen", "--base", "2"}).code == cli::kExitUsage);  // no --m
  CHECK(qmc({"net", "gen", "--base", "1", "--m", "2"}).code == cli::kExitUsage);
  CHECK(qmc({"net", "gen", "--m", "2", "--kind", "sobol"}).code == cli::kExitUsage);
  CHECK(qmc({"verify", "rho2", "--kind", "hammersley", "--m", "2", "--base", "4", "--method", "independence"}).code ==
        cli::kExitUsage);
}

TEST_CASE("net json round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "symnet_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "net.json").string();
  auto gen = qmc({"net", "gen", "--base", "3", "--m", "2", "--kind", "truncated-sym-hammersley", "--n", "6", "-o", path});
  REQUIRE(gen.code == cli::kExitPass);
  std::ifstream in(path);
  auto j = nlohmann::json::parse(in);
  CHECK(j["base"] == 3);
  CHECK(j["m"] == 4);
  CHECK(j["n"] == 6);

  auto direct = qmc({"net", "points", "--base", "3", "--m", "2", "--kind", "truncated-sym-hammersley", "--n", "6"});
  auto loaded = qmc({"net", "points", "--kind", "custom-json", "--in", path});
  REQUIRE(direct.code == cli::kExitPass);
  REQUIRE(loaded.code == cli::kExitPass);
  CHECK(direct.out == loaded.out);
  CHECK(direct.out.rfind("# schema=1\n", 0) == 0);
  CHECK(count_lines(direct.out) == 2 + 81);

  std::ofstream(dir / "bad.json") << R"({"base": 2, "s": 1, "m": 1, "n": 1, "matrices": [[[2]]]})";
  CHECK(qmc({"net", "points", "--kind", "custom-json", "--in", (dir / "bad.json").string()}).code == cli::kExitUsage);
  CHECK(qmc({"net", "points", "--kind", "custom-json", "--in", (dir / "missing.json").string()}).code == cli::kExitUsage);
}

TEST_CASE("symmetrize command") {
  auto r = qmc({"net", "symmetrize", "--base", "2", "--m", "2", "--kind", "hammersley"});
  REQUIRE(r.code == cli::kExitPass);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["m"] == 4);
  CHECK(j.contains("tail_rows"));
}

TEST_CASE("verify subcommands") {
  CHECK(qmc({"verify", "dual", "--base", "2", "--m", "2", "--kind", "hammersley", "--digits", "4"}).code == cli::kExitPass);
  CHECK(qmc({"verify", "orthogonality", "--base", "3", "--m", "2", "--kind", "hammersley", "--count", "50", "--seed", "4"}).code ==
        cli::kExitPass);
  CHECK(qmc({"verify", "independence", "--base", "2", "--m", "2", "--kind", "truncated-sym-hammersley", "--n", "5"}).code ==
        cli::kExitPass);
  auto rho = qmc({"verify", "rho2", "--base", "2", "--m", "3", "--kind", "truncated-sym-hammersley", "--n", "7", "--method", "both"});
  CHECK(rho.code == cli::kExitPass);
  CHECK(rho.out.find("exceeds") != std::string::npos);
  auto ham = qmc({"verify", "rho2", "--base", "2", "--m", "2", "--kind", "hammersley"});
  CHECK(ham.code == cli::kExitPass);
  CHECK(ham.out.find('3') != std::string::npos);
  auto guard = qmc({"verify", "rho2", "--base", "2", "--m", "3", "--kind", "truncated-sym-hammersley", "--n", "7",
                    "--max-candidates", "3"});
  CHECK(guard.code == cli::kExitGuard);
}

TEST_CASE("discrepancy study") {
  std::vector<std::string> args{"study", "discrepancy", "--base", "2", "--m-range", "2..4", "--p", "1,2,inf",
                                "--kinds", "hammersley,sym-hammersley"};
  auto a = qmc(args);
  REQUIRE(a.code == cli::kExitPass);
  CHECK(count_lines(a.out) == 2 + 18);
  CHECK(a.out.rfind("# schema=1\nb,m,n,N,p,method,value,error_bound,kind,", 0) == 0);
  auto b = qmc(args);
  CHECK(a.out == b.out);
  auto threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  CHECK(qmc(threaded).out == a.out);
  CHECK(qmc({"study", "discrepancy", "--m-range", "4..2"}).code == cli::kExitUsage);
}

TEST_CASE("wce and convergence studies") {
  auto w = qmc({"study", "wce", "--base", "2", "--m-range", "1..2", "--kernel", "diag:1"});
  REQUIRE(w.code == cli::kExitPass);
  CHECK(count_lines(w.out) == 2 + 2);
  auto band = qmc({"study", "wce", "--base", "2", "--m-range", "1..2", "--kernel", "band:2:2", "--seed", "3", "--format", "json"});
  REQUIRE(band.code == cli::kExitPass);
  CHECK(nlohmann::json::accept(band.out));
  CHECK(qmc({"study", "wce", "--m-range", "1..2", "--kernel", "gauss:1"}).code == cli::kExitUsage);
  auto c = qmc({"study", "convergence", "--base", "2", "--m-range", "2..3", "--integrand", "product_linear", "--seed", "7"});
  REQUIRE(c.code == cli::kExitPass);
  CHECK(c.out == qmc({"study", "convergence", "--base", "2", "--m-range", "2..3", "--integrand", "product_linear", "--seed", "7"}).out);
}

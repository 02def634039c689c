#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rvar/claims.hpp"
#include "rvar/config.hpp"
#include "rvar/errors.hpp"
#include "rvar/parameterization.hpp"

using namespace rvar;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string command = std::string(RVAR_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buffer[4096];
  while (std::size_t got = std::fread(buffer, 1, sizeof buffer, pipe)) out.append(buffer, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("rvar_test_" + name);
  std::ofstream(path) << contents;
  return path;
}

SweepConfig small_config() {
  SweepConfig c;
  c.k_max = 2;
  c.n_max = 4;
  c.rational_samples = 5;
  c.relation_samples = 5;
  c.interpolation_n_max = 3;
  return c;
}

}  // namespace

TEST_CASE("config text") {
  SweepConfig c;
  apply_config_text(c, "# comment\n\nk_max = 2\nprimes = 2, 5\nseed=7\nreport = out.json\n");
  CHECK(c.k_max == 2);
  CHECK(c.primes == std::vector<std::uint32_t>{2, 5});
  CHECK(c.seed == 7);
  CHECK(c.report_path == "out.json");
  CHECK_THROWS_AS(apply_config_text(c, "k_max = 2\nbogus = 1\n"), ConfigError);
  try {
    apply_config_text(c, "k_max = 2\nn_max = x\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(apply_config_text(c, "no equals sign\n"), ConfigError);
  CHECK(config_keys().size() == 16);
}

TEST_CASE("environment overrides") {
  SweepConfig c;
  apply_environment(c, {{"RVAR_N_MAX", "5"}, {"RVAR_SEED", "9"}, {"HOME", "/root"}});
  CHECK(c.n_max == 5);
  CHECK(c.seed == 9);
  CHECK_THROWS_AS(apply_environment(c, {{"RVAR_N_MAX", "five"}}), ConfigError);
}

TEST_CASE("config validation") {
  SweepConfig c;
  CHECK_NOTHROW(c.validate());
  c.n_min = 5;
  c.n_max = 4;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SweepConfig{};
  c.primes = {4};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SweepConfig{};
  c.budget = 0;
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SweepConfig{};
  c.primes = {};
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("claim ids") {
  const auto& ids = claim_ids();
  REQUIRE(ids.size() == 10);
  CHECK(ids.front() == "Thm3-roundtrip");
  CHECK(ids.back() == "Oracle-agreement");
  PointCache cache;
  CHECK_THROWS_AS(run_claim("no-such-claim", small_config(), cache), InvalidParameters);
}

TEST_CASE("reports are deterministic") {
  const auto a = run_all(small_config());
  const auto b = run_all(small_config());
  CHECK(a.pass());
  auto ja = a.to_json(false);
  auto jb = b.to_json(false);
  for (auto* j : {&ja, &jb}) {
    for (auto& claim : (*j)["claims"]) claim.erase("seconds");
  }
  CHECK(ja.dump() == jb.dump());
  CHECK(ja["claims"].size() == 10);
  CHECK(ja["verdict"] == "pass");
  CHECK(a.to_json(true).contains("version"));
  CHECK(a.summary().find("overall: pass") != std::string::npos);

  auto other = small_config();
  other.seed = 12345;
  const auto c = run_all(other);
  for (std::size_t i = 0; i < c.claims.size(); ++i) CHECK(c.claims[i].pass == a.claims[i].pass);
}

TEST_CASE("cli enumerate and count") {
  const auto listing = run_cli("enumerate --variety gr -k 1 -n 2");
  CHECK(listing.status == 0);
  CHECK(std::count(listing.out.begin(), listing.out.end(), '\n') == 3);
  const auto count = run_cli("--q 3 count --variety open-richardson -n 4 --beta {1,2} --gamma {3,4}");
  CHECK(count.status == 0);
  CHECK(count.out == "48\n");
  CHECK(run_cli("--q 4 count --variety gr -k 1 -n 2").status == 2);
  CHECK(run_cli("count --variety nonsense -k 1 -n 2").status != 0);
}

TEST_CASE("cli param round trip") {
  const KSubset beta({1, 2}, 4);
  const KSubset gamma({3, 4}, 4);
  const std::string w = format_matrix(phi(sample_y(beta, gamma, RationalField{}, 3), beta, gamma));
  const auto w_path = temp_file("w.txt", w);
  const auto y = run_cli("param -n 4 --beta {1,2} --gamma {3,4} --direction psi " + w_path.string());
  REQUIRE(y.status == 0);
  const auto y_path = temp_file("y.txt", y.out);
  const auto back = run_cli("param -n 4 --beta {1,2} --gamma {3,4} --direction phi " + y_path.string());
  CHECK(back.status == 0);
  CHECK(back.out == w);
  const auto junk = temp_file("junk.txt", "1 2\n3 x\n");
  CHECK(run_cli("param -n 4 --beta {1,2} --gamma {3,4} --direction phi " + junk.string()).status == 1);
}

TEST_CASE("cli certificate and config errors") {
  const auto cert = run_cli("certificate -n 4 --beta {1,2} --gamma {3,4} -t 1 --alpha {1,4}");
  CHECK(cert.status == 0);
  CHECK(cert.out.rfind("certificate\n", 0) == 0);
  CHECK(cert.out.find("terms 1\n1\n") != std::string::npos);
  const auto bad = temp_file("bad.conf", "n_max = 1\nn_min = 3\n");
  CHECK(run_cli("--config " + bad.string() + " verify-all").status == 2);
  CHECK(run_cli("--bogus verify-all").status == 2);
  const auto report = std::filesystem::temp_directory_path() / "rvar_test_report.json";
  const auto ok = temp_file("ok.conf", "k_max = 1\nn_max = 3\nrational_samples = 3\n");
  CHECK(run_cli("--config " + ok.string() + " --report " + report.string() + " verify-all --only Plucker-relations").status ==
        0);
  std::ifstream in(report);
  std::stringstream text;
  text << in.rdbuf();
  const auto json = nlohmann::json::parse(text.str());
  CHECK(json["verdict"] == "pass");
  CHECK(json["claims"].size() == 1);
}

// Runs the cbm executable (path from the build) and checks exit codes and
// output shapes.

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <doctest.h>
#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CBM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("cbm_cli_test_" + name);
  std::ofstream(path) << content;
  return path.string();
}

}  // namespace

TEST_CASE("verify emits one JSON line and exits 0 on pass") {
  const Run r = run("--json verify lemma-a");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["claim"] == "lemma-a");
  CHECK(j["status"] == "pass");
  CHECK_FALSE(j.contains("runtime_ms"));
  CHECK(nlohmann::json::parse(run("--json --timing verify lemma-f").out).contains("runtime_ms"));
}

TEST_CASE("usage errors exit 64") {
  CHECK(run("verify no-such-claim").code == 64);
  CHECK(run("").code == 64);
  CHECK(run("schur-norm").code == 64);
  CHECK(run("--bogus verify lemma-a").code == 64);
}

TEST_CASE("configuration errors exit 2") {
  CHECK(run("schur-norm --matrix /nonexistent.json").code == 2);
  CHECK(run("blowup --rmax 0.5").code == 2);
  const std::string bad = temp_file("bad.csv", "1, 2\n3\n");
  CHECK(run("schur-norm --matrix " + bad).code == 2);
  std::filesystem::remove(bad);
}

TEST_CASE("schur-norm on a CSV matrix") {
  const std::string m = temp_file("m.csv", "1, 1\n0, 1\n");
  const Run r = run("--json schur-norm --matrix " + m);
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["computed"]["norm"].get<double>() == doctest::Approx(1.1547005).epsilon(1e-6));
  std::filesystem::remove(m);
}

TEST_CASE("m0a-bound on a Gaussian") {
  const std::string spec = temp_file("spec.json", R"({"group": "Z", "kind": "gaussian", "sigma": 2.0})");
  const Run r = run("--json m0a-bound --spec " + spec + " --sets 3 --set-size 5");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["computed"]["lower_bound"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
  std::filesystem::remove(spec);
}

TEST_CASE("blowup CSV and config file") {
  const Run r = run("blowup --rmax 100 --steps 4");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("R,lower_bound\n", 0) == 0);
  int lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 5);
  const std::string cfg = temp_file("cfg.ini", "json=true\nseed=7\n");
  const Run c = run("--config " + cfg + " verify lemma-a");
  CHECK(c.code == 0);
  CHECK(nlohmann::json::parse(c.out)["status"] == "pass");
  std::filesystem::remove(cfg);
}

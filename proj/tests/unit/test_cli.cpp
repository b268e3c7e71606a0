// Drives the dunkl executable (path in DUNKL_CLI) through the shell.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "dunkl/grid.hpp"
#include "dunkl/maximal.hpp"
#include "dunkl/norms.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + std::string(DUNKL_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path tmp(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "dunkl_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

const std::string kSmall = "--grid-n 512 --domain-l 8";

}  // namespace

TEST_CASE("usage errors exit 2") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  const auto r = run("verify --suite nosuch");
  CHECK(r.code == 2);
  CHECK(r.out.find("measure_lemmas") != std::string::npos);
  CHECK(r.out.find("theorem_weakmaxi") != std::string::npos);
  CHECK(run("maximal --op dunkl").code == 2);  // missing --input
  CHECK(run("verify --grid-n 100").code == 2);
}

TEST_CASE("help lists defaults and environment overrides") {
  const auto r = run("verify --help");
  CHECK(r.code == 0);
  CHECK(r.out.find("DUNKL_SEED") != std::string::npos);
  CHECK(r.out.find("4096") != std::string::npos);
  CHECK(run("norm --help").out.find("0.5") != std::string::npos);
}

TEST_CASE("verify measure_lemmas succeeds and writes a report") {
  const auto report = tmp("measure.json");
  const auto r = run("verify --suite measure_lemmas --report " + report.string());
  CHECK(r.code == 0);
  std::ifstream in(report);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["summary"]["failures"] == 0);
  CHECK(j["suite"] == "measure_lemmas");
}

TEST_CASE("verify reports I/O failure with exit 3") {
  CHECK(run("verify --suite kernel --report /nonexistent/dir/r.json").code == 3);
}

TEST_CASE("environment overrides, flag wins") {
  const auto report = tmp("env.json");
  CHECK(run("verify --suite kernel --report " + report.string(), "DUNKL_SEED=11").code == 0);
  std::ifstream a(report);
  CHECK(nlohmann::json::parse(a)["config"]["seed"] == 11);
  CHECK(run("verify --suite kernel --seed 12 --report " + report.string(), "DUNKL_SEED=11").code == 0);
  std::ifstream b(report);
  CHECK(nlohmann::json::parse(b)["config"]["seed"] == 12);
}

TEST_CASE("norm command") {
  const auto ones = tmp("ones.csv");
  write(ones, "x,value\n-16,1\n16,1\n");
  const auto r = run("norm --which amalgam --q 2 --p inf --r 1 --kappa 0 --input " + ones.string() + " " + kSmall);
  CHECK(r.code == 0);
  CHECK(r.out.find("grid: kappa=0 L=8 N=512") != std::string::npos);
  const auto pos = r.out.find("amalgam: ");
  REQUIRE(pos != std::string::npos);
  CHECK(std::stod(r.out.substr(pos + 9)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-2));

  const auto fr = run("norm --which fofana --q 2 --p 8 --alpha 4 --input " + ones.string() + " " + kSmall);
  CHECK(fr.code == 0);
  CHECK(fr.out.find("radii:") != std::string::npos);

  CHECK(run("norm --which fofana --q 4 --alpha 2 --p 8 --input " + ones.string()).code == 2);
  CHECK(run("norm --which amalgam --q 2 --input " + ones.string()).code == 2);  // missing --p
  const auto empty = tmp("empty.csv");
  write(empty, "");
  CHECK(run("norm --which lp --p 2 --input " + empty.string()).code == 3);
  const auto bad = tmp("bad.csv");
  write(bad, "0,1\n1,zz\n");
  const auto b = run("norm --which lp --p 2 --input " + bad.string());
  CHECK(b.code == 3);
  CHECK(b.out.find("line 2") != std::string::npos);
  CHECK(run("norm --which lp --p 2 --input /nonexistent.csv").code == 3);
}

TEST_CASE("sample and maximal round trip") {
  const auto f = tmp("chi.csv"), m = tmp("chi_max.csv"), m2 = tmp("chi_max2.csv");
  CHECK(run("sample --family 'indicator_ball(1)' --output " + f.string() + " " + kSmall).code == 0);
  CHECK(run("maximal --op centered --input " + f.string() + " --output " + m.string() + " " + kSmall).code == 0);
  std::ifstream in(m);
  std::string line;
  std::vector<std::pair<double, double>> rows;
  while (std::getline(in, line)) {
    const auto c = line.find(',');
    if (c == std::string::npos || line[0] == 'x' || line[0] == '#') continue;
    rows.emplace_back(std::stod(line.substr(0, c)), std::stod(line.substr(c + 1)));
  }
  REQUIRE(rows.size() == 512);
  CHECK(rows[256].second == doctest::Approx(1.0).epsilon(1e-2));
  // re-ingesting the output reproduces the in-process values
  const auto g = dunkl::make_grid(dunkl::DunklParams(0.5), 8.0, 512);
  std::ifstream fin(f), min(m);
  const auto direct = dunkl::centered_maximal(dunkl::read_csv(fin, g), dunkl::default_r_grid(*g));
  const auto back = dunkl::read_csv(min, g);
  CHECK((direct - back).sup_norm() <= 1e-12);
  CHECK(run("norm --which lp --p inf --input " + m.string() + " " + kSmall).code == 0);
  CHECK(run("maximal --op dunkl --input " + f.string() + " --output " + m2.string() + " " + kSmall).code == 0);
  CHECK(run("maximal --op bogus --input " + f.string()).code == 2);
}

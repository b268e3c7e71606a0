// Acceptance run: two `verify --suite all --seed 7` reports, one PASS/FAIL
// line per criterion.
//
// usage: acceptance <dunkl executable> <work dir> [reference constants json]

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

// Everything before the trailing "timing" member.
std::string payload_text(const std::string& report) {
  const auto pos = report.rfind(",\n  \"timing\"");
  return pos == std::string::npos ? report : report.substr(0, pos);
}

int run_verify(const std::string& cli, const fs::path& report) {
  const std::string cmd = cli + " verify --suite all --seed 7 --report " + report.string() + " > " +
                          (report.string() + ".log") + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct Verdict {
  bool pass;
  std::string detail;
};

// All cases of the given statements pass (and at least one exists).
Verdict statements_pass(const json& report, const std::set<std::string>& ids,
                        const std::function<bool(const json&)>& filter = nullptr) {
  int n = 0, failed = 0;
  std::string first;
  for (const auto& c : report["cases"]) {
    if (!ids.count(c["statement"].get<std::string>())) continue;
    if (filter && !filter(c)) continue;
    ++n;
    if (!c["pass"].get<bool>()) {
      if (!failed) first = c["statement"].get<std::string>() + " " + c["inputs"].dump();
      ++failed;
    }
  }
  std::ostringstream d;
  d << n << " cases, " << failed << " failed";
  if (failed) d << " (first: " << first << ")";
  return {n > 0 && failed == 0, d.str()};
}

bool triple_in(const json& c, const std::set<std::string>& triples, const char* key) {
  return c["inputs"].contains(key) && triples.count(c["inputs"][key].get<std::string>());
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <dunkl> <work dir> [reference constants]\n";
    return 2;
  }
  const std::string cli = argv[1];
  const fs::path work = argv[2];
  const fs::path reference = argc > 3 ? fs::path(argv[3]) : fs::path();
  fs::create_directories(work);

  const auto r1 = work / "report_1.json", r2 = work / "report_2.json";
  const int code1 = run_verify(cli, r1);
  const int code2 = run_verify(cli, r2);
  if (code1 > 1 || code2 > 1 || !fs::exists(r1) || !fs::exists(r2)) {
    std::cerr << "verify did not produce reports (exit " << code1 << ", " << code2 << ")\n";
    return 2;
  }
  const std::string t1 = slurp(r1), t2 = slurp(r2);
  const json report = json::parse(t1);

  std::vector<std::pair<std::string, Verdict>> out;

  out.emplace_back("kernel bound and classical exponential",
                   statements_pass(report, {"kernel_modulus_bound", "classical_kernel_exponential"}));
  out.emplace_back("measure lemmas and closed forms",
                   statements_pass(report, {"ball_interval_comparison", "origin_interval_comparison",
                                            "measure_closed_forms"}));
  out.emplace_back("Plancherel defect and refinement", statements_pass(report, {"plancherel_isometry"}));
  out.emplace_back("translation identity, symmetry, contraction, mass",
                   statements_pass(report, {"translation_identity", "translation_symmetry",
                                            "translation_contraction", "translation_mass"}));
  out.emplace_back("Young inequality", statements_pass(report, {"young_inequality"}));
  out.emplace_back("amalgam Holder, norm axioms, L^inf identity",
                   statements_pass(report, {"holder_inequality", "norm_homogeneity", "norm_triangle",
                                            "norm_definiteness", "linfty_identity"}));
  out.emplace_back("embeddings and interval/translation comparison",
                   statements_pass(report, {"lq_embedding", "amalgam_q_monotonicity", "lebesgue_embedding",
                                            "interval_vs_translation_fofana"}));
  out.emplace_back("maximal equivalence window and classical oracle",
                   statements_pass(report, {"maximal_equivalence", "classical_maximal"}));

  // theorem constants: finite, stable, persisted, and matching the reference
  const std::set<std::string> strong = {"2,8,4", "1.5,6,2", "2,inf,4"};
  const std::set<std::string> weak = {"1,8,4", "1,inf,2"};
  json constants = json::array();
  for (const auto& k : report["constants"]) {
    const auto st = k["statement"].get<std::string>();
    if (st == "maximal_fofana_bound" || st == "maximal_weak_fofana_bound") constants.push_back(k);
  }
  {
    std::ofstream(work / "theorem_constants.json") << constants.dump(2) << "\n";
  }
  auto regression = [&](const std::string& statement, const std::set<std::string>& labels) -> Verdict {
    if (reference.empty() || !fs::exists(reference)) return {true, "no reference"};
    const json ref = json::parse(slurp(reference));
    int matched = 0;
    for (const auto& k : constants) {
      if (k["statement"] != statement || !labels.count(k["label"].get<std::string>())) continue;
      for (const auto& r : ref) {
        if (r["statement"] != k["statement"] || r["label"] != k["label"] || r["kappa"] != k["kappa"]) continue;
        const double a = k["fine"].get<double>(), b = r["fine"].get<double>();
        if (std::abs(a - b) > 1e-6 * std::abs(b))
          return {false, "constant moved: " + statement + " " + k["label"].get<std::string>() + " kappa=" +
                             k["kappa"].dump() + " " + std::to_string(a) + " vs " + std::to_string(b)};
        ++matched;
      }
    }
    return {matched > 0, std::to_string(matched) + " constants match the reference"};
  };
  auto theorem = [&](const std::string& statement, const std::set<std::string>& keys, const char* key,
                     const std::set<std::string>& labels) {
    auto v = statements_pass(report, {statement}, [&](const json& c) { return triple_in(c, keys, key); });
    const auto reg = regression(statement, labels);
    return Verdict{v.pass && reg.pass, v.detail + "; " + reg.detail};
  };
  out.emplace_back("theorem maxi constants", theorem("maximal_fofana_bound", strong, "q,p,alpha", strong));
  out.emplace_back("theorem weakmaxi constants",
                   theorem("maximal_weak_fofana_bound", {"8,4", "inf,2"}, "p,alpha", weak));

  const bool same = payload_text(t1) == payload_text(t2);
  out.emplace_back("determinism of the report payload",
                   Verdict{same, same ? "payloads byte-identical" : "payloads differ"});

  int failed = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto& [name, v] = out[i];
    std::printf("%s criterion %zu: %s (%s)\n", v.pass ? "PASS" : "FAIL", i + 1, name.c_str(), v.detail.c_str());
    failed += !v.pass;
  }
  return failed ? 1 : 0;
}

// dunkl: command-line front end for the library.
//
// Exit codes: 0 ok, 1 failed verification cases, 2 usage, 3 I/O.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dunkl/error.hpp"
#include "dunkl/grid.hpp"
#include "dunkl/maximal.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/verify.hpp"

namespace {

constexpr int kOk = 0, kFailures = 1, kUsage = 2, kIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GridOpts {
  double kappa = 0.5;
  double half_width = 16.0;
  int nodes = 4096;
  double r_min = 0.0, r_max = 0.0;
};

void add_grid_opts(CLI::App* cmd, GridOpts& g) {
  cmd->add_option("--kappa", g.kappa, "multiplicity parameter kappa >= -1/2")->envname("DUNKL_KAPPA")->capture_default_str();
  cmd->add_option("--domain-l", g.half_width, "domain half-width L")->envname("DUNKL_DOMAIN_L")->capture_default_str();
  cmd->add_option("--grid-n", g.nodes, "number of grid nodes N (even)")->envname("DUNKL_GRID_N")->capture_default_str();
  cmd->add_option("--r-min", g.r_min, "smallest radius (0: 8 dx)")->envname("DUNKL_R_MIN")->capture_default_str();
  cmd->add_option("--r-max", g.r_max, "largest radius (0: L/2)")->envname("DUNKL_R_MAX")->capture_default_str();
}

dunkl::GridPtr make_active_grid(const GridOpts& g) {
  return dunkl::make_grid(dunkl::DunklParams::for_kappa(g.kappa), g.half_width, g.nodes);
}

std::vector<double> radius_grid(const GridOpts& g, const dunkl::Grid& grid) {
  if (g.r_min <= 0.0 && g.r_max <= 0.0) return dunkl::default_r_grid(grid);
  const double lo = g.r_min > 0.0 ? g.r_min : 16.0 * grid.half_width() / grid.size();
  const double hi = g.r_max > 0.0 ? g.r_max : 0.5 * grid.half_width();
  auto r = dunkl::geometric_r_grid(lo, hi);
  if (r.empty()) throw dunkl::DomainError("radius grid is empty");
  return r;
}

dunkl::GridFunction load(const std::string& path, const dunkl::GridPtr& grid) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return dunkl::read_csv(in, grid);
}

void save(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw IoError("cannot write " + path);
}

std::string csv_text(const dunkl::GridFunction& f) {
  std::ostringstream os;
  dunkl::write_csv(os, f);
  return os.str();
}

std::string g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void echo_grid(std::ostream& os, const GridOpts& g, const std::vector<double>* radii) {
  os << "grid: kappa=" << g12(g.kappa) << " L=" << g12(g.half_width) << " N=" << g.nodes << "\n";
  if (!radii) return;
  os << "radii:";
  for (double r : *radii) os << ' ' << g12(r);
  os << "\n";
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;  // commas inside "bump(1,2)" do not split
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

dunkl::Exponent need(const std::optional<std::string>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return dunkl::Exponent::parse(*v);
}

// --- verify -------------------------------------------------------------------

struct VerifyOpts {
  std::string suite = "all";
  std::string kappas;
  double half_width = 16.0;
  int nodes = 4096;
  double r_min = 0.0, r_max = 0.0;
  std::string exponents;
  std::string family;
  std::string report;
  std::uint64_t seed = 7;
  bool no_refine = false;
};

int run_verify(const VerifyOpts& o) {
  const auto& names = dunkl::suite_names();
  if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
    std::string list;
    for (const auto& n : names) list += "\n  " + n;
    throw UsageError("unknown suite '" + o.suite + "'; valid suites:" + list);
  }
  dunkl::SuiteConfig cfg;
  if (!o.kappas.empty()) {
    cfg.kappas.clear();
    for (const auto& k : split(o.kappas, ',')) cfg.kappas.push_back(std::stod(k));
  }
  cfg.half_width = o.half_width;
  cfg.nodes = o.nodes;
  cfg.r_min = o.r_min;
  cfg.r_max = o.r_max;
  if (!o.exponents.empty()) {
    cfg.exponents.clear();
    for (const auto& t : split(o.exponents, ';')) cfg.exponents.push_back(dunkl::ExponentTriple::parse(t));
  }
  if (!o.family.empty()) {
    cfg.family.clear();
    for (const auto& m : split(o.family, ';')) cfg.family.push_back(dunkl::FamilyMember::parse(m));
  }
  cfg.seed = o.seed;
  cfg.refine = !o.no_refine;

  const auto report = dunkl::run_suite(o.suite, cfg);
  if (!o.report.empty()) save(o.report, report.to_json());

  std::map<std::string, std::pair<int, int>> per_suite;
  std::vector<std::string> order;
  for (const auto& c : report.cases) {
    if (!per_suite.count(c.suite)) order.push_back(c.suite);
    auto& [total, failed] = per_suite[c.suite];
    ++total;
    if (!c.pass) ++failed;
  }
  for (const auto& s : order) {
    const auto [total, failed] = per_suite[s];
    std::printf("%-26s %4d cases  %s\n", s.c_str(), total, failed ? (std::to_string(failed) + " FAILED").c_str() : "ok");
  }
  for (const auto& c : report.cases) {
    if (c.pass) continue;
    std::printf("FAIL %s/%s: %s  lhs=%.6g bound=%.6g\n", c.suite.c_str(), c.statement.c_str(), c.description.c_str(),
                c.lhs, c.bound);
  }
  for (const auto& k : report.constants)
    std::printf("constant %s kappa=%g %s: %.6g (coarse %.6g)\n", k.statement.c_str(), k.kappa, k.label.c_str(), k.fine,
                k.coarse);
  std::printf("%zu cases, %d failures, max ratio %.6g, %.1f s\n", report.cases.size(), report.failures(),
              report.max_ratio(), report.seconds);
  return report.failures() ? kFailures : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical harmonic analysis for the rank-one Dunkl operator"};
  app.require_subcommand(1);
  app.footer("Every option can also be set through the environment variable shown next to it;\n"
             "precedence is flag > environment > default.\n"
             "Exit codes: 0 ok, 1 failed cases, 2 usage, 3 I/O.");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run verification suites and write a JSON report");
  verify->add_option("--suite", vo.suite, "suite id or 'all'")->envname("DUNKL_SUITE")->capture_default_str();
  verify->add_option("--kappa", vo.kappas, "comma-separated kappa list (default -0.5,0,0.5,1.5)")->envname("DUNKL_KAPPAS");
  verify->add_option("--domain-l", vo.half_width, "domain half-width L")->envname("DUNKL_DOMAIN_L")->capture_default_str();
  verify->add_option("--grid-n", vo.nodes, "grid nodes N")->envname("DUNKL_GRID_N")->capture_default_str();
  verify->add_option("--r-min", vo.r_min, "smallest radius (0: 8 dx of the N/2 grid)")->envname("DUNKL_R_MIN");
  verify->add_option("--r-max", vo.r_max, "largest radius (0: L/2)")->envname("DUNKL_R_MAX");
  verify->add_option("--exponents", vo.exponents, "Fofana triples 'q,p,a;q,p,a' (default 2,8,4;1.5,6,2;2,inf,4;1,8,4;1,inf,2)")
      ->envname("DUNKL_EXPONENTS");
  verify->add_option("--family", vo.family, "test family 'gaussian(0.5);bump(1,2);...' (default: built-in)")
      ->envname("DUNKL_FAMILY");
  verify->add_option("--report", vo.report, "JSON report path ('-' for stdout)")->envname("DUNKL_REPORT");
  verify->add_option("--seed", vo.seed, "random seed")->envname("DUNKL_SEED")->capture_default_str();
  verify->add_flag("--no-refine", vo.no_refine, "skip the N/2 refinement level")->envname("DUNKL_NO_REFINE");

  GridOpts ng;
  std::string which, input;
  std::optional<std::string> q, p, alpha;
  double radius = 1.0;
  auto* norm = app.add_subcommand("norm", "evaluate one norm of a CSV function");
  add_grid_opts(norm, ng);
  norm->add_option("--which", which, "lp | weak | amalgam | fofana | weak-fofana | interval-fofana")
      ->required()
      ->check(CLI::IsMember({"lp", "weak", "amalgam", "fofana", "weak-fofana", "interval-fofana"}));
  norm->add_option("--q", q, "local exponent q (inf allowed)");
  norm->add_option("--p", p, "global exponent p (inf allowed)");
  norm->add_option("--alpha", alpha, "Fofana exponent alpha");
  norm->add_option("--r", radius, "amalgam radius r")->envname("DUNKL_R")->capture_default_str();
  norm->add_option("--input", input, "CSV file x,value or x,re,im")->required();

  GridOpts mg;
  std::string op, min_path, mout;
  auto* maximal = app.add_subcommand("maximal", "maximal function of a CSV function");
  add_grid_opts(maximal, mg);
  maximal->add_option("--op", op, "dunkl | centered | interval")
      ->required()
      ->check(CLI::IsMember({"dunkl", "centered", "interval"}));
  maximal->add_option("--input", min_path, "input CSV")->required();
  maximal->add_option("--output", mout, "output CSV ('-' for stdout)")->capture_default_str();

  GridOpts sg;
  std::string member, sout;
  auto* sample = app.add_subcommand("sample", "sample a test-family member onto the grid as CSV");
  add_grid_opts(sample, sg);
  sample->add_option("--family", member, "e.g. gaussian(0.5), indicator_ball(1), bump(1,2)")->required();
  sample->add_option("--output", sout, "output CSV ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << "run with --help for usage\n";
    return kUsage;
  }

  try {
    if (*verify) return run_verify(vo);

    if (*norm) {
      const auto grid = make_active_grid(ng);
      const auto f = load(input, grid);
      double value = 0.0;
      std::optional<std::vector<double>> radii;
      if (which == "lp") {
        value = dunkl::lp_norm(f, need(p, "--p"));
      } else if (which == "weak") {
        value = dunkl::weak_l1_norm(f);
      } else if (which == "amalgam") {
        value = dunkl::amalgam_norm_r(f, need(q, "--q"), need(p, "--p"), radius);
      } else {
        radii = radius_grid(ng, *grid);
        if (which == "weak-fofana") {
          value = dunkl::weak_fofana_norm(f, need(p, "--p"), need(alpha, "--alpha"), *radii);
        } else {
          dunkl::NormSpec spec{need(q, "--q"), need(p, "--p"), need(alpha, "--alpha"), *radii};
          spec.validate();
          value = which == "fofana" ? dunkl::fofana_norm(f, spec) : dunkl::interval_fofana_norm(f, spec);
        }
      }
      echo_grid(std::cout, ng, radii ? &*radii : nullptr);
      std::cout << which << ": " << g12(value) << "\n";
      return kOk;
    }

    if (*maximal) {
      const auto grid = make_active_grid(mg);
      const auto f = load(min_path, grid);
      const auto radii = radius_grid(mg, *grid);
      const auto m = op == "dunkl"      ? dunkl::dunkl_maximal(f, radii)
                     : op == "centered" ? dunkl::centered_maximal(f, radii)
                                        : dunkl::interval_maximal(f, radii);
      save(mout, csv_text(m));
      if (!mout.empty() && mout != "-") echo_grid(std::cout, mg, &radii);
      return kOk;
    }

    if (*sample) {
      const auto grid = make_active_grid(sg);
      save(sout, csv_text(dunkl::sample_family(dunkl::FamilyMember::parse(member), grid)));
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const dunkl::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {  // stod and friends
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const dunkl::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kIo;
  }
  return kUsage;
}

#include "dunkl/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "dunkl/error.hpp"
#include "dunkl/maximal.hpp"
#include "verify_internal.hpp"

namespace dunkl {

// --- config ----------------------------------------------------------------

ExponentTriple ExponentTriple::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) parts.push_back(item);
  if (parts.size() != 3) throw DomainError("exponent triple must be q,p,alpha: " + text);
  ExponentTriple t{Exponent::parse(parts[0]), Exponent::parse(parts[1]), Exponent::parse(parts[2])};
  t.validate();
  return t;
}

std::string ExponentTriple::str() const { return q.str() + "," + p.str() + "," + alpha.str(); }

void ExponentTriple::validate() const {
  if (!(q <= alpha) || !(alpha <= p))
    throw DomainError("exponent triple " + str() + " violates 1 <= q <= alpha <= p");
}

std::vector<ExponentTriple> SuiteConfig::default_exponents() {
  return {ExponentTriple::parse("2,8,4"), ExponentTriple::parse("1.5,6,2"), ExponentTriple::parse("2,inf,4"),
          ExponentTriple::parse("1,8,4"), ExponentTriple::parse("1,inf,2")};
}

void SuiteConfig::validate() const {
  if (kappas.empty()) throw DomainError("kappa list is empty");
  for (double k : kappas)
    if (!std::isfinite(k) || k < -0.5) throw DomainError("kappa must be >= -1/2");
  if (!std::isfinite(half_width) || !(half_width > 0.0)) throw DomainError("domain half-width must be > 0");
  const int min_nodes = refine ? 128 : 64;
  if (nodes < min_nodes || nodes % (refine ? 4 : 2) != 0)
    throw DomainError("grid node count must be a multiple of 4 and >= 128 (>= 64 and even without refinement)");
  for (const auto& t : exponents) t.validate();
  if (family.empty()) throw DomainError("test family is empty");
  if (r_min < 0.0 || r_max < 0.0 || !std::isfinite(r_min) || !std::isfinite(r_max))
    throw DomainError("radius bounds must be finite and >= 0");
  const auto r = radii();
  if (r.empty()) throw DomainError("radius grid is empty");
  if (r.back() > 0.5 * half_width * (1.0 + 1e-12)) throw DomainError("radii must not exceed L/2");
  for (double s : {tolerances.inequality, tolerances.comparison, tolerances.stability, tolerances.triangle,
                   tolerances.homogeneity, tolerances.linfty_identity, tolerances.exact, tolerances.classical_maximal})
    if (!std::isfinite(s) || s < 0.0) throw DomainError("tolerances must be finite and >= 0");
}

std::vector<double> SuiteConfig::radii() const {
  const int coarsest = refine ? nodes / 2 : nodes;
  const double lo = r_min > 0.0 ? r_min : 8.0 * 2.0 * half_width / coarsest;
  const double hi = r_max > 0.0 ? r_max : 0.5 * half_width;
  if (!(lo > 0.0) || hi < lo) return {};
  return geometric_r_grid(lo, hi);
}

// --- report helpers ----------------------------------------------------------

int VerificationReport::failures() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return !c.pass; }));
}

double VerificationReport::max_ratio() const {
  double best = 0.0;
  for (const auto& c : cases)
    if (c.kind == "inequality" && std::isfinite(c.ratio)) best = std::max(best, c.ratio);
  return best;
}

std::vector<std::string> VerificationReport::statements() const {
  std::set<std::string> ids;
  for (const auto& c : cases) ids.insert(c.statement);
  return {ids.begin(), ids.end()};
}

namespace detail {

// --- levels --------------------------------------------------------------------

const std::vector<GridFunction>& Level::dunkl_max() {
  if (!dunkl_max_) {
    dunkl_max_.emplace();
    for (const auto& f : family) dunkl_max_->push_back(dunkl_maximal(f, radii));
  }
  return *dunkl_max_;
}

const std::vector<GridFunction>& Level::centered_max() {
  if (!centered_max_) {
    centered_max_.emplace();
    for (const auto& f : family) centered_max_->push_back(centered_maximal(f, radii));
  }
  return *centered_max_;
}

const std::vector<GridFunction>& Level::interval_max() {
  if (!interval_max_) {
    interval_max_.emplace();
    for (const auto& f : family) interval_max_->push_back(interval_maximal(f, radii));
  }
  return *interval_max_;
}

std::vector<double> Level::weak_radii() const {
  std::vector<double> out;
  for (std::size_t i = 0; i < radii.size(); i += 2) out.push_back(radii[i]);
  return out;
}

void Level::compute_weak() {
  std::vector<GridFunction> all(family.begin(), family.end());
  const auto& m = dunkl_max();
  all.insert(all.end(), m.begin(), m.end());
  weak_f_.emplace();
  weak_m_.emplace();
  for (double r : weak_radii()) {
    auto windows = weak_windows(all, r);
    weak_f_->emplace_back(windows.begin(), windows.begin() + static_cast<std::ptrdiff_t>(family.size()));
    weak_m_->emplace_back(windows.begin() + static_cast<std::ptrdiff_t>(family.size()), windows.end());
  }
}

const std::vector<std::vector<std::vector<double>>>& Level::weak_windows_family() {
  if (!weak_f_) compute_weak();
  return *weak_f_;
}

const std::vector<std::vector<std::vector<double>>>& Level::weak_windows_maximal() {
  if (!weak_m_) compute_weak();
  return *weak_m_;
}

const std::vector<double>& Level::fofana_family(const ExponentTriple& t) {
  auto& slot = fofana_[t.str()];
  if (slot.empty())
    for (const auto& f : family) slot.push_back(fofana_norm(f, spec(t)));
  return slot;
}

Level& Context::level(double kappa, bool coarse) {
  const int n = coarse ? config_.nodes / 2 : config_.nodes;
  auto& slot = levels_[{kappa, n}];
  if (!slot) {
    const DunklParams params = DunklParams::for_kappa(kappa);
    const GridPtr grid = make_grid(params, config_.half_width, n);
    std::vector<GridFunction> family;
    for (const auto& m : config_.family) family.push_back(sample_family(m, grid));
    slot = std::make_unique<Level>(params, grid, std::move(family), radii_);
  }
  return *slot;
}

std::mt19937_64 Context::rng(const std::string& suite) const {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : suite) h = (h ^ c) * 1099511628211ULL;
  return std::mt19937_64(config_.seed ^ h);
}

double uniform(std::mt19937_64& rng, double a, double b) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return a + (b - a) * u;
}

// --- cases ------------------------------------------------------------------

void CaseSink::push(CaseRecord record) {
  record.suite = suite_;
  record.pass = std::isfinite(record.lhs) && record.lhs <= record.bound * (1.0 + record.slack);
  report_.cases.push_back(std::move(record));
}

namespace {

double safe_ratio(double lhs, double rhs) {
  if (rhs != 0.0) return lhs / rhs;
  return lhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

}  // namespace

void CaseSink::inequality(const std::string& statement, const std::string& description, Inputs inputs, double lhs,
                          double rhs, double constant, double slack) {
  push({{}, statement, description, std::move(inputs), "inequality", lhs, rhs, constant * rhs, safe_ratio(lhs, rhs),
        slack, false});
}

void CaseSink::tolerance(const std::string& statement, const std::string& description, Inputs inputs, double error,
                         double scale, double tolerance) {
  push({{}, statement, description, std::move(inputs), "tolerance", error, scale, tolerance * scale,
        safe_ratio(error, scale), 0.0, false});
}

void CaseSink::measured(const std::string& statement, const std::string& description, Inputs inputs, double value) {
  CaseRecord r{{}, statement, description, std::move(inputs), "measured", value, 0.0,
               std::numeric_limits<double>::infinity(), value, 0.0, false};
  r.suite = suite_;
  r.pass = std::isfinite(value) && value > 0.0;
  report_.cases.push_back(std::move(r));
}

void CaseSink::stability(const std::string& statement, const std::string& description, Inputs inputs, double kappa,
                         const std::string& label, double fine, std::optional<double> coarse, double limit) {
  report_.constants.push_back(
      {statement, kappa, label, fine, coarse ? *coarse : std::numeric_limits<double>::quiet_NaN()});
  measured(statement, description, inputs, fine);
  if (!coarse) return;
  inputs.emplace_back("coarse", *coarse);
  inputs.emplace_back("fine", fine);
  push({{}, statement, description + " (refinement change)", std::move(inputs), "stability", std::abs(fine - *coarse),
        std::abs(fine), limit * std::abs(fine), safe_ratio(std::abs(fine - *coarse), std::abs(fine)), 0.0, false});
}

std::string fmt(double value) {
  std::ostringstream os;
  os.precision(6);
  os << value;
  return os.str();
}

std::string kappa_label(double kappa) { return "kappa=" + fmt(kappa); }

namespace {

struct SuiteEntry {
  const char* name;
  void (*fn)(Context&, CaseSink&);
};

constexpr SuiteEntry kSuites[] = {
    {"kernel", suite_kernel},
    {"measure_lemmas", suite_measure_lemmas},
    {"transform", suite_transform},
    {"translation", suite_translation},
    {"young", suite_young},
    {"holder", suite_holder},
    {"norm_axioms", suite_norm_axioms},
    {"linfty_identity", suite_linfty_identity},
    {"embeddings", suite_embeddings},
    {"fofana_lebesgue", suite_fofana_lebesgue},
    {"maximal_equivalence", suite_maximal_equivalence},
    {"interval_fofana_maximal", suite_interval_fofana_maximal},
    {"theorem_maxi", suite_theorem_maxi},
    {"theorem_weakmaxi", suite_theorem_weakmaxi},
};

}  // namespace

}  // namespace detail

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : detail::kSuites) out.emplace_back(s.name);
    out.emplace_back("all");
    return out;
  }();
  return names;
}

VerificationReport run_suite(const std::string& name, const SuiteConfig& config) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end()) {
    std::string list;
    for (const auto& n : names) list += (list.empty() ? "" : ", ") + n;
    throw DomainError("unknown suite '" + name + "' (valid: " + list + ")");
  }
  config.validate();

  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.suite = name;
  report.config = config;
  detail::Context context(config);
  for (const auto& s : detail::kSuites) {
    if (name != "all" && name != s.name) continue;
    detail::CaseSink sink(s.name, report);
    s.fn(context, sink);
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace dunkl

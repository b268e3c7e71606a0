#pragma once

#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "dunkl/verify.hpp"

namespace dunkl::detail {

using Inputs = std::vector<std::pair<std::string, InputValue>>;

/// Everything computed for one (kappa, N): the grid, the sampled family and
/// lazily evaluated maximal functions of each member.
struct Level {
  Level(DunklParams p, GridPtr g, std::vector<GridFunction> f, std::vector<double> r)
      : params(p), grid(std::move(g)), family(std::move(f)), radii(std::move(r)) {}

  DunklParams params;
  GridPtr grid;
  std::vector<GridFunction> family;
  std::vector<double> radii;

  const std::vector<GridFunction>& dunkl_max();
  const std::vector<GridFunction>& centered_max();
  const std::vector<GridFunction>& interval_max();
  /// Weak windows of the family members (first) and of their Dunkl maximal
  /// functions (second), one entry per radius of weak_radii().
  const std::vector<std::vector<std::vector<double>>>& weak_windows_family();
  const std::vector<std::vector<std::vector<double>>>& weak_windows_maximal();
  /// Every other radius: the weak norms need one translated-indicator bank
  /// per radius, which dominates their cost.
  std::vector<double> weak_radii() const;
  /// ||f||_{q,p,alpha} of every family member over the level's radii.
  const std::vector<double>& fofana_family(const ExponentTriple& t);
  NormSpec spec(const ExponentTriple& t) const { return NormSpec{t.q, t.p, t.alpha, radii}; }

 private:
  void compute_weak();

  std::optional<std::vector<GridFunction>> dunkl_max_, centered_max_, interval_max_;
  std::optional<std::vector<std::vector<std::vector<double>>>> weak_f_, weak_m_;
  std::map<std::string, std::vector<double>> fofana_;
};

class Context {
 public:
  explicit Context(const SuiteConfig& config) : config_(config), radii_(config.radii()) {}

  const SuiteConfig& config() const noexcept { return config_; }
  /// Fine level (config.nodes) or coarse level (nodes / 2).
  Level& level(double kappa, bool coarse = false);
  /// Generator seeded from the config seed and the suite name, so suites do
  /// not depend on each other's consumption.
  std::mt19937_64 rng(const std::string& suite) const;

 private:
  SuiteConfig config_;
  std::vector<double> radii_;
  std::map<std::pair<double, int>, std::unique_ptr<Level>> levels_;
};

/// Uniform draw in [a, b) from 53 random bits.
double uniform(std::mt19937_64& rng, double a, double b);

class CaseSink {
 public:
  CaseSink(std::string suite, VerificationReport& report) : suite_(std::move(suite)), report_(report) {}

  /// lhs <= constant * rhs (1 + slack).
  void inequality(const std::string& statement, const std::string& description, Inputs inputs, double lhs,
                  double rhs, double constant, double slack);
  /// error <= tolerance * scale.
  void tolerance(const std::string& statement, const std::string& description, Inputs inputs, double error,
                 double scale, double tolerance);
  /// A measured quantity that only has to be finite and positive.
  void measured(const std::string& statement, const std::string& description, Inputs inputs, double value);
  /// Measured constant at the fine and coarse level; records the constant and
  /// a stability case (relative change <= limit) when coarse is available.
  void stability(const std::string& statement, const std::string& description, Inputs inputs, double kappa,
                 const std::string& label, double fine, std::optional<double> coarse, double limit);

 private:
  void push(CaseRecord record);

  std::string suite_;
  VerificationReport& report_;
};

std::string fmt(double value);
std::string kappa_label(double kappa);

using SuiteFn = std::function<void(Context&, CaseSink&)>;

void suite_kernel(Context&, CaseSink&);
void suite_measure_lemmas(Context&, CaseSink&);
void suite_transform(Context&, CaseSink&);
void suite_translation(Context&, CaseSink&);
void suite_young(Context&, CaseSink&);
void suite_holder(Context&, CaseSink&);
void suite_norm_axioms(Context&, CaseSink&);
void suite_linfty_identity(Context&, CaseSink&);
void suite_embeddings(Context&, CaseSink&);
void suite_fofana_lebesgue(Context&, CaseSink&);
void suite_maximal_equivalence(Context&, CaseSink&);
void suite_interval_fofana_maximal(Context&, CaseSink&);
void suite_theorem_maxi(Context&, CaseSink&);
void suite_theorem_weakmaxi(Context&, CaseSink&);

}  // namespace dunkl::detail

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dunkl/grid.hpp"
#include "dunkl/norms.hpp"

namespace dunkl {

/// (q, p, alpha) with 1 <= q <= alpha <= p <= inf.
struct ExponentTriple {
  Exponent q;
  Exponent p;
  Exponent alpha;

  /// "q,p,alpha", e.g. "2,inf,4".
  static ExponentTriple parse(const std::string& text);
  std::string str() const;
  void validate() const;
};

/// Relative slacks and tolerances, one knob per kind of check.
struct Tolerances {
  double inequality = 1e-2;        // constants stated in closed form (Young, Holder, embeddings, contraction)
  double comparison = 2e-2;        // interval-based vs translation-based Fofana norms
  double stability = 0.10;         // relative change of a measured constant under N -> N/2
  double triangle = 1e-8;          // triangle inequality of the amalgam norms
  double homogeneity = 1e-10;
  double linfty_identity = 1e-6;
  double exact = 1e-12;            // closed-form measure identities
  double classical_maximal = 2e-2; // Dunkl maximal at kappa = -1/2 vs sliding windows
};

struct SuiteConfig {
  std::vector<double> kappas{-0.5, 0.0, 0.5, 1.5};
  double half_width = 16.0;
  int nodes = 4096;
  /// Radius grid for norms and maximal operators: geometric, ratio sqrt 2.
  /// 0 selects the defaults (8 dx of the coarsest grid in use, L/2).
  double r_min = 0.0;
  double r_max = 0.0;
  std::vector<ExponentTriple> exponents = default_exponents();
  std::vector<FamilyMember> family = default_family();
  Tolerances tolerances;
  std::uint64_t seed = 7;
  /// Measured constants are recomputed with N/2 nodes and compared.
  bool refine = true;

  static std::vector<ExponentTriple> default_exponents();
  /// Throws DomainError describing the first problem found.
  void validate() const;
  /// The radius grid shared by every level.
  std::vector<double> radii() const;
};

using InputValue = std::variant<double, std::string>;

/// One executed check. pass <=> lhs finite and lhs <= bound (1 + slack).
struct CaseRecord {
  std::string suite;
  std::string statement;
  std::string description;
  std::vector<std::pair<std::string, InputValue>> inputs;
  std::string kind;  // inequality | tolerance | measured | stability
  double lhs = 0.0;
  double rhs = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  double slack = 0.0;
  bool pass = false;
};

/// Extremal ratio of an unquantified constant at the fine and coarse grids.
struct MeasuredConstant {
  std::string statement;
  double kappa = 0.0;
  std::string label;
  double fine = 0.0;
  double coarse = 0.0;  // NaN when refinement is off
};

struct VerificationReport {
  std::string suite;
  SuiteConfig config;
  std::vector<CaseRecord> cases;
  std::vector<MeasuredConstant> constants;
  double seconds = 0.0;

  int failures() const;
  /// Largest ratio over inequality cases.
  double max_ratio() const;
  /// Distinct statement ids, sorted.
  std::vector<std::string> statements() const;

  /// Deterministic JSON document {suite, config, cases, constants, summary}.
  std::string payload_json() const;
  /// payload_json() plus a trailing "timing" member.
  std::string to_json() const;
};

/// Suite ids in declaration order, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one suite (or all of them) and records every case; failed
/// inequalities never abort the run. Throws DomainError for an unknown suite
/// or an invalid config before computing anything.
VerificationReport run_suite(const std::string& name, const SuiteConfig& config);

}  // namespace dunkl

#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dunkl/grid.hpp"

namespace dunkl {

/// Lebesgue exponent in [1, inf]. Infinity is a distinguished value and
/// 1/inf = 0.
class Exponent {
 public:
  explicit Exponent(double value);
  static Exponent infinity() noexcept { return Exponent(); }
  /// Accepts decimals and "inf" / "infinity".
  static Exponent parse(std::string_view text);

  bool is_infinite() const noexcept { return infinite_; }
  /// Finite value; throws DomainError for infinity.
  double value() const;
  double reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }
  std::string str() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend bool operator<(const Exponent& a, const Exponent& b) noexcept {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Exponent& a, const Exponent& b) noexcept { return !(b < a); }

 private:
  Exponent() : value_(0.0), infinite_(true) {}
  double value_;
  bool infinite_;
};

/// r_min * 2^{k/2} for k = 0, 1, ... while <= r_max, with r_min = 8 dx and
/// r_max = L/2 unless overridden.
std::vector<double> default_r_grid(const Grid& grid);
std::vector<double> geometric_r_grid(double r_min, double r_max);

/// Exponent triple (q, p, alpha) and the radii over which sup_{r>0} is taken.
struct NormSpec {
  Exponent q;
  Exponent p;
  Exponent alpha;
  std::vector<double> r_grid;

  /// q <= alpha <= p, r_grid non-empty and strictly increasing.
  void validate() const;
};

/// (integral |f|^p d mu)^{1/p}; max |f_j| for p = inf.
double lp_norm(const GridFunction& f, Exponent p);
double lp_norm(std::span<const double> values, const Grid& grid, Exponent p);

/// sup_{t>0} t mu(|f| > t), evaluated exactly for a grid function: the sup over
/// t just below each attained level |f_j|.
double weak_l1_norm(const GridFunction& f);
double weak_l1_norm(std::span<const double> abs_values, std::span<const double> weights);

/// r-scaled amalgam norm _r||f||_{q,p}. For q < inf the window functional is
/// u(y) = max(0, (|f|^q *_kappa chi_{B_r})(y))^{1/q}; for q = inf it is the
/// max of |f| over the Dunkl ball B(y, r). Requires r in (0, L/2].
double amalgam_norm_r(const GridFunction& f, Exponent q, Exponent p, double r);

/// Window functionals u_r(y) for all radii at once (one forward transform).
std::vector<std::vector<double>> amalgam_windows(const GridFunction& f, Exponent q, const std::vector<double>& radii);

/// Per-radius terms mu(B_r)^{1/alpha - 1/q - 1/p} _r||f||_{q,p}.
std::vector<double> fofana_profile(const GridFunction& f, const NormSpec& spec);

/// max over spec.r_grid of the Fofana profile.
double fofana_norm(const GridFunction& f, const NormSpec& spec);

/// w_r(y) = || f tau_{-y} chi_{B_r} ||_{L^{1,inf}} for every node y.
std::vector<double> weak_windows(const GridFunction& f, double r);

/// Same, for several functions sharing one bank of translated indicators
/// (the bank is the expensive part).
std::vector<std::vector<double>> weak_windows(const std::vector<GridFunction>& functions, double r);

/// sup_r mu(B_r)^{1/alpha - 1 - 1/p} || w_r ||_p. Requires 1 <= alpha <= p.
double weak_fofana_norm(const GridFunction& f, Exponent p, Exponent alpha, const std::vector<double>& r_grid);

/// Same value computed from precomputed weak windows (one vector per radius).
double weak_fofana_from_windows(const std::vector<std::vector<double>>& windows_per_r, const Grid& grid,
                                Exponent p, Exponent alpha, const std::vector<double>& r_grid);

/// Interval (homogeneous-type) variant: windows are metric intervals I(y, r),
/// integrals are exact over the piecewise-constant cell model of f.
/// Returns the radius-r term
///   [ integral (mu(I(y,r))^{1/alpha-1/q-1/p} ||f chi_{I(y,r)}||_q)^p d mu(y) ]^{1/p}
/// (sup over y when p = inf).
double interval_fofana_term(const GridFunction& f, Exponent q, Exponent p, Exponent alpha, double r);

/// ||f chi_{I(y,r)}||_q for every node y, then the L^p norm over y (no scaling).
double interval_amalgam_norm_r(const GridFunction& f, Exponent q, Exponent p, double r);

/// sup over spec.r_grid of interval_fofana_term.
double interval_fofana_norm(const GridFunction& f, const NormSpec& spec);

}  // namespace dunkl

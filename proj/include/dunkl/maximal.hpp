#pragma once

#include <span>
#include <vector>

#include "dunkl/grid.hpp"

namespace dunkl {

/// Exact integrals of a piecewise-constant (one value per grid cell) function
/// against mu over intervals and over sets {a < |y| < b}, via prefix sums and
/// closed-form partial-cell masses. Windows are clipped to [-L, L].
class CellIntegrals {
 public:
  CellIntegrals(const Grid& grid, std::span<const double> values);

  const Grid& grid() const noexcept { return *grid_; }

  /// integral over (a, b) cap [-L, L].
  double over_segment(double a, double b) const;
  /// integral over {a < |y| < b} cap [-L, L], 0 <= a <= b.
  double over_annulus(double a, double b) const;

 private:
  double signed_prefix(double t) const;  // integral over (-L, t)
  double radial_prefix(double s) const;  // integral over {|y| < s}

  const Grid* grid_;
  std::vector<double> values_;
  std::vector<double> prefix_;         // signed cells
  std::vector<double> radial_values_;  // v(+x_k) + v(-x_k)
  std::vector<double> radial_prefix_;
};

/// Mf(x) = sup_rho mu(B_rho)^{-1} integral_{B_rho} tau_x |f| d mu, evaluated as
/// mu(B_rho)^{-1} (|f| *_kappa chi_{B_rho})(x), clamped at 0, max over rho.
GridFunction dunkl_maximal(const GridFunction& f, const std::vector<double>& rho_grid);

/// Centred maximal function over Dunkl balls B(x, rho) (annuli in |y|).
GridFunction centered_maximal(const GridFunction& f, const std::vector<double>& rho_grid);

/// M_mu f over metric intervals I(x, rho).
GridFunction interval_maximal(const GridFunction& f, const std::vector<double>& rho_grid);

/// true for nodes where the largest window (|x| + max rho) leaves [-L, L].
std::vector<bool> clipped_nodes(const Grid& grid, const std::vector<double>& rho_grid);

}  // namespace dunkl

#pragma once

#include <vector>

#include "dunkl/transform.hpp"

namespace dunkl {

/// E(i lambda y) sampled on a lambda grid.
std::vector<Complex> translation_multiplier(const Grid& lambda_grid, double y);

/// F chi_{B_r}(lambda) = mu(B_r) j_{kappa+1}(lambda r), closed form, sampled on
/// the lambda grid.
std::vector<double> ball_indicator_spectrum(const Grid& lambda_grid, double r);

/// tau_y f = inverse(E(i lambda y) F f). For real f the imaginary part of the
/// result is checked against 1e-8 ||f||_inf (NumericalError otherwise) and dropped.
/// |y| > L is rejected.
GridFunction translate(const GridFunction& f, double y);

/// tau_y chi_{B_r} computed from the closed-form indicator spectrum, clamped to
/// [0, 1] and set to zero outside B(y, r).
GridFunction translate_indicator(const DunklParams& params, double y, double r, const GridPtr& grid);

/// Raw (unclamped, untruncated) spectral tau_y chi_{B_r}.
GridFunction translate_indicator_raw(double y, double r, const GridPtr& grid);

/// f *_kappa g through F(f * g) = F f . F g.
GridFunction convolve(const GridFunction& f, const GridFunction& g);

/// (g *_kappa chi_{B_r})(y) for every r in `radii`, sharing one forward
/// transform of g. g must be real; each result is real.
std::vector<std::vector<double>> convolve_with_balls(const GridFunction& g, const std::vector<double>& radii);

/// All translates y -> tau_y chi_{B_r} for one radius r, as a matrix over
/// grid nodes (y, x). Only the band |(|x| - |y|)| < r (the support) is
/// computed, by blocked matrix products over the kernel blocks, so a full bank
/// costs O(N^2 * min(N, r/dx)). Entries are clamped to [0, 1]; entries outside
/// B(y, r) are zero.
class IndicatorTranslates {
 public:
  IndicatorTranslates(const GridPtr& grid, double r);

  const Grid& grid() const noexcept { return *grid_; }
  double radius() const noexcept { return radius_; }

  /// tau_{x_y} chi_{B_r}(x_x) for grid indices (y, x), clamped and truncated.
  double value(int y, int x) const;
  /// Grid indices x with x_x in B(y_y, r), ascending.
  void support(int y, std::vector<int>& out) const;
  /// Full row y -> tau_{x_y} chi_{B_r} as a grid function.
  GridFunction row(int y) const;

 private:
  double raw(int y, int x) const;

  GridPtr grid_;
  double radius_;
  int band_ = 0;
  // (|y| index k, |x| index l) over positive halves: sym = A D A^T, anti = B D B^T.
  std::vector<double> sym_;
  std::vector<double> anti_;
};

}  // namespace dunkl

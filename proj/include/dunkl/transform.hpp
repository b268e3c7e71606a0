#pragma once

#include <memory>
#include <vector>

#include "dunkl/grid.hpp"

namespace dunkl {

/// Samples of a Dunkl transform on a (symmetric, cell-centred) lambda grid.
class SpectralFunction {
 public:
  explicit SpectralFunction(GridFunction samples) : samples_(std::move(samples)) {}
  SpectralFunction(GridPtr lambda_grid, std::vector<Complex> values)
      : samples_(std::move(lambda_grid), std::move(values)) {}

  const Grid& lambda_grid() const noexcept { return samples_.grid(); }
  const GridPtr& lambda_grid_ptr() const noexcept { return samples_.grid_ptr(); }
  const GridFunction& samples() const noexcept { return samples_; }
  std::span<const Complex> values() const noexcept { return samples_.values(); }
  Complex operator[](int j) const { return samples_[j]; }
  int size() const noexcept { return samples_.size(); }

  /// Pointwise multiplication by a multiplier sampled on the same lambda grid.
  SpectralFunction multiplied(std::span<const Complex> multiplier) const;
  SpectralFunction multiplied(std::span<const double> multiplier) const;

 private:
  GridFunction samples_;
};

/// Lambda grid paired with the spatial grid: same kappa and node count,
/// half-width pi N / (4 L), so the lambda spacing is pi / (2 L).
GridPtr default_lambda_grid(const Grid& x_grid);

/// Kernel blocks restricted to positive nodes and positive frequencies:
/// even(k, m) = j_kappa(lambda_m x_k), odd(k, m) = lambda_m x_k / (2k+2) j_{kappa+1}(lambda_m x_k).
/// E(-i lambda x) = even - i odd for lambda, x > 0; the other quadrants follow
/// from parity. Row-major, rows indexed by x, columns by lambda.
struct KernelBlocks {
  int rows = 0;
  int cols = 0;
  std::vector<double> even;
  std::vector<double> odd;

  // Origin corrections. Sums over the innermost `origin_nodes` samples pick
  // up extra weights that depend on the conjugate node: entry (k, v) is the
  // extra weight of sample k for positive conjugate node v. The forward pair
  // acts on x samples (v runs over lambda), the inverse pair on lambda samples
  // (v over x). Odd corrections act on the odd part divided by the node.
  // Empty when the grids are too small.
  int origin_nodes = 0;
  std::vector<double> forward_even_fix;
  std::vector<double> forward_odd_fix;
  std::vector<double> inverse_even_fix;
  std::vector<double> inverse_odd_fix;
};

/// Shared, immutable kernel blocks for a pair of grids. Results are memoized
/// (bounded LRU), so repeated transforms on the same grids reuse them.
std::shared_ptr<const KernelBlocks> kernel_blocks(const Grid& x_grid, const Grid& lambda_grid);

/// Drops every memoized kernel block.
void clear_kernel_cache();

/// F f(lambda_j) = sum_i w_i E(-i lambda_j x_i) f(x_i).
SpectralFunction forward(const GridFunction& f, const GridPtr& lambda_grid);
SpectralFunction forward(const GridFunction& f);

/// f(x_i) = sum_j w_j E(i lambda_j x_i) F(lambda_j), inversion constant 1.
GridFunction inverse(const SpectralFunction& spectrum, const GridPtr& x_grid);

/// Inverse transforms of several real, even spectra at once. Each entry of
/// `spectra` holds the values on the positive half of the lambda grid (which
/// determines an even spectrum); the results are the (real, even) spatial
/// functions on the positive half of x_grid. This is the hot path for
/// multiplier-and-invert sweeps over radii.
std::vector<std::vector<double>> inverse_even_real_batch(const std::vector<std::vector<double>>& spectra,
                                                         const Grid& lambda_grid, const Grid& x_grid);

/// Inverse transforms of real-valued spatial functions' spectra multiplied by
/// several real even multipliers: returns inverse(F * m_k) for each k,
/// real part only (the imaginary part vanishes for real f).
std::vector<std::vector<double>> inverse_with_even_multipliers(const SpectralFunction& spectrum,
                                                               const std::vector<std::vector<double>>& multipliers,
                                                               const GridPtr& x_grid);

/// | ||F f||_2 - ||f||_2 | / ||f||_2 with the lambda grid's weights.
double plancherel_defect(const GridFunction& f, const GridPtr& lambda_grid);
double plancherel_defect(const GridFunction& f);

}  // namespace dunkl

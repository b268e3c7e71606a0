#include "dunkl/maximal.hpp"

#include <algorithm>
#include <cmath>

#include "dunkl/error.hpp"
#include "dunkl/measure.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {

namespace {

void check_rho_grid(const Grid& grid, const std::vector<double>& rho_grid) {
  if (rho_grid.empty()) throw DomainError("radius grid is empty");
  for (double rho : rho_grid)
    if (!std::isfinite(rho) || !(rho > 0.0) || rho > 0.5 * grid.half_width())
      throw DomainError("maximal radii must lie in (0, L/2]");
}

}  // namespace

GridFunction dunkl_maximal(const GridFunction& f, const std::vector<double>& rho_grid) {
  const Grid& g = f.grid();
  check_rho_grid(g, rho_grid);
  const auto convolved = convolve_with_balls(GridFunction(f.grid_ptr(), f.abs()), rho_grid);
  std::vector<double> out(static_cast<std::size_t>(g.size()), 0.0);
  for (std::size_t i = 0; i < rho_grid.size(); ++i) {
    const double inv_mass = 1.0 / ball_measure_origin(g.params(), rho_grid[i]);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = std::max(out[j], convolved[i][j] * inv_mass);
  }
  return GridFunction(f.grid_ptr(), out);
}

GridFunction centered_maximal(const GridFunction& f, const std::vector<double>& rho_grid) {
  const Grid& g = f.grid();
  check_rho_grid(g, rho_grid);
  const CellIntegrals cells(g, f.abs());
  const double L = g.half_width();
  std::vector<double> out(static_cast<std::size_t>(g.size()), 0.0);
  for (int j = 0; j < g.size(); ++j) {
    const double ax = std::abs(g.node(j));
    double best = 0.0;
    for (double rho : rho_grid) {
      const double a = std::max(0.0, ax - rho);
      const double b = std::min(L, ax + rho);
      best = std::max(best, cells.over_annulus(a, b) / annulus_measure(g.params(), a, b));
    }
    out[static_cast<std::size_t>(j)] = best;
  }
  return GridFunction(f.grid_ptr(), out);
}

GridFunction interval_maximal(const GridFunction& f, const std::vector<double>& rho_grid) {
  const Grid& g = f.grid();
  check_rho_grid(g, rho_grid);
  const CellIntegrals cells(g, f.abs());
  const double L = g.half_width();
  std::vector<double> out(static_cast<std::size_t>(g.size()), 0.0);
  for (int j = 0; j < g.size(); ++j) {
    const double x = g.node(j);
    double best = 0.0;
    for (double rho : rho_grid) {
      const double a = std::max(-L, x - rho);
      const double b = std::min(L, x + rho);
      best = std::max(best, cells.over_segment(a, b) / segment_measure(g.params(), a, b));
    }
    out[static_cast<std::size_t>(j)] = best;
  }
  return GridFunction(f.grid_ptr(), out);
}

std::vector<bool> clipped_nodes(const Grid& grid, const std::vector<double>& rho_grid) {
  const double reach = rho_grid.empty() ? 0.0 : *std::max_element(rho_grid.begin(), rho_grid.end());
  std::vector<bool> out(static_cast<std::size_t>(grid.size()));
  for (int j = 0; j < grid.size(); ++j)
    out[static_cast<std::size_t>(j)] = std::abs(grid.node(j)) + reach > grid.half_width();
  return out;
}

}  // namespace dunkl

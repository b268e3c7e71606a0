#include <algorithm>
#include <cmath>

#include "dunkl/error.hpp"
#include "dunkl/maximal.hpp"
#include "dunkl/measure.hpp"

namespace dunkl {

CellIntegrals::CellIntegrals(const Grid& grid, std::span<const double> values)
    : grid_(&grid), values_(values.begin(), values.end()) {
  if (static_cast<int>(values.size()) != grid.size()) throw DomainError("cell values do not match grid size");
  const auto masses = grid.cell_masses();
  prefix_.assign(values_.size() + 1, 0.0);
  for (std::size_t j = 0; j < values_.size(); ++j) prefix_[j + 1] = prefix_[j] + values_[j] * masses[j];

  const int half = grid.half_size();
  radial_values_.resize(static_cast<std::size_t>(half));
  radial_prefix_.assign(static_cast<std::size_t>(half) + 1, 0.0);
  for (int k = 0; k < half; ++k) {
    radial_values_[static_cast<std::size_t>(k)] =
        values_[static_cast<std::size_t>(grid.positive(k))] + values_[static_cast<std::size_t>(grid.negative(k))];
    radial_prefix_[static_cast<std::size_t>(k) + 1] =
        radial_prefix_[static_cast<std::size_t>(k)] +
        radial_values_[static_cast<std::size_t>(k)] * masses[static_cast<std::size_t>(grid.positive(k))];
  }
}

double CellIntegrals::signed_prefix(double t) const {
  const Grid& g = *grid_;
  const double L = g.half_width();
  t = std::clamp(t, -L, L);
  int j = static_cast<int>(std::floor((t + L) / g.spacing()));
  j = std::clamp(j, 0, g.size() - 1);
  const double left = -L + j * g.spacing();
  if (t <= left) return prefix_[static_cast<std::size_t>(j)];
  return prefix_[static_cast<std::size_t>(j)] +
         values_[static_cast<std::size_t>(j)] * segment_measure(g.params(), left, t);
}

double CellIntegrals::radial_prefix(double s) const {
  const Grid& g = *grid_;
  s = std::clamp(s, 0.0, g.half_width());
  int k = static_cast<int>(std::floor(s / g.spacing()));
  k = std::clamp(k, 0, g.half_size() - 1);
  const double left = k * g.spacing();
  if (s <= left) return radial_prefix_[static_cast<std::size_t>(k)];
  return radial_prefix_[static_cast<std::size_t>(k)] +
         radial_values_[static_cast<std::size_t>(k)] * segment_measure(g.params(), left, s);
}

double CellIntegrals::over_segment(double a, double b) const {
  if (!(a <= b)) throw DomainError("segment needs a <= b");
  return signed_prefix(b) - signed_prefix(a);
}

double CellIntegrals::over_annulus(double a, double b) const {
  if (!(0.0 <= a && a <= b)) throw DomainError("annulus needs 0 <= a <= b");
  return radial_prefix(b) - radial_prefix(a);
}

}  // namespace dunkl

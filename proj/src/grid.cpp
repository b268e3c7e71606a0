#include "dunkl/grid.hpp"

#include <algorithm>
#include <array>
#include <boost/math/special_functions/zeta.hpp>
#include <cmath>

#include "dunkl/error.hpp"
#include "dunkl/measure.hpp"
#include "origin_fit.hpp"

namespace dunkl {

namespace {

// Midpoint sums of t^s g(t), g even and smooth, miss the origin terms
//   sum_j zeta(-s-2j, 1/2) h^{s+2j+1} g_{2j},   g_{2j} = g^{(2j)}(0)/(2j)!
// (Hurwitz zeta; all vanish when s is an even integer). The g_{2j} are read off
// an even fit through the innermost nodes, which turns the fix into
// corrections of the innermost weights.
std::array<double, detail::kOriginNodes> origin_corrections(double s, double h) {
  auto hurwitz_half = [](double t) { return (std::pow(2.0, t) - 1.0) * boost::math::zeta(t); };
  const auto fit = detail::even_fit(h);
  std::array<double, detail::kOriginNodes> out{};
  for (int j = 0; j < detail::kOriginNodes; ++j) {
    const double term = hurwitz_half(-s - 2.0 * j) * std::pow(h, s + 2.0 * j + 1.0);
    for (int k = 0; k < detail::kOriginNodes; ++k)
      out[static_cast<std::size_t>(k)] -= term * fit[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
  }
  return out;
}

}  // namespace

Grid::Grid(const DunklParams& params, double half_width, int node_count)
    : params_(params), half_width_(half_width), spacing_(2.0 * half_width / node_count) {
  const auto n = static_cast<std::size_t>(node_count);
  const int half = node_count / 2;
  const double s = params_.weight_exponent();
  nodes_.resize(n);
  weights_.resize(n);
  cell_masses_.resize(n);
  std::array<double, detail::kOriginNodes> fix{};
  if (half >= 2 * detail::kOriginNodes) fix = origin_corrections(s, spacing_);
  for (int k = 0; k < half; ++k) {
    const double x = (k + 0.5) * spacing_;
    const double mass = segment_measure(params_, k * spacing_, (k + 1) * spacing_);
    double w = std::pow(x, s) * spacing_;
    if (k < detail::kOriginNodes) w += fix[static_cast<std::size_t>(k)];
    w *= params_.c_kappa();
    for (int idx : {positive(k), negative(k)}) {
      nodes_[static_cast<std::size_t>(idx)] = idx == positive(k) ? x : -x;
      weights_[static_cast<std::size_t>(idx)] = w;
      cell_masses_[static_cast<std::size_t>(idx)] = mass;
    }
  }
}

std::shared_ptr<const Grid> Grid::make(const DunklParams& params, double half_width, int node_count) {
  if (!std::isfinite(half_width) || !(half_width > 0.0)) throw DomainError("grid half-width must be > 0");
  if (node_count < 2 || node_count % 2 != 0) throw DomainError("grid node count must be even and >= 2");
  return std::shared_ptr<const Grid>(new Grid(params, half_width, node_count));
}

bool Grid::same_as(const Grid& other) const noexcept {
  return this == &other ||
         (params_ == other.params_ && half_width_ == other.half_width_ && size() == other.size());
}

GridPtr make_grid(const DunklParams& params, double half_width, int node_count) {
  return Grid::make(params, half_width, node_count);
}

GridFunction::GridFunction(GridPtr grid, std::vector<Complex> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (!grid_) throw DomainError("grid function needs a grid");
  if (static_cast<int>(values_.size()) != grid_->size()) throw DomainError("value count does not match grid size");
  for (const Complex& v : values_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) throw DomainError("grid function values must be finite");
}

GridFunction::GridFunction(GridPtr grid, const std::vector<double>& real_values)
    : GridFunction(std::move(grid), std::vector<Complex>(real_values.begin(), real_values.end())) {}

GridFunction GridFunction::zeros(GridPtr grid) {
  const auto n = static_cast<std::size_t>(grid->size());
  return GridFunction(std::move(grid), std::vector<Complex>(n));
}

std::vector<double> GridFunction::real_part() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [](Complex v) { return v.real(); });
  return out;
}

std::vector<double> GridFunction::imag_part() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [](Complex v) { return v.imag(); });
  return out;
}

std::vector<double> GridFunction::abs() const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [](Complex v) { return std::abs(v); });
  return out;
}

double GridFunction::max_imag() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v.imag()));
  return m;
}

double GridFunction::sup_norm() const {
  double m = 0.0;
  for (const Complex& v : values_) m = std::max(m, std::abs(v));
  return m;
}

GridFunction GridFunction::abs_pow(double power) const {
  std::vector<double> out(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [power](Complex v) {
    const double a = std::abs(v);
    return power == 1.0 ? a : std::pow(a, power);
  });
  return GridFunction(grid_, out);
}

GridFunction GridFunction::real() const { return GridFunction(grid_, real_part()); }

void require_same_grid(const GridFunction& a, const GridFunction& b) {
  if (!a.grid().same_as(b.grid())) throw GridMismatch();
}

GridFunction& GridFunction::operator+=(const GridFunction& other) {
  require_same_grid(*this, other);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] += other.values_[j];
  return *this;
}

GridFunction& GridFunction::operator-=(const GridFunction& other) {
  require_same_grid(*this, other);
  for (std::size_t j = 0; j < values_.size(); ++j) values_[j] -= other.values_[j];
  return *this;
}

GridFunction& GridFunction::operator*=(Complex scale) {
  for (Complex& v : values_) v *= scale;
  return *this;
}

GridFunction operator*(const GridFunction& a, const GridFunction& b) {
  require_same_grid(a, b);
  std::vector<Complex> out(a.values_.size());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = a.values_[j] * b.values_[j];
  return GridFunction(a.grid_, std::move(out));
}

double pairwise_sum(std::span<const double> terms) {
  if (terms.size() <= 8) {
    double s = 0.0;
    for (double t : terms) s += t;
    return s;
  }
  const std::size_t mid = terms.size() / 2;
  return pairwise_sum(terms.first(mid)) + pairwise_sum(terms.subspan(mid));
}

Complex integrate(const GridFunction& f) {
  const Grid& g = f.grid();
  const int half = g.half_size();
  std::vector<double> re(static_cast<std::size_t>(half)), im(static_cast<std::size_t>(half));
  for (int k = 0; k < half; ++k) {
    const Complex folded = f[g.positive(k)] + f[g.negative(k)];
    const double w = g.weight(g.positive(k));
    re[static_cast<std::size_t>(k)] = w * folded.real();
    im[static_cast<std::size_t>(k)] = w * folded.imag();
  }
  return {pairwise_sum(re), pairwise_sum(im)};
}

}  // namespace dunkl

#include "dunkl/translation.hpp"

#include <cblas.h>

#include <algorithm>
#include <cmath>

#include "dunkl/error.hpp"
#include "dunkl/measure.hpp"

namespace dunkl {

namespace {

constexpr double kImagTolerance = 1e-8;
constexpr int kRowChunk = 128;

void check_shift(const Grid& grid, double y) {
  if (!std::isfinite(y)) throw DomainError("translation amount must be finite");
  if (std::abs(y) > grid.half_width()) throw DomainError("translation amount exceeds the grid half-width");
}

void check_radius(double r) {
  if (!std::isfinite(r) || !(r > 0.0)) throw DomainError("radius must be finite and > 0");
}

bool in_dunkl_ball(double x, double y, double r) {
  const double ax = std::abs(x);
  const double ay = std::abs(y);
  return ax < ay + r && ax > std::max(0.0, ay - r);
}

// 2 w_m g(lambda_m) over the positive frequencies, g = closed-form ball spectrum.
std::vector<double> scaled_ball_spectrum(const Grid& lg, double r) {
  const double kappa = lg.params().kappa();
  const double mass = ball_measure_origin(lg.params(), r);
  std::vector<double> d(static_cast<std::size_t>(lg.half_size()));
  for (int m = 0; m < lg.half_size(); ++m) {
    const double lambda = lg.node(lg.positive(m));
    d[static_cast<std::size_t>(m)] = 2.0 * lg.weight(lg.positive(m)) * mass * bessel_normalized(kappa + 1.0, lambda * r);
  }
  return d;
}

}  // namespace

std::vector<Complex> translation_multiplier(const Grid& lambda_grid, double y) {
  if (!std::isfinite(y)) throw DomainError("translation amount must be finite");
  std::vector<Complex> out(static_cast<std::size_t>(lambda_grid.size()));
  for (int j = 0; j < lambda_grid.size(); ++j)
    out[static_cast<std::size_t>(j)] = dunkl_kernel(lambda_grid.params(), lambda_grid.node(j) * y);
  return out;
}

std::vector<double> ball_indicator_spectrum(const Grid& lambda_grid, double r) {
  check_radius(r);
  const double mass = ball_measure_origin(lambda_grid.params(), r);
  const double kappa = lambda_grid.params().kappa();
  std::vector<double> out(static_cast<std::size_t>(lambda_grid.size()));
  for (int j = 0; j < lambda_grid.size(); ++j)
    out[static_cast<std::size_t>(j)] = mass * bessel_normalized(kappa + 1.0, lambda_grid.node(j) * r);
  return out;
}

GridFunction translate(const GridFunction& f, double y) {
  check_shift(f.grid(), y);
  const GridPtr lg = default_lambda_grid(f.grid());
  const SpectralFunction spectrum = forward(f, lg);
  GridFunction out = inverse(spectrum.multiplied(std::span<const Complex>(translation_multiplier(*lg, y))), f.grid_ptr());
  if (f.max_imag() != 0.0) return out;

  const double scale = f.sup_norm();
  if (out.max_imag() > kImagTolerance * std::max(scale, 1e-300))
    throw NumericalError("translate of a real function has a non-negligible imaginary part");
  return out.real();
}

GridFunction translate_indicator_raw(double y, double r, const GridPtr& grid) {
  check_shift(*grid, y);
  check_radius(r);
  const GridPtr lg = default_lambda_grid(*grid);
  const std::vector<double> spectrum = ball_indicator_spectrum(*lg, r);
  const std::vector<Complex> shift = translation_multiplier(*lg, y);
  std::vector<Complex> values(spectrum.size());
  for (std::size_t j = 0; j < values.size(); ++j) values[j] = spectrum[j] * shift[j];
  return inverse(SpectralFunction(lg, std::move(values)), grid).real();
}

GridFunction translate_indicator(const DunklParams& params, double y, double r, const GridPtr& grid) {
  if (!(params == grid->params())) throw GridMismatch();
  const GridFunction raw = translate_indicator_raw(y, r, grid);
  std::vector<double> out(static_cast<std::size_t>(grid->size()));
  for (int j = 0; j < grid->size(); ++j)
    out[static_cast<std::size_t>(j)] = in_dunkl_ball(grid->node(j), y, r) ? std::clamp(raw[j].real(), 0.0, 1.0) : 0.0;
  return GridFunction(grid, out);
}

GridFunction convolve(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f, g);
  const GridPtr lg = default_lambda_grid(f.grid());
  const SpectralFunction ff = forward(f, lg);
  const SpectralFunction fg = forward(g, lg);
  return inverse(ff.multiplied(fg.values()), f.grid_ptr());
}

std::vector<std::vector<double>> convolve_with_balls(const GridFunction& g, const std::vector<double>& radii) {
  if (g.max_imag() != 0.0) throw DomainError("convolve_with_balls needs a real function");
  const GridPtr lg = default_lambda_grid(g.grid());
  const SpectralFunction spectrum = forward(g, lg);
  std::vector<std::vector<double>> multipliers;
  multipliers.reserve(radii.size());
  for (double r : radii) multipliers.push_back(ball_indicator_spectrum(*lg, r));
  return inverse_with_even_multipliers(spectrum, multipliers, g.grid_ptr());
}

IndicatorTranslates::IndicatorTranslates(const GridPtr& grid, double r) : grid_(grid), radius_(r) {
  check_radius(r);
  const GridPtr lg = default_lambda_grid(*grid);
  const auto blocks = kernel_blocks(*grid, *lg);
  const int rows = blocks->rows;
  const int cols = blocks->cols;
  band_ = std::min(rows - 1, static_cast<int>(std::ceil(r / grid->spacing())) + 1);
  const int width = 2 * band_ + 1;
  sym_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(width), 0.0);
  anti_.assign(sym_.size(), 0.0);

  const std::vector<double> d = scaled_ball_spectrum(*lg, r);
  std::vector<double> left(static_cast<std::size_t>(kRowChunk) * static_cast<std::size_t>(cols));
  std::vector<double> product;

  for (int pass = 0; pass < 2; ++pass) {
    const std::vector<double>& m = pass == 0 ? blocks->even : blocks->odd;
    std::vector<double>& target = pass == 0 ? sym_ : anti_;
    for (int k0 = 0; k0 < rows; k0 += kRowChunk) {
      const int k1 = std::min(rows, k0 + kRowChunk);
      const int l0 = std::max(0, k0 - band_);
      const int l1 = std::min(rows, k1 + band_);
      const int chunk = k1 - k0;
      const int span = l1 - l0;
      for (int k = k0; k < k1; ++k)
        for (int c = 0; c < cols; ++c)
          left[static_cast<std::size_t>(k - k0) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)] =
              m[static_cast<std::size_t>(k) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)] *
              d[static_cast<std::size_t>(c)];
      product.resize(static_cast<std::size_t>(chunk) * static_cast<std::size_t>(span));
      cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasTrans, chunk, span, cols, 1.0, left.data(), cols,
                  m.data() + static_cast<std::size_t>(l0) * static_cast<std::size_t>(cols), cols, 0.0, product.data(),
                  span);
      for (int k = k0; k < k1; ++k) {
        for (int l = std::max(l0, k - band_); l < std::min(l1, k + band_ + 1); ++l) {
          target[static_cast<std::size_t>(k) * static_cast<std::size_t>(width) + static_cast<std::size_t>(l - k + band_)] =
              product[static_cast<std::size_t>(k - k0) * static_cast<std::size_t>(span) + static_cast<std::size_t>(l - l0)];
        }
      }
    }
  }

  // Origin corrections of the lambda sums, applied with either node in the
  // role of the evaluation point and averaged so the matrix stays symmetric.
  const int n = blocks->origin_nodes;
  if (n == 0) return;
  const double mass = ball_measure_origin(grid->params(), r);
  std::vector<double> g2(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    const double lambda = lg->node(lg->positive(m));
    g2[static_cast<std::size_t>(m)] = 2.0 * mass * bessel_normalized(grid->params().kappa() + 1.0, lambda * r);
  }
  auto at = [cols](const std::vector<double>& v, int row, int col) {
    return v[static_cast<std::size_t>(row) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(col)];
  };
  auto fix_at = [rows](const std::vector<double>& v, int m, int l) {
    return v[static_cast<std::size_t>(m) * static_cast<std::size_t>(rows) + static_cast<std::size_t>(l)];
  };
  for (int k = 0; k < rows; ++k) {
    for (int l = std::max(0, k - band_); l < std::min(rows, k + band_ + 1); ++l) {
      double es = 0.0;
      double os = 0.0;
      for (int m = 0; m < n; ++m) {
        const double lambda = lg->node(lg->positive(m));
        const double g = g2[static_cast<std::size_t>(m)];
        es += g * (fix_at(blocks->inverse_even_fix, m, l) * at(blocks->even, k, m) +
                   fix_at(blocks->inverse_even_fix, m, k) * at(blocks->even, l, m));
        os += g / lambda *
              (fix_at(blocks->inverse_odd_fix, m, l) * at(blocks->odd, k, m) +
               fix_at(blocks->inverse_odd_fix, m, k) * at(blocks->odd, l, m));
      }
      const std::size_t idx = static_cast<std::size_t>(k) * static_cast<std::size_t>(width) + static_cast<std::size_t>(l - k + band_);
      sym_[idx] += 0.5 * es;
      anti_[idx] += 0.5 * os;
    }
  }
}

double IndicatorTranslates::raw(int y, int x) const {
  const Grid& g = *grid_;
  const int half = g.half_size();
  const int ky = y >= half ? y - half : half - 1 - y;
  const int kx = x >= half ? x - half : half - 1 - x;
  if (std::abs(kx - ky) > band_) return 0.0;
  const bool same_side = (y >= half) == (x >= half);
  const std::size_t at = static_cast<std::size_t>(ky) * static_cast<std::size_t>(2 * band_ + 1) +
                         static_cast<std::size_t>(kx - ky + band_);
  return same_side ? sym_[at] - anti_[at] : sym_[at] + anti_[at];
}

double IndicatorTranslates::value(int y, int x) const {
  if (!in_dunkl_ball(grid_->node(x), grid_->node(y), radius_)) return 0.0;
  return std::clamp(raw(y, x), 0.0, 1.0);
}

void IndicatorTranslates::support(int y, std::vector<int>& out) const {
  out.clear();
  const Grid& g = *grid_;
  const double ay = std::abs(g.node(y));
  const double lo = std::max(0.0, ay - radius_);
  const double hi = ay + radius_;
  // |x_k| = (k + 1/2) dx for the k-th node on either side
  const double dx = g.spacing();
  const int kmin = std::max(0, static_cast<int>(std::floor(lo / dx - 0.5)) - 1);
  const int kmax = std::min(g.half_size() - 1, static_cast<int>(std::ceil(hi / dx - 0.5)) + 1);
  for (int k = kmax; k >= kmin; --k)
    if (in_dunkl_ball(g.node(g.negative(k)), g.node(y), radius_)) out.push_back(g.negative(k));
  for (int k = kmin; k <= kmax; ++k)
    if (in_dunkl_ball(g.node(g.positive(k)), g.node(y), radius_)) out.push_back(g.positive(k));
}

GridFunction IndicatorTranslates::row(int y) const {
  std::vector<double> out(static_cast<std::size_t>(grid_->size()));
  for (int x = 0; x < grid_->size(); ++x) out[static_cast<std::size_t>(x)] = value(y, x);
  return GridFunction(grid_, out);
}

}  // namespace dunkl

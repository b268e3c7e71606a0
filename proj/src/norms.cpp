#include "dunkl/norms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

#include "dunkl/error.hpp"
#include "dunkl/maximal.hpp"
#include "dunkl/measure.hpp"
#include "dunkl/translation.hpp"

namespace dunkl {

namespace {

// Sum of w_j v_j folded over mirror pairs, then pairwise.
double weighted_sum(const Grid& grid, std::span<const double> values) {
  std::vector<double> terms(static_cast<std::size_t>(grid.half_size()));
  for (int k = 0; k < grid.half_size(); ++k) {
    const int p = grid.positive(k);
    const int n = grid.negative(k);
    terms[static_cast<std::size_t>(k)] =
        grid.weight(p) * values[static_cast<std::size_t>(p)] + grid.weight(n) * values[static_cast<std::size_t>(n)];
  }
  return pairwise_sum(terms);
}

void check_radii(const Grid& grid, const std::vector<double>& radii) {
  for (double r : radii)
    if (!std::isfinite(r) || !(r > 0.0) || r > 0.5 * grid.half_width())
      throw DomainError("window radii must lie in (0, L/2]");
}

// Range maximum over a fixed array.
class SparseMax {
 public:
  explicit SparseMax(std::vector<double> base) {
    levels_.push_back(std::move(base));
    const std::size_t n = levels_[0].size();
    for (std::size_t width = 2; width <= n; width *= 2) {
      const auto& prev = levels_.back();
      std::vector<double> next(n - width + 1);
      for (std::size_t i = 0; i < next.size(); ++i) next[i] = std::max(prev[i], prev[i + width / 2]);
      levels_.push_back(std::move(next));
    }
  }

  // max over [lo, hi], 0 when empty
  double query(int lo, int hi) const {
    if (lo > hi) return 0.0;
    const auto len = static_cast<unsigned>(hi - lo + 1);
    const int level = static_cast<int>(std::bit_width(len)) - 1;
    const auto& row = levels_[static_cast<std::size_t>(level)];
    return std::max(row[static_cast<std::size_t>(lo)], row[static_cast<std::size_t>(hi - (1 << level) + 1)]);
  }

 private:
  std::vector<std::vector<double>> levels_;
};

void check_weak_exponents(Exponent p, Exponent alpha) {
  if (!(alpha <= p)) throw DomainError("weak Fofana norm needs 1 <= alpha <= p");
}

std::vector<double> interval_windows(const GridFunction& f, Exponent q, double r) {
  const Grid& g = f.grid();
  if (!std::isfinite(r) || !(r > 0.0)) throw DomainError("window radius must be > 0");
  const std::vector<double> a = f.abs();
  std::vector<double> out(static_cast<std::size_t>(g.size()));
  if (q.is_infinite()) {
    const SparseMax table(a);
    const double L = g.half_width();
    const double dx = g.spacing();
    for (int j = 0; j < g.size(); ++j) {
      const double y = g.node(j);
      // nodes x_i = -L + (i + 1/2) dx strictly inside (y - r, y + r)
      int lo = std::max(0, static_cast<int>(std::floor((y - r + L) / dx - 0.5)) - 1);
      int hi = std::min(g.size() - 1, static_cast<int>(std::ceil((y + r + L) / dx - 0.5)) + 1);
      while (lo <= hi && !(g.node(lo) > y - r)) ++lo;
      while (hi >= lo && !(g.node(hi) < y + r)) --hi;
      out[static_cast<std::size_t>(j)] = table.query(lo, hi);
    }
    return out;
  }
  const double qv = q.value();
  std::vector<double> powered(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) powered[i] = std::pow(a[i], qv);
  const CellIntegrals cells(g, powered);
  for (int j = 0; j < g.size(); ++j) {
    const double y = g.node(j);
    out[static_cast<std::size_t>(j)] = std::pow(std::max(0.0, cells.over_segment(y - r, y + r)), 1.0 / qv);
  }
  return out;
}

}  // namespace

double lp_norm(std::span<const double> values, const Grid& grid, Exponent p) {
  if (static_cast<int>(values.size()) != grid.size()) throw DomainError("values do not match grid size");
  double top = 0.0;
  for (double v : values) top = std::max(top, std::abs(v));
  if (p.is_infinite() || top == 0.0) return top;
  const double pv = p.value();
  std::vector<double> powered(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) powered[i] = std::pow(std::abs(values[i]) / top, pv);
  return top * std::pow(weighted_sum(grid, powered), 1.0 / pv);
}

double lp_norm(const GridFunction& f, Exponent p) {
  const std::vector<double> a = f.abs();
  return lp_norm(a, f.grid(), p);
}

std::vector<double> geometric_r_grid(double r_min, double r_max) {
  if (!std::isfinite(r_min) || !std::isfinite(r_max) || !(r_min > 0.0) || r_max < r_min)
    throw DomainError("radius grid needs 0 < r_min <= r_max");
  std::vector<double> out;
  const double odd = r_min * std::numbers::sqrt2;
  for (int k = 0;; ++k) {
    const double r = k % 2 == 0 ? std::ldexp(r_min, k / 2) : std::ldexp(odd, k / 2);
    if (r > r_max * (1.0 + 1e-12)) break;
    out.push_back(r);
  }
  return out;
}

std::vector<double> default_r_grid(const Grid& grid) {
  return geometric_r_grid(8.0 * grid.spacing(), 0.5 * grid.half_width());
}

void NormSpec::validate() const {
  if (!(q <= alpha) || !(alpha <= p)) throw DomainError("exponents must satisfy q <= alpha <= p");
  if (r_grid.empty()) throw DomainError("radius grid is empty");
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    if (!std::isfinite(r_grid[i]) || !(r_grid[i] > 0.0)) throw DomainError("radii must be finite and > 0");
    if (i > 0 && !(r_grid[i] > r_grid[i - 1])) throw DomainError("radius grid must be strictly increasing");
  }
}

std::vector<std::vector<double>> amalgam_windows(const GridFunction& f, Exponent q, const std::vector<double>& radii) {
  const Grid& g = f.grid();
  check_radii(g, radii);
  std::vector<std::vector<double>> out;
  if (q.is_infinite()) {
    const int half = g.half_size();
    std::vector<double> folded(static_cast<std::size_t>(half));
    for (int k = 0; k < half; ++k)
      folded[static_cast<std::size_t>(k)] = std::max(std::abs(f[g.positive(k)]), std::abs(f[g.negative(k)]));
    const SparseMax table(folded);
    const double dx = g.spacing();
    for (double r : radii) {
      std::vector<double> u(static_cast<std::size_t>(g.size()));
      for (int j = 0; j < g.size(); ++j) {
        const double ay = std::abs(g.node(j));
        const double lo_edge = std::max(0.0, ay - r);
        const double hi_edge = ay + r;
        // |x_k| = (k + 1/2) dx strictly inside (lo_edge, hi_edge)
        int lo = std::max(0, static_cast<int>(std::floor(lo_edge / dx - 0.5)) - 1);
        int hi = std::min(half - 1, static_cast<int>(std::ceil(hi_edge / dx - 0.5)) + 1);
        while (lo <= hi && !(g.node(g.positive(lo)) > lo_edge)) ++lo;
        while (hi >= lo && !(g.node(g.positive(hi)) < hi_edge)) --hi;
        u[static_cast<std::size_t>(j)] = table.query(lo, hi);
      }
      out.push_back(std::move(u));
    }
    return out;
  }
  const double qv = q.value();
  out = convolve_with_balls(f.abs_pow(qv), radii);
  for (auto& u : out)
    for (double& v : u) v = std::pow(std::max(0.0, v), 1.0 / qv);
  return out;
}

double amalgam_norm_r(const GridFunction& f, Exponent q, Exponent p, double r) {
  const auto windows = amalgam_windows(f, q, {r});
  return lp_norm(windows[0], f.grid(), p);
}

std::vector<double> fofana_profile(const GridFunction& f, const NormSpec& spec) {
  spec.validate();
  const auto windows = amalgam_windows(f, spec.q, spec.r_grid);
  const double e = spec.alpha.reciprocal() - spec.q.reciprocal() - spec.p.reciprocal();
  std::vector<double> out(spec.r_grid.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = std::pow(ball_measure_origin(f.grid().params(), spec.r_grid[i]), e) * lp_norm(windows[i], f.grid(), spec.p);
  return out;
}

double fofana_norm(const GridFunction& f, const NormSpec& spec) {
  const auto profile = fofana_profile(f, spec);
  return *std::max_element(profile.begin(), profile.end());
}

std::vector<std::vector<double>> weak_windows(const std::vector<GridFunction>& functions, double r) {
  if (functions.empty()) return {};
  const GridPtr& grid = functions.front().grid_ptr();
  for (const auto& f : functions) require_same_grid(functions.front(), f);
  check_radii(*grid, {r});
  const Grid& g = *grid;
  const IndicatorTranslates bank(grid, r);

  std::vector<std::vector<double>> abs_values;
  for (const auto& f : functions) abs_values.push_back(f.abs());
  std::vector<std::vector<double>> out(functions.size(), std::vector<double>(static_cast<std::size_t>(g.size())));

  std::vector<int> support;
  std::vector<double> indicator, values, weights;
  for (int y = 0; y < g.size(); ++y) {
    // tau_{-y} chi_{B_r}: the bank row at the mirrored node
    const int ym = g.mirror(y);
    bank.support(ym, support);
    indicator.resize(support.size());
    weights.resize(support.size());
    for (std::size_t i = 0; i < support.size(); ++i) {
      indicator[i] = bank.value(ym, support[i]);
      weights[i] = g.weight(support[i]);
    }
    values.resize(support.size());
    for (std::size_t fi = 0; fi < functions.size(); ++fi) {
      const auto& a = abs_values[fi];
      for (std::size_t i = 0; i < support.size(); ++i) values[i] = a[static_cast<std::size_t>(support[i])] * indicator[i];
      out[fi][static_cast<std::size_t>(y)] = weak_l1_norm(values, weights);
    }
  }
  return out;
}

std::vector<double> weak_windows(const GridFunction& f, double r) { return weak_windows(std::vector<GridFunction>{f}, r).front(); }

double weak_fofana_from_windows(const std::vector<std::vector<double>>& windows_per_r, const Grid& grid, Exponent p,
                                Exponent alpha, const std::vector<double>& r_grid) {
  check_weak_exponents(p, alpha);
  if (r_grid.empty() || windows_per_r.size() != r_grid.size()) throw DomainError("one weak window per radius expected");
  const double e = alpha.reciprocal() - 1.0 - p.reciprocal();
  double best = 0.0;
  for (std::size_t i = 0; i < r_grid.size(); ++i)
    best = std::max(best, std::pow(ball_measure_origin(grid.params(), r_grid[i]), e) * lp_norm(windows_per_r[i], grid, p));
  return best;
}

double weak_fofana_norm(const GridFunction& f, Exponent p, Exponent alpha, const std::vector<double>& r_grid) {
  check_weak_exponents(p, alpha);
  if (r_grid.empty()) throw DomainError("radius grid is empty");
  std::vector<std::vector<double>> windows;
  for (double r : r_grid) windows.push_back(weak_windows(f, r));
  return weak_fofana_from_windows(windows, f.grid(), p, alpha, r_grid);
}

double interval_amalgam_norm_r(const GridFunction& f, Exponent q, Exponent p, double r) {
  return lp_norm(interval_windows(f, q, r), f.grid(), p);
}

double interval_fofana_term(const GridFunction& f, Exponent q, Exponent p, Exponent alpha, double r) {
  const Grid& g = f.grid();
  const double e = alpha.reciprocal() - q.reciprocal() - p.reciprocal();
  std::vector<double> h = interval_windows(f, q, r);
  for (int j = 0; j < g.size(); ++j)
    h[static_cast<std::size_t>(j)] *= std::pow(interval_measure(g.params(), g.node(j), r), e);
  return lp_norm(h, g, p);
}

double interval_fofana_norm(const GridFunction& f, const NormSpec& spec) {
  spec.validate();
  double best = 0.0;
  for (double r : spec.r_grid) best = std::max(best, interval_fofana_term(f, spec.q, spec.p, spec.alpha, r));
  return best;
}

}  // namespace dunkl

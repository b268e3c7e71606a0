#include "dunkl/transform.hpp"

#include <cblas.h>

#include <algorithm>
#include <cmath>
#include <list>
#include <mutex>
#include <numbers>

#include "dunkl/error.hpp"
#include "origin_fit.hpp"

namespace dunkl {

namespace {

constexpr int kFitNodes = detail::kOriginNodes;

// (-d/da)^j [a^{-p} e^{-q/a}]
double neg_da_power(double p, double q, double a, int j) {
  std::vector<double> c{1.0};  // coefficient of a^{-(p+d)}
  for (int step = 0; step < j; ++step) {
    std::vector<double> next(c.size() + 2, 0.0);
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d + 1] += (p + static_cast<double>(d)) * c[d];
      next[d + 2] -= q * c[d];
    }
    c = std::move(next);
  }
  double sum = 0.0;
  for (std::size_t d = 0; d < c.size(); ++d) sum += c[d] * std::pow(a, -(p + static_cast<double>(d)));
  return sum * std::exp(-q / a);
}

// Half-line transform pieces of t^power e^{-a t^2}: the even kernel for even
// powers, the odd kernel for odd ones, at conjugate node nu.
double gaussian_moment_target(double kappa, int power, double a, double nu) {
  const double q = 0.25 * nu * nu;
  const int j = power / 2;
  if (power % 2 == 0) return 0.5 * std::pow(2.0, -(kappa + 1.0)) * neg_da_power(kappa + 1.0, q, a, j);
  return 0.5 * nu * std::pow(2.0, -(kappa + 2.0)) * neg_da_power(kappa + 2.0, q, a, j);
}

// y = M x  (trans = false) or y = M^T x (trans = true), M row-major rows x cols.
void gemv(const std::vector<double>& m, int rows, int cols, bool trans, const double* x, double* y) {
  cblas_dgemv(CblasRowMajor, trans ? CblasTrans : CblasNoTrans, rows, cols, 1.0, m.data(), cols, x, 1, 0.0, y, 1);
}

// out[v] += sum_k fix(k, v) samples[k] over the innermost nodes
void add_fix(const std::vector<double>& fix, int nodes, int conj, const double* samples, double* out) {
  for (int k = 0; k < nodes; ++k) {
    const double* row = fix.data() + static_cast<std::size_t>(k) * static_cast<std::size_t>(conj);
    for (int v = 0; v < conj; ++v) out[v] += row[v] * samples[k];
  }
}

// Origin corrections for sums over `sum_grid` (the rows when over_rows),
// measured against localized Gaussian moments with known transforms.
void origin_fix(const KernelBlocks& b, const Grid& sum_grid, const Grid& conj_grid, bool over_rows,
                std::vector<double>& even_fix, std::vector<double>& odd_fix) {
  const int n = kFitNodes;
  const int half = sum_grid.half_size();
  const int conj = conj_grid.half_size();
  const double h = sum_grid.spacing();
  const double kappa = sum_grid.params().kappa();
  const double a = 1.0 / (16.0 * h * h);
  const auto fit = detail::even_fit(h);

  // delta[par][j][v]: defect of t^{par + 2j} against the kernel of parity par
  std::vector<double> delta[2];
  for (int par = 0; par < 2; ++par) {
    delta[par].assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(conj), 0.0);
    std::vector<double> defect(static_cast<std::size_t>(n) * static_cast<std::size_t>(conj));
    const auto& block = par == 0 ? b.even : b.odd;
    std::vector<double> v(static_cast<std::size_t>(half)), sums(static_cast<std::size_t>(conj));
    for (int j = 0; j < n; ++j) {
      const int power = par + 2 * j;
      for (int k = 0; k < half; ++k) {
        const double t = sum_grid.node(sum_grid.positive(k));
        v[static_cast<std::size_t>(k)] = sum_grid.weight(sum_grid.positive(k)) * std::pow(t, power) * std::exp(-a * t * t);
      }
      gemv(block, b.rows, b.cols, over_rows, v.data(), sums.data());
      for (int c = 0; c < conj; ++c) {
        const double nu = conj_grid.node(conj_grid.positive(c));
        defect[static_cast<std::size_t>(j) * static_cast<std::size_t>(conj) + static_cast<std::size_t>(c)] =
            gaussian_moment_target(kappa, power, a, nu) - sums[static_cast<std::size_t>(c)];
      }
    }
    // t^p e^{-a t^2} = sum_i (-a)^i / i! t^{p + 2i}: peel the Gaussian off
    for (int j = n - 1; j >= 0; --j) {
      for (int c = 0; c < conj; ++c) {
        double d = defect[static_cast<std::size_t>(j) * static_cast<std::size_t>(conj) + static_cast<std::size_t>(c)];
        double coef = 1.0;
        for (int i = 1; j + i < n; ++i) {
          coef *= -a / i;
          d -= coef * delta[par][static_cast<std::size_t>(j + i) * static_cast<std::size_t>(conj) + static_cast<std::size_t>(c)];
        }
        delta[par][static_cast<std::size_t>(j) * static_cast<std::size_t>(conj) + static_cast<std::size_t>(c)] = d;
      }
    }
  }
  even_fix.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(conj), 0.0);
  odd_fix.assign(even_fix.size(), 0.0);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j) {
      const double f = fit[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      for (int c = 0; c < conj; ++c) {
        const std::size_t at = static_cast<std::size_t>(k) * static_cast<std::size_t>(conj) + static_cast<std::size_t>(c);
        const std::size_t from = static_cast<std::size_t>(j) * static_cast<std::size_t>(conj) + static_cast<std::size_t>(c);
        even_fix[at] += f * delta[0][from];
        odd_fix[at] += f * delta[1][from];
      }
    }
}

struct BlockKey {
  double kappa;
  double x_half_width;
  int x_size;
  double lambda_half_width;
  int lambda_size;

  friend bool operator==(const BlockKey&, const BlockKey&) = default;
};

class BlockCache {
 public:
  static constexpr std::size_t kByteBudget = std::size_t{768} << 20;

  std::shared_ptr<const KernelBlocks> get(const Grid& x_grid, const Grid& lambda_grid) {
    const BlockKey key{x_grid.params().kappa(), x_grid.half_width(), x_grid.size(), lambda_grid.half_width(),
                       lambda_grid.size()};
    {
      std::lock_guard lock(mutex_);
      for (auto it = entries_.begin(); it != entries_.end(); ++it) {
        if (it->first == key) {
          entries_.splice(entries_.begin(), entries_, it);
          return it->second;
        }
      }
    }
    auto blocks = build(x_grid, lambda_grid);
    std::lock_guard lock(mutex_);
    entries_.emplace_front(key, blocks);
    bytes_ += footprint(*blocks);
    while (bytes_ > kByteBudget && entries_.size() > 1) {
      bytes_ -= footprint(*entries_.back().second);
      entries_.pop_back();
    }
    return blocks;
  }

  void clear() {
    std::lock_guard lock(mutex_);
    entries_.clear();
    bytes_ = 0;
  }

 private:
  static std::size_t footprint(const KernelBlocks& b) {
    return (b.even.size() + b.odd.size() + 4 * b.forward_even_fix.size()) * sizeof(double);
  }

  static std::shared_ptr<const KernelBlocks> build(const Grid& x_grid, const Grid& lambda_grid) {
    auto blocks = std::make_shared<KernelBlocks>();
    const int rows = x_grid.half_size();
    const int cols = lambda_grid.half_size();
    blocks->rows = rows;
    blocks->cols = cols;
    const auto total = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    blocks->even.resize(total);
    blocks->odd.resize(total);
    const double z_max = x_grid.node(x_grid.size() - 1) * lambda_grid.node(lambda_grid.size() - 1);
    const KernelTable table(x_grid.params().kappa(), z_max + 1.0);
    for (int k = 0; k < rows; ++k) {
      const double x = x_grid.node(x_grid.positive(k));
      double* even = blocks->even.data() + static_cast<std::size_t>(k) * static_cast<std::size_t>(cols);
      double* odd = blocks->odd.data() + static_cast<std::size_t>(k) * static_cast<std::size_t>(cols);
      for (int m = 0; m < cols; ++m) {
        const double z = x * lambda_grid.node(lambda_grid.positive(m));
        even[m] = table.even(z);
        odd[m] = table.odd(z);
      }
    }
    if (rows >= 2 * kFitNodes && cols >= 2 * kFitNodes) {
      blocks->origin_nodes = kFitNodes;
      origin_fix(*blocks, x_grid, lambda_grid, true, blocks->forward_even_fix, blocks->forward_odd_fix);
      origin_fix(*blocks, lambda_grid, x_grid, false, blocks->inverse_even_fix, blocks->inverse_odd_fix);
    }
    return blocks;
  }

  std::mutex mutex_;
  std::list<std::pair<BlockKey, std::shared_ptr<const KernelBlocks>>> entries_;
  std::size_t bytes_ = 0;
};

BlockCache& cache() {
  static BlockCache instance;
  return instance;
}

void require_compatible(const Grid& a, const Grid& b) {
  if (!(a.params() == b.params())) throw GridMismatch();
}

}  // namespace

SpectralFunction SpectralFunction::multiplied(std::span<const Complex> multiplier) const {
  if (static_cast<int>(multiplier.size()) != size()) throw DomainError("multiplier size does not match lambda grid");
  std::vector<Complex> out(values().begin(), values().end());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] *= multiplier[j];
  return SpectralFunction(lambda_grid_ptr(), std::move(out));
}

SpectralFunction SpectralFunction::multiplied(std::span<const double> multiplier) const {
  if (static_cast<int>(multiplier.size()) != size()) throw DomainError("multiplier size does not match lambda grid");
  std::vector<Complex> out(values().begin(), values().end());
  for (std::size_t j = 0; j < out.size(); ++j) out[j] *= multiplier[j];
  return SpectralFunction(lambda_grid_ptr(), std::move(out));
}

GridPtr default_lambda_grid(const Grid& x_grid) {
  // lambda spacing pi / (2 L): twice the Nyquist rate for support [-L, L]
  const double half_width = std::numbers::pi * x_grid.size() / (4.0 * x_grid.half_width());
  return make_grid(x_grid.params(), half_width, x_grid.size());
}

std::shared_ptr<const KernelBlocks> kernel_blocks(const Grid& x_grid, const Grid& lambda_grid) {
  require_compatible(x_grid, lambda_grid);
  return cache().get(x_grid, lambda_grid);
}

void clear_kernel_cache() { cache().clear(); }

SpectralFunction forward(const GridFunction& f, const GridPtr& lambda_grid) {
  const Grid& xg = f.grid();
  const auto blocks = kernel_blocks(xg, *lambda_grid);
  const int rows = blocks->rows;
  const int cols = blocks->cols;

  // Even/odd parts of w f over the positive half, real and imaginary separately.
  std::vector<double> ue_re(rows), ue_im(rows), uo_re(rows), uo_im(rows);
  for (int k = 0; k < rows; ++k) {
    const double w = xg.weight(xg.positive(k));
    const Complex fp = f[xg.positive(k)];
    const Complex fn = f[xg.negative(k)];
    const Complex e = w * (fp + fn);
    const Complex o = w * (fp - fn);
    ue_re[k] = e.real();
    ue_im[k] = e.imag();
    uo_re[k] = o.real();
    uo_im[k] = o.imag();
  }
  std::vector<double> fe_re(cols), fe_im(cols), fo_re(cols), fo_im(cols);
  gemv(blocks->even, rows, cols, true, ue_re.data(), fe_re.data());
  gemv(blocks->even, rows, cols, true, ue_im.data(), fe_im.data());
  gemv(blocks->odd, rows, cols, true, uo_re.data(), fo_re.data());
  gemv(blocks->odd, rows, cols, true, uo_im.data(), fo_im.data());
  if (const int n = blocks->origin_nodes; n > 0) {
    std::vector<double> e_re(n), e_im(n), o_re(n), o_im(n);
    for (int k = 0; k < n; ++k) {
      const Complex fp = f[xg.positive(k)];
      const Complex fn = f[xg.negative(k)];
      const double x = xg.node(xg.positive(k));
      e_re[k] = (fp + fn).real();
      e_im[k] = (fp + fn).imag();
      o_re[k] = (fp - fn).real() / x;
      o_im[k] = (fp - fn).imag() / x;
    }
    add_fix(blocks->forward_even_fix, n, cols, e_re.data(), fe_re.data());
    add_fix(blocks->forward_even_fix, n, cols, e_im.data(), fe_im.data());
    add_fix(blocks->forward_odd_fix, n, cols, o_re.data(), fo_re.data());
    add_fix(blocks->forward_odd_fix, n, cols, o_im.data(), fo_im.data());
  }

  const Grid& lg = *lambda_grid;
  std::vector<Complex> out(static_cast<std::size_t>(lg.size()));
  const Complex i(0.0, 1.0);
  for (int m = 0; m < cols; ++m) {
    const Complex fe(fe_re[m], fe_im[m]);
    const Complex fo(fo_re[m], fo_im[m]);
    out[static_cast<std::size_t>(lg.positive(m))] = fe - i * fo;
    out[static_cast<std::size_t>(lg.negative(m))] = fe + i * fo;
  }
  return SpectralFunction(lambda_grid, std::move(out));
}

SpectralFunction forward(const GridFunction& f) { return forward(f, default_lambda_grid(f.grid())); }

GridFunction inverse(const SpectralFunction& spectrum, const GridPtr& x_grid) {
  const Grid& lg = spectrum.lambda_grid();
  const auto blocks = kernel_blocks(*x_grid, lg);
  const int rows = blocks->rows;
  const int cols = blocks->cols;

  std::vector<double> ge_re(cols), ge_im(cols), go_re(cols), go_im(cols);
  for (int m = 0; m < cols; ++m) {
    const double w = lg.weight(lg.positive(m));
    const Complex fp = spectrum[lg.positive(m)];
    const Complex fn = spectrum[lg.negative(m)];
    const Complex e = w * (fp + fn);
    const Complex o = w * (fp - fn);
    ge_re[m] = e.real();
    ge_im[m] = e.imag();
    go_re[m] = o.real();
    go_im[m] = o.imag();
  }
  std::vector<double> ae_re(rows), ae_im(rows), bo_re(rows), bo_im(rows);
  gemv(blocks->even, rows, cols, false, ge_re.data(), ae_re.data());
  gemv(blocks->even, rows, cols, false, ge_im.data(), ae_im.data());
  gemv(blocks->odd, rows, cols, false, go_re.data(), bo_re.data());
  gemv(blocks->odd, rows, cols, false, go_im.data(), bo_im.data());
  if (const int n = blocks->origin_nodes; n > 0) {
    std::vector<double> e_re(n), e_im(n), o_re(n), o_im(n);
    for (int m = 0; m < n; ++m) {
      const Complex fp = spectrum[lg.positive(m)];
      const Complex fn = spectrum[lg.negative(m)];
      const double lambda = lg.node(lg.positive(m));
      e_re[m] = (fp + fn).real();
      e_im[m] = (fp + fn).imag();
      o_re[m] = (fp - fn).real() / lambda;
      o_im[m] = (fp - fn).imag() / lambda;
    }
    add_fix(blocks->inverse_even_fix, n, rows, e_re.data(), ae_re.data());
    add_fix(blocks->inverse_even_fix, n, rows, e_im.data(), ae_im.data());
    add_fix(blocks->inverse_odd_fix, n, rows, o_re.data(), bo_re.data());
    add_fix(blocks->inverse_odd_fix, n, rows, o_im.data(), bo_im.data());
  }

  const Grid& xg = *x_grid;
  std::vector<Complex> out(static_cast<std::size_t>(xg.size()));
  const Complex i(0.0, 1.0);
  for (int k = 0; k < rows; ++k) {
    const Complex ae(ae_re[k], ae_im[k]);
    const Complex bo(bo_re[k], bo_im[k]);
    out[static_cast<std::size_t>(xg.positive(k))] = ae + i * bo;
    out[static_cast<std::size_t>(xg.negative(k))] = ae - i * bo;
  }
  return GridFunction(x_grid, std::move(out));
}

std::vector<std::vector<double>> inverse_even_real_batch(const std::vector<std::vector<double>>& spectra,
                                                         const Grid& lambda_grid, const Grid& x_grid) {
  if (spectra.empty()) return {};
  const auto blocks = kernel_blocks(x_grid, lambda_grid);
  const int rows = blocks->rows;
  const int cols = blocks->cols;
  const int count = static_cast<int>(spectra.size());

  // G(m, s) = 2 w_m S_s(lambda_m), cols x count
  std::vector<double> g(static_cast<std::size_t>(cols) * static_cast<std::size_t>(count));
  for (int s = 0; s < count; ++s) {
    if (static_cast<int>(spectra[static_cast<std::size_t>(s)].size()) != cols)
      throw DomainError("even spectrum must hold one value per positive frequency");
    for (int m = 0; m < cols; ++m)
      g[static_cast<std::size_t>(m) * static_cast<std::size_t>(count) + static_cast<std::size_t>(s)] =
          2.0 * lambda_grid.weight(lambda_grid.positive(m)) * spectra[static_cast<std::size_t>(s)][static_cast<std::size_t>(m)];
  }
  std::vector<double> out(static_cast<std::size_t>(rows) * static_cast<std::size_t>(count));
  cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, rows, count, cols, 1.0, blocks->even.data(), cols, g.data(),
              count, 0.0, out.data(), count);

  std::vector<std::vector<double>> result(static_cast<std::size_t>(count), std::vector<double>(static_cast<std::size_t>(rows)));
  for (int k = 0; k < rows; ++k)
    for (int s = 0; s < count; ++s)
      result[static_cast<std::size_t>(s)][static_cast<std::size_t>(k)] =
          out[static_cast<std::size_t>(k) * static_cast<std::size_t>(count) + static_cast<std::size_t>(s)];
  if (const int n = blocks->origin_nodes; n > 0) {
    for (int s = 0; s < count; ++s) {
      std::vector<double> e(static_cast<std::size_t>(n));
      for (int m = 0; m < n; ++m) e[static_cast<std::size_t>(m)] = 2.0 * spectra[static_cast<std::size_t>(s)][static_cast<std::size_t>(m)];
      add_fix(blocks->inverse_even_fix, n, rows, e.data(), result[static_cast<std::size_t>(s)].data());
    }
  }
  return result;
}

std::vector<std::vector<double>> inverse_with_even_multipliers(const SpectralFunction& spectrum,
                                                               const std::vector<std::vector<double>>& multipliers,
                                                               const GridPtr& x_grid) {
  if (multipliers.empty()) return {};
  const Grid& lg = spectrum.lambda_grid();
  const auto blocks = kernel_blocks(*x_grid, lg);
  const int rows = blocks->rows;
  const int cols = blocks->cols;
  const int count = static_cast<int>(multipliers.size());
  const auto cnt = static_cast<std::size_t>(count);

  // Re f(+x) = A Re(ge) - B Im(go), Re f(-x) = A Re(ge) + B Im(go), with
  // ge = w m (F+ + F-), go = w m (F+ - F-) and m even.
  std::vector<double> ge(static_cast<std::size_t>(cols) * cnt), go(static_cast<std::size_t>(cols) * cnt);
  for (int s = 0; s < count; ++s) {
    const auto& mult = multipliers[static_cast<std::size_t>(s)];
    if (static_cast<int>(mult.size()) != lg.size()) throw DomainError("multiplier size does not match lambda grid");
    for (int m = 0; m < cols; ++m) {
      const double w = lg.weight(lg.positive(m)) * mult[static_cast<std::size_t>(lg.positive(m))];
      const Complex fp = spectrum[lg.positive(m)];
      const Complex fn = spectrum[lg.negative(m)];
      ge[static_cast<std::size_t>(m) * cnt + static_cast<std::size_t>(s)] = w * (fp + fn).real();
      go[static_cast<std::size_t>(m) * cnt + static_cast<std::size_t>(s)] = w * (fp - fn).imag();
    }
  }
  std::vector<double> ae(static_cast<std::size_t>(rows) * cnt), bo(static_cast<std::size_t>(rows) * cnt);
  cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, rows, count, cols, 1.0, blocks->even.data(), cols, ge.data(),
              count, 0.0, ae.data(), count);
  cblas_dgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, rows, count, cols, 1.0, blocks->odd.data(), cols, go.data(),
              count, 0.0, bo.data(), count);

  if (const int n = blocks->origin_nodes; n > 0) {
    std::vector<double> e(static_cast<std::size_t>(n)), o(static_cast<std::size_t>(n));
    std::vector<double> ae_s(static_cast<std::size_t>(rows)), bo_s(static_cast<std::size_t>(rows));
    for (int s = 0; s < count; ++s) {
      const auto& mult = multipliers[static_cast<std::size_t>(s)];
      for (int m = 0; m < n; ++m) {
        const double mm = mult[static_cast<std::size_t>(lg.positive(m))];
        const Complex fp = spectrum[lg.positive(m)];
        const Complex fn = spectrum[lg.negative(m)];
        e[static_cast<std::size_t>(m)] = mm * (fp + fn).real();
        o[static_cast<std::size_t>(m)] = mm * (fp - fn).imag() / lg.node(lg.positive(m));
      }
      std::fill(ae_s.begin(), ae_s.end(), 0.0);
      std::fill(bo_s.begin(), bo_s.end(), 0.0);
      add_fix(blocks->inverse_even_fix, n, rows, e.data(), ae_s.data());
      add_fix(blocks->inverse_odd_fix, n, rows, o.data(), bo_s.data());
      for (int k = 0; k < rows; ++k) {
        ae[static_cast<std::size_t>(k) * cnt + static_cast<std::size_t>(s)] += ae_s[static_cast<std::size_t>(k)];
        bo[static_cast<std::size_t>(k) * cnt + static_cast<std::size_t>(s)] += bo_s[static_cast<std::size_t>(k)];
      }
    }
  }

  const Grid& xg = *x_grid;
  std::vector<std::vector<double>> result(cnt, std::vector<double>(static_cast<std::size_t>(xg.size())));
  for (int k = 0; k < rows; ++k) {
    for (int s = 0; s < count; ++s) {
      const std::size_t at = static_cast<std::size_t>(k) * cnt + static_cast<std::size_t>(s);
      result[static_cast<std::size_t>(s)][static_cast<std::size_t>(xg.positive(k))] = ae[at] - bo[at];
      result[static_cast<std::size_t>(s)][static_cast<std::size_t>(xg.negative(k))] = ae[at] + bo[at];
    }
  }
  return result;
}

double plancherel_defect(const GridFunction& f, const GridPtr& lambda_grid) {
  const double fnorm = std::sqrt(integrate(f.abs_pow(2.0)).real());
  if (!(fnorm > 0.0)) throw DomainError("plancherel defect needs a non-zero function");
  const SpectralFunction spectrum = forward(f, lambda_grid);
  const double snorm = std::sqrt(integrate(spectrum.samples().abs_pow(2.0)).real());
  return std::abs(snorm - fnorm) / fnorm;
}

double plancherel_defect(const GridFunction& f) { return plancherel_defect(f, default_lambda_grid(f.grid())); }

}  // namespace dunkl

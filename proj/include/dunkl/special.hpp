#pragma once

#include <complex>
#include <vector>

namespace dunkl {

class GridFunction;

/// Multiplicity parameter of the rank-one Dunkl setting together with the
/// constants of the weighted measure d mu = c_kappa |x|^{2 kappa + 1} dx.
///
/// kappa must exceed -1/2. The classical value kappa = -1/2 (Lebesgue measure
/// scaled by 1/sqrt(2 pi), Dunkl kernel = exponential) is only admitted when the
/// object is created through classical(), or through for_kappa() which picks the
/// mode automatically.
class DunklParams {
 public:
  explicit DunklParams(double kappa);

  static DunklParams classical();
  /// classical() for kappa == -1/2, the regular constructor otherwise.
  static DunklParams for_kappa(double kappa);

  double kappa() const noexcept { return kappa_; }
  /// (2^{kappa+1} Gamma(kappa+1))^{-1}
  double c_kappa() const noexcept { return c_kappa_; }
  /// [2^{kappa+1} (kappa+1) Gamma(kappa+1)]^{-1}, so that mu(B_r) = b_kappa r^{2 kappa + 2}.
  double b_kappa() const noexcept { return b_kappa_; }
  /// 2 kappa + 1, the exponent of the density.
  double weight_exponent() const noexcept { return 2.0 * kappa_ + 1.0; }
  /// 2 kappa + 2, the homogeneous dimension of mu.
  double dimension() const noexcept { return 2.0 * kappa_ + 2.0; }
  bool is_classical() const noexcept { return kappa_ == -0.5; }

  friend bool operator==(const DunklParams&, const DunklParams&) = default;

 private:
  struct ClassicalTag {};
  DunklParams(double kappa, ClassicalTag);
  void init_constants();

  double kappa_;
  double c_kappa_ = 0.0;
  double b_kappa_ = 0.0;
};

/// Normalized Bessel function j_order(z) = Gamma(order+1) (2/z)^order J_order(z),
/// with j_order(0) = 1. Even in z.
///
/// |z| <= kSeriesCutoff uses the defining power series; larger arguments go
/// through the classical J_order and are renormalized.
double bessel_normalized(double order, double z);

inline constexpr double kSeriesCutoff = 4.0;

/// Direct power-series evaluation. `terms` (if non-null) receives the number
/// of terms summed. Exposed so the truncation rule can be tested.
double bessel_normalized_series(double order, double z, int* terms = nullptr);

/// One extra series term beyond the stopping point, relative to the sum.
double bessel_series_next_term_ratio(double order, double z);

/// E_kappa(i s) = j_kappa(s) + i s / (2 kappa + 2) j_{kappa+1}(s).
std::complex<double> dunkl_kernel(const DunklParams& params, double s);

/// Lambda_kappa f on a symmetric grid: central-difference derivative plus the
/// reflection term (2 kappa + 1)/x * (f(x) - f(-x)) / 2.
GridFunction dunkl_derivative(const DunklParams& params, const GridFunction& f);

/// Tabulated even/odd parts of the Dunkl kernel on [0, z_max], used to fill the
/// transform matrices. Piecewise cubic Hermite interpolation: values and exact
/// derivatives (d/dz j_nu = -z/(2 nu + 2) j_{nu+1}) are stored at the nodes, so
/// the interpolation error is bounded by step^4/384 * max|j^{(4)}|.
class KernelTable {
 public:
  KernelTable(double kappa, double z_max, double step = 1.0 / 128.0);

  double kappa() const noexcept { return kappa_; }
  double z_max() const noexcept { return z_max_; }

  /// j_kappa(z), z >= 0.
  double even(double z) const;
  /// z/(2 kappa + 2) j_{kappa+1}(z), z >= 0 (the imaginary part of E(i z)).
  double odd(double z) const;

 private:
  double interpolate(const std::vector<double>& v, const std::vector<double>& dv, double z) const;

  double kappa_;
  double z_max_;
  double step_;
  std::vector<double> j0_, dj0_, j1_, dj1_;
};

}  // namespace dunkl

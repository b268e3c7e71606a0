#include "dunkl/special.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <limits>

#include "dunkl/error.hpp"
#include "dunkl/grid.hpp"

namespace dunkl {

namespace {

constexpr double kSeriesTolerance = 1e-17;
constexpr int kMaxSeriesTerms = 400;

void check_order(double order) {
  if (!(order > -1.0)) throw DomainError("Bessel order must exceed -1");
}

}  // namespace

DunklParams::DunklParams(double kappa) : kappa_(kappa) {
  if (!std::isfinite(kappa) || !(kappa > -0.5))
    throw DomainError("kappa must be finite and > -1/2 (use DunklParams::classical() for -1/2)");
  init_constants();
}

DunklParams::DunklParams(double kappa, ClassicalTag) : kappa_(kappa) { init_constants(); }

DunklParams DunklParams::classical() { return DunklParams(-0.5, ClassicalTag{}); }

DunklParams DunklParams::for_kappa(double kappa) {
  if (kappa == -0.5) return classical();
  return DunklParams(kappa);
}

void DunklParams::init_constants() {
  c_kappa_ = 1.0 / (std::pow(2.0, kappa_ + 1.0) * std::tgamma(kappa_ + 1.0));
  b_kappa_ = c_kappa_ / (kappa_ + 1.0);
}

double bessel_normalized_series(double order, double z, int* terms) {
  check_order(order);
  if (!std::isfinite(z)) throw DomainError("Bessel argument must be finite");
  const double step = -0.25 * z * z;
  double term = 1.0;
  double sum = 1.0;
  int n = 1;
  for (; n < kMaxSeriesTerms; ++n) {
    term *= step / (static_cast<double>(n) * (static_cast<double>(n) + order));
    sum += term;
    if (std::abs(term) < kSeriesTolerance * std::abs(sum) || term == 0.0) break;
  }
  if (terms) *terms = n + 1;
  return sum;
}

double bessel_series_next_term_ratio(double order, double z) {
  int used = 0;
  const double sum = bessel_normalized_series(order, z, &used);
  // rebuild the last term and take one more step
  const double step = -0.25 * z * z;
  double term = 1.0;
  for (int n = 1; n < used; ++n) term *= step / (n * (n + order));
  const double next = term * step / (used * (used + order));
  return std::abs(next) / std::abs(sum);
}

double bessel_normalized(double order, double z) {
  check_order(order);
  if (!std::isfinite(z)) throw DomainError("Bessel argument must be finite");
  const double az = std::abs(z);
  if (az <= kSeriesCutoff) return bessel_normalized_series(order, az);
  const double scale = std::exp(std::lgamma(order + 1.0) + order * std::log(2.0 / az));
  return scale * boost::math::cyl_bessel_j(order, az);
}

std::complex<double> dunkl_kernel(const DunklParams& params, double s) {
  if (!std::isfinite(s)) throw DomainError("kernel argument must be finite");
  const double k = params.kappa();
  const double re = bessel_normalized(k, s);
  const double im = s / (2.0 * k + 2.0) * bessel_normalized(k + 1.0, s);
  return {re, im};
}

GridFunction dunkl_derivative(const DunklParams& params, const GridFunction& f) {
  const Grid& g = f.grid();
  const int n = g.size();
  if (n < 3) throw DomainError("dunkl_derivative needs at least 3 nodes");
  for (int j = 0; j < n; ++j)
    if (g.node(j) != -g.node(g.mirror(j))) throw DomainError("grid is not symmetric about 0");

  const double h = g.spacing();
  const double coupling = 2.0 * params.kappa() + 1.0;
  std::vector<Complex> out(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Complex deriv;
    if (j == 0)
      deriv = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    else if (j == n - 1)
      deriv = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    else
      deriv = (f[j + 1] - f[j - 1]) / (2.0 * h);

    const double x = g.node(j);
    Complex reflection;
    if (x != 0.0) {
      reflection = coupling / x * 0.5 * (f[j] - f[g.mirror(j)]);
    } else {
      // limit of the quotient: derivative of the odd part at 0
      const Complex odd_next = 0.5 * (f[j + 1] - f[g.mirror(j + 1)]);
      reflection = coupling * odd_next / g.node(j + 1);
    }
    out[static_cast<std::size_t>(j)] = deriv + reflection;
  }
  return GridFunction(f.grid_ptr(), std::move(out));
}

}  // namespace dunkl

#include <cmath>

#include "dunkl/error.hpp"
#include "dunkl/special.hpp"

namespace dunkl {

KernelTable::KernelTable(double kappa, double z_max, double step)
    : kappa_(kappa), z_max_(z_max), step_(step) {
  if (!(z_max > 0.0) || !(step > 0.0)) throw DomainError("kernel table needs z_max > 0 and step > 0");
  const auto count = static_cast<std::size_t>(std::ceil(z_max / step)) + 2;
  j0_.resize(count);
  dj0_.resize(count);
  j1_.resize(count);
  dj1_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double z = static_cast<double>(i) * step;
    const double a = bessel_normalized(kappa, z);
    const double b = bessel_normalized(kappa + 1.0, z);
    const double c = bessel_normalized(kappa + 2.0, z);
    j0_[i] = a;
    dj0_[i] = -z / (2.0 * kappa + 2.0) * b;
    j1_[i] = b;
    dj1_[i] = -z / (2.0 * kappa + 4.0) * c;
  }
}

double KernelTable::interpolate(const std::vector<double>& v, const std::vector<double>& dv, double z) const {
  const double u = z / step_;
  auto i = static_cast<std::size_t>(u);
  if (i + 1 >= v.size()) throw DomainError("kernel table argument beyond z_max");
  const double t = u - static_cast<double>(i);
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2.0 * t3 - 3.0 * t2 + 1.0;
  const double h10 = t3 - 2.0 * t2 + t;
  const double h01 = -2.0 * t3 + 3.0 * t2;
  const double h11 = t3 - t2;
  return h00 * v[i] + h10 * step_ * dv[i] + h01 * v[i + 1] + h11 * step_ * dv[i + 1];
}

double KernelTable::even(double z) const { return interpolate(j0_, dj0_, std::abs(z)); }

double KernelTable::odd(double z) const {
  const double az = std::abs(z);
  const double v = az / (2.0 * kappa_ + 2.0) * interpolate(j1_, dj1_, az);
  return z < 0 ? -v : v;
}

}  // namespace dunkl

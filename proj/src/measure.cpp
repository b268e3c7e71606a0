#include "dunkl/measure.hpp"

#include <cmath>

#include "dunkl/error.hpp"

namespace dunkl {

namespace {

void check_radius(double r) {
  if (!std::isfinite(r) || !(r > 0.0)) throw DomainError("radius must be finite and > 0");
}

// (u + r)^m - (u - r)^m for u > r > 0 without cancellation.
double power_gap(double u, double r, double m) {
  const double t = r / u;
  return std::pow(u, m) * (std::expm1(m * std::log1p(t)) - std::expm1(m * std::log1p(-t)));
}

}  // namespace

DunklBall::DunklBall(double c, double r, Kind k) : center(c), radius(r), kind(k) { check_radius(r); }

bool DunklBall::contains(double y) const noexcept {
  if (kind == Kind::metric_interval) return center - radius < y && y < center + radius;
  const double ay = std::abs(y);
  const double ac = std::abs(center);
  return std::max(0.0, ac - radius) < ay && ay < ac + radius;
}

double DunklBall::measure(const DunklParams& params) const {
  return kind == Kind::metric_interval ? interval_measure(params, center, radius)
                                       : ball_measure(params, center, radius);
}

double measure_antiderivative(const DunklParams& params, double t) {
  const double m = params.dimension();
  const double v = params.c_kappa() * std::pow(std::abs(t), m) / m;
  return t < 0 ? -v : v;
}

double ball_measure_origin(const DunklParams& params, double r) {
  check_radius(r);
  return params.b_kappa() * std::pow(r, params.dimension());
}

double ball_measure(const DunklParams& params, double x, double r) {
  check_radius(r);
  const double ax = std::abs(x);
  const double m = params.dimension();
  const double scale = params.c_kappa() / (params.kappa() + 1.0);
  if (ax > r) return scale * power_gap(ax, r, m);
  return scale * std::pow(ax + r, m);
}

double interval_measure(const DunklParams& params, double x, double r) {
  check_radius(r);
  const double ax = std::abs(x);
  const double m = params.dimension();
  const double scale = params.c_kappa() / m;
  if (ax > r) return scale * power_gap(ax, r, m);
  return scale * (std::pow(r - ax, m) + std::pow(r + ax, m));
}

double doubling_ratio(const DunklParams& params, double x, double r) {
  check_radius(r);
  return interval_measure(params, x, 2.0 * r) / interval_measure(params, x, r);
}

double segment_measure(const DunklParams& params, double a, double b) {
  if (b <= a) return 0.0;
  return measure_antiderivative(params, b) - measure_antiderivative(params, a);
}

double annulus_measure(const DunklParams& params, double a, double b) {
  if (b <= a) return 0.0;
  const double m = params.dimension();
  return 2.0 * params.c_kappa() / m * (std::pow(b, m) - std::pow(a, m));
}

}  // namespace dunkl

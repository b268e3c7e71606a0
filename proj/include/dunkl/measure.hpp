#pragma once

#include "dunkl/special.hpp"

namespace dunkl {

/// Either the Dunkl ball B(x, r) = {max(0, |x| - r) < |y| < |x| + r} (an
/// annulus in |y|, the interval (-r, r) when x = 0) or the metric interval
/// I(x, r) = (x - r, x + r).
struct DunklBall {
  enum class Kind { dunkl_ball, metric_interval };

  DunklBall(double center, double radius, Kind kind);

  double center;
  double radius;
  Kind kind;

  bool contains(double y) const noexcept;
  double measure(const DunklParams& params) const;
};

/// mu(B_r) = b_kappa r^{2 kappa + 2}.
double ball_measure_origin(const DunklParams& params, double r);

/// mu(B(x, r)) from the closed forms (case split |x| > r / |x| <= r).
double ball_measure(const DunklParams& params, double x, double r);

/// mu(I(x, r)) = c_kappa * integral_{x-r}^{x+r} |t|^{2 kappa + 1} dt.
double interval_measure(const DunklParams& params, double x, double r);

/// mu(I(x, 2r)) / mu(I(x, r)).
double doubling_ratio(const DunklParams& params, double x, double r);

/// mu((a, b)) for a <= b, any signs.
double segment_measure(const DunklParams& params, double a, double b);

/// mu({a < |y| < b}) for 0 <= a <= b.
double annulus_measure(const DunklParams& params, double a, double b);

/// c_kappa * sign(t) |t|^{2 kappa + 2} / (2 kappa + 2), an antiderivative of the density.
double measure_antiderivative(const DunklParams& params, double t);

}  // namespace dunkl

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dunkl/error.hpp"
#include "dunkl/measure.hpp"

using namespace dunkl;

namespace {

// midpoint rule for c |t|^{2k+1} over (a, b), 10^6 cells
double quad(const DunklParams& p, double a, double b) {
  const int n = 1000000;
  const double h = (b - a) / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += std::pow(std::abs(a + (i + 0.5) * h), p.weight_exponent());
  return p.c_kappa() * s * h;
}

}  // namespace

TEST_CASE("origin ball closed forms") {
  CHECK(ball_measure_origin(DunklParams(0.0), 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(ball_measure_origin(DunklParams(0.0), 2.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(ball_measure_origin(DunklParams::classical(), 1.0) ==
        doctest::Approx(std::sqrt(2.0 / std::numbers::pi)).epsilon(1e-15));
  CHECK_THROWS_AS(ball_measure_origin(DunklParams(0.0), 0.0), DomainError);
}

TEST_CASE("ball and interval closed forms") {
  const DunklParams p(0.0);
  CHECK(ball_measure(p, 2.0, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(ball_measure(p, 0.5, 1.0) == doctest::Approx(1.125).epsilon(1e-14));
  CHECK(interval_measure(p, 2.0, 1.0) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(interval_measure(p, 0.5, 1.0) == doctest::Approx(0.625).epsilon(1e-14));
  for (double k : {0.0, 0.7, 2.0}) {
    const DunklParams q(k);
    CHECK(ball_measure(q, 0.0, 1.3) == doctest::Approx(ball_measure_origin(q, 1.3)).epsilon(1e-14));
    CHECK(interval_measure(q, 0.0, 1.3) == doctest::Approx(ball_measure_origin(q, 1.3)).epsilon(1e-14));
    CHECK(interval_measure(q, -0.8, 0.5) == interval_measure(q, 0.8, 0.5));
    CHECK(ball_measure(q, -0.8, 0.5) == ball_measure(q, 0.8, 0.5));
  }
  CHECK_THROWS_AS(ball_measure(p, 1.0, -1.0), DomainError);
  CHECK_THROWS_AS(interval_measure(p, 1.0, 0.0), DomainError);
}

TEST_CASE("DunklBall sets") {
  const DunklParams p(0.5);
  const DunklBall b(2.0, 0.5, DunklBall::Kind::dunkl_ball);
  CHECK(b.contains(2.2));
  CHECK(b.contains(-2.2));
  CHECK_FALSE(b.contains(1.0));
  const DunklBall i(2.0, 0.5, DunklBall::Kind::metric_interval);
  CHECK_FALSE(i.contains(-2.2));
  CHECK(b.measure(p) == doctest::Approx(2.0 * i.measure(p)).epsilon(1e-14));
  const DunklBall o(0.0, 1.0, DunklBall::Kind::dunkl_ball);
  CHECK(o.contains(-0.99));
  CHECK_FALSE(o.contains(1.01));
  CHECK_THROWS_AS(DunklBall(0.0, 0.0, DunklBall::Kind::dunkl_ball), DomainError);
}

TEST_CASE("doubling ratio") {
  CHECK(doubling_ratio(DunklParams(0.0), 0.0, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK(doubling_ratio(DunklParams(0.0), 100.0, 1.0) == doctest::Approx(2.0).epsilon(5e-3));
  for (double x : {0.0, 3.0, -17.0}) CHECK(doubling_ratio(DunklParams::classical(), x, 0.7) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("ball/interval lemmas, doubling and reverse doubling over random draws") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> kd(-0.5, 3.0), xd(-10.0, 10.0), rd(0.01, 10.0), rho(1.0, 8.0);
  for (int i = 0; i < 10000; ++i) {
    const DunklParams p = DunklParams::for_kappa(kd(rng));
    const double x = xd(rng), r = rd(rng);
    const double b = ball_measure(p, x, r), in = interval_measure(p, x, r);
    CHECK(b <= 2.0 * in * (1 + 1e-12));
    if (std::abs(x) >= r) CHECK(b == doctest::Approx(2.0 * in).epsilon(1e-12));
    CHECK(interval_measure(p, 0.0, r) <= 2.0 * in * (1 + 1e-12));
    CHECK(doubling_ratio(p, x, r) <= std::pow(2.0, p.dimension()) + 1e-9);
    // exponent 1 with constant 1 needs a convex weight (kappa >= 0); below that the
    // infimum is about 0.928, near kappa = -0.3
    const double s = rho(rng), c = p.kappa() >= 0.0 ? 1.0 - 1e-9 : 0.9;
    CHECK(interval_measure(p, x, s * r) / in >= c * s);
  }
}

TEST_CASE("reverse doubling constant drops below 1 for negative kappa") {
  const DunklParams p = DunklParams::for_kappa(-0.25);
  // I(10, 10) = [0, 20] against a thin interval at 10
  CHECK(interval_measure(p, 10.0, 10.0) / (1000.0 * interval_measure(p, 10.0, 0.01)) < 0.95);
}

TEST_CASE("closed forms agree with quadrature") {
  for (double k : {-0.5, 0.0, 0.5, 1.5}) {
    const DunklParams p = DunklParams::for_kappa(k);
    CHECK(segment_measure(p, -0.7, 2.3) == doctest::Approx(quad(p, -0.7, 2.3)).epsilon(1e-8));
    CHECK(interval_measure(p, 1.5, 0.4) == doctest::Approx(quad(p, 1.1, 1.9)).epsilon(1e-8));
    CHECK(annulus_measure(p, 0.5, 1.25) == doctest::Approx(2.0 * quad(p, 0.5, 1.25)).epsilon(1e-8));
  }
}

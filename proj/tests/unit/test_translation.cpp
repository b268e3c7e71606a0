#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dunkl/error.hpp"
#include "dunkl/measure.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/translation.hpp"

using namespace dunkl;

namespace {

GridPtr grid(double k, int n = 1024, double L = 16.0) { return make_grid(DunklParams::for_kappa(k), L, n); }

}  // namespace

TEST_CASE("identity and classical shift") {
  for (double k : {-0.5, 0.5, 1.5}) {
    const auto f = sample_family("bump", {1.0, 2.0}, grid(k, 2048));
    CHECK((translate(f, 0.0) - f).sup_norm() < 5e-4);
  }
  const auto g = grid(-0.5, 2048);
  const auto t = translate(sample_family("gaussian", {0.5}, g), 1.0);
  double err = 0.0;
  for (int j = 0; j < g->size(); ++j) err = std::max(err, std::abs(t[j].real() - std::exp(-0.5 * std::pow(g->node(j) + 1.0, 2))));
  CHECK(err < 1e-4);
  CHECK_THROWS_AS(translate(sample_family("gaussian", {0.5}, g), 17.0), DomainError);
}

TEST_CASE("mass preservation") {
  for (double k : {0.0, 0.5, 1.5}) {
    const auto g = grid(k, 2048);
    const auto f = sample_family("bump", {1.0, 2.0}, g);
    const double m = integrate(f).real();
    for (double y : {-8.0, -1.3, 2.0, 8.0}) CHECK(std::abs(integrate(translate(f, y)).real() - m) < 1e-4 * std::abs(m));
  }
}

TEST_CASE("symmetry on node pairs") {
  const auto g = grid(0.5, 1024);
  const auto f = sample_family("gaussian", {0.5}, g);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick(g->size() / 4, 3 * g->size() / 4);
  for (int i = 0; i < 50; ++i) {
    const int a = pick(rng), b = pick(rng);
    const double lhs = translate(f, g->node(a))[b].real(), rhs = translate(f, g->node(b))[a].real();
    CHECK(std::abs(lhs - rhs) < 1e-4 * f.sup_norm());
  }
}

TEST_CASE("contraction with constant 4") {
  for (double k : {0.0, 1.5}) {
    const auto g = grid(k, 1024);
    for (const auto& m : default_family()) {
      const auto f = sample_family(m, g);
      for (double y : {0.7, -3.0})
        for (const auto p : {Exponent(1.0), Exponent(2.0), Exponent(4.0), Exponent::infinity()})
          CHECK(lp_norm(translate(f, y).real(), p) <= 4.0 * 1.01 * lp_norm(f, p));
    }
  }
}

TEST_CASE("translated indicators") {
  const auto p = DunklParams(0.5);
  const auto g = make_grid(p, 16.0, 2048);
  const double r = 1.0;
  // y = 0 gives the indicator itself up to the boundary cells
  const auto t0 = translate_indicator(p, 0.0, r, g);
  const auto chi = sample_family("indicator_ball", {r}, g);
  int bad = 0;
  for (int j = 0; j < g->size(); ++j)
    if (std::abs(t0[j].real() - chi[j].real()) > 0.1 && std::abs(std::abs(g->node(j)) - r) > 3 * g->spacing()) ++bad;
  CHECK(bad == 0);
  for (double y : {0.4, 2.5, -5.0}) {
    const auto t = translate_indicator(p, y, r, g);
    for (int j = 0; j < g->size(); ++j) {
      const double v = t[j].real(), ax = std::abs(g->node(j));
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      if (ax > std::abs(y) + r || ax < std::max(0.0, std::abs(y) - r)) CHECK(v == 0.0);
    }
    const double mu = ball_measure_origin(p, r);
    CHECK(integrate(translate_indicator_raw(y, r, g)).real() == doctest::Approx(mu).epsilon(1e-3));
  }
}

TEST_CASE("indicator bank matches direct translates") {
  const auto p = DunklParams(0.5);
  const auto g = make_grid(p, 8.0, 512);
  const IndicatorTranslates bank(g, 1.0);
  for (int y : {100, 256, 300, 480}) {
    const auto direct = translate_indicator(p, g->node(y), 1.0, g);
    CHECK((bank.row(y) - direct).sup_norm() < 1e-9);
  }
}

TEST_CASE("convolution") {
  const auto g = grid(-0.5, 2048);
  const auto chi = sample_family("indicator_ball", {1.0}, g);
  const auto c = convolve(chi, chi);
  // triangle of height 2 / sqrt(2 pi) at 0
  CHECK(c[g->positive(0)].real() == doctest::Approx(2.0 / std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-2));
  const auto h = make_grid(DunklParams(0.5), 16.0, 1024);
  const auto f = sample_family("gaussian", {0.5}, h), b = sample_family("bump", {1.0, 2.0}, h);
  CHECK((convolve(f, b) - convolve(b, f)).sup_norm() < 1e-10 * f.sup_norm() * b.sup_norm());
  CHECK(convolve(f, GridFunction::zeros(h)).sup_norm() == 0.0);
  CHECK_THROWS_AS(convolve(f, sample_family("gaussian", {0.5}, g)), GridMismatch);
  // tau_y (f * g) = tau_y f * g
  CHECK((translate(convolve(f, b), 1.5) - convolve(translate(f, 1.5), b)).sup_norm() < 1e-3 * convolve(f, b).sup_norm());
}

TEST_CASE("convolution with balls matches convolve") {
  const auto h = make_grid(DunklParams(1.0), 8.0, 512);
  const auto f = sample_family("gaussian", {1.0}, h);
  const auto batch = convolve_with_balls(f, {0.5, 2.0});
  const auto direct = convolve(f, sample_family("indicator_ball", {2.0}, h));
  // sampled indicator vs closed-form spectrum: agree up to the boundary-cell error
  double worst = 0.0;
  for (int j = 0; j < h->size(); ++j) worst = std::max(worst, std::abs(batch[1][static_cast<std::size_t>(j)] - direct[j].real()));
  CHECK(worst < 2e-2 * direct.sup_norm());
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dunkl/error.hpp"
#include "dunkl/maximal.hpp"
#include "dunkl/measure.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/translation.hpp"

using namespace dunkl;

namespace {

GridPtr grid(double k, int n = 1024, double L = 16.0) { return make_grid(DunklParams::for_kappa(k), L, n); }

}  // namespace

TEST_CASE("cell integrals") {
  const auto g = grid(0.5, 256, 4.0);
  const CellIntegrals ci(*g, std::vector<double>(256, 1.0));
  CHECK(ci.over_segment(-1.3, 0.7) == doctest::Approx(segment_measure(g->params(), -1.3, 0.7)).epsilon(1e-13));
  CHECK(ci.over_annulus(0.5, 2.0) == doctest::Approx(annulus_measure(g->params(), 0.5, 2.0)).epsilon(1e-13));
  CHECK(ci.over_segment(3.0, 9.0) == doctest::Approx(segment_measure(g->params(), 3.0, 4.0)).epsilon(1e-13));
}

TEST_CASE("indicator maximal at its centre") {
  const auto g = grid(0.5, 1024);
  const auto r = default_r_grid(*g);
  const auto chi = sample_family("indicator_ball", {1.0}, g);
  for (const auto& m : {dunkl_maximal(chi, r), centered_maximal(chi, r), interval_maximal(chi, r)})
    CHECK(m[g->positive(0)].real() == doctest::Approx(1.0).epsilon(1e-2));
  CHECK_THROWS_AS(interval_maximal(chi, {}), DomainError);
}

TEST_CASE("maximal functions dominate |f| averages and are monotone") {
  const auto g = grid(0.0, 512);
  const auto r = default_r_grid(*g);
  const auto f = sample_family("trig_gauss", {1}, g);
  auto small = f.abs();
  for (auto& v : small) v *= 0.5;
  const GridFunction fs(g, small);
  const auto clipped = clipped_nodes(*g, r);
  for (auto op : {&dunkl_maximal, &centered_maximal, &interval_maximal}) {
    const auto mf = op(f, r), ms = op(fs, r);
    for (int j = 0; j < g->size(); ++j) {
      CHECK(ms[j].real() <= mf[j].real() + 1e-10);
      CHECK(mf[j].real() >= 0.0);
    }
  }
  int count = 0;
  for (bool c : clipped) count += c;
  CHECK(count > 0);
  CHECK(count < g->size());
}

TEST_CASE("classical dunkl maximal equals the sliding window maximal") {
  const auto g = grid(-0.5, 2048);
  const auto r = default_r_grid(*g);
  const auto f = sample_family("gaussian", {0.5}, g);
  const auto m = dunkl_maximal(f, r);
  const auto c = interval_maximal(f, r);
  const auto clipped = clipped_nodes(*g, r);
  for (int j = 0; j < g->size(); ++j)
    if (!clipped[static_cast<std::size_t>(j)]) CHECK(m[j].real() == doctest::Approx(c[j].real()).epsilon(2e-2));
}

TEST_CASE("balls and intervals coincide at kappa = -1/2 away from 0") {
  const auto g = grid(-0.5, 1024);
  const auto r = std::vector<double>{0.25, 0.5};
  const auto f = sample_family("bump", {4.0, 1.0}, g);
  const auto a = centered_maximal(f, r), b = interval_maximal(f, r);
  for (int j = 0; j < g->size(); ++j)
    if (g->node(j) > 1.0 && g->node(j) < 8.0) CHECK(a[j].real() <= b[j].real() + 1e-12);
}

TEST_CASE("interval maximal of a shifted interval") {
  // M_mu chi_{I(y,r)}(x) <= C mu(I(y,r)) / mu(I(y,|x-y|)) for |x - y| > 2r
  const auto g = grid(1.0, 1024);
  const auto rg = default_r_grid(*g);
  std::vector<double> v(1024);
  for (int j = 0; j < 1024; ++j) v[static_cast<std::size_t>(j)] = std::abs(g->node(j) - 2.0) < 0.5;
  const auto m = interval_maximal(GridFunction(g, v), rg);
  const auto clipped = clipped_nodes(*g, rg);
  double c = 0.0;
  for (int j = 0; j < 1024; ++j) {
    const double d = std::abs(g->node(j) - 2.0);
    if (clipped[static_cast<std::size_t>(j)] || d <= 1.0) continue;
    c = std::max(c, m[j].real() * interval_measure(g->params(), 2.0, d) / interval_measure(g->params(), 2.0, 0.5));
  }
  CHECK(std::isfinite(c));
  CHECK(c < 100.0);
}

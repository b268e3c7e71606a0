#include <doctest.h>

#include <cmath>

#include "dunkl/grid.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/transform.hpp"

using namespace dunkl;

namespace {

GridPtr grid(double k, int n = 1024, double L = 16.0) { return make_grid(DunklParams::for_kappa(k), L, n); }

}  // namespace

TEST_CASE("lambda grid") {
  const auto g = grid(0.5, 1024);
  const auto lg = default_lambda_grid(*g);
  CHECK(lg->size() == 1024);
  CHECK(lg->params() == g->params());
  CHECK(lg->spacing() == doctest::Approx(std::numbers::pi / (2.0 * 16.0)).epsilon(1e-14));
}

TEST_CASE("classical gaussian is its own transform") {
  const auto g = grid(-0.5, 4096);
  const auto lg = default_lambda_grid(*g);
  const auto F = forward(sample_family("gaussian", {0.5}, g), lg);
  double err = 0.0;
  for (int j = 0; j < lg->size(); ++j) err = std::max(err, std::abs(F[j] - std::exp(-0.5 * lg->node(j) * lg->node(j))));
  CHECK(err < 1e-6);
}

TEST_CASE("gaussian fixed point for every kappa") {
  for (double k : {0.0, 0.5, 1.5}) {
    const auto g = grid(k, 2048);
    const auto lg = default_lambda_grid(*g);
    const auto F = forward(sample_family("gaussian", {0.5}, g), lg);
    double err = 0.0;
    for (int j = 0; j < lg->size(); ++j) err = std::max(err, std::abs(F[j] - std::exp(-0.5 * lg->node(j) * lg->node(j))));
    CHECK(err < 1e-3);
  }
}

TEST_CASE("zero, linearity and parity") {
  const auto g = grid(0.5);
  const auto f = sample_family("gaussian", {0.25}, g), h = sample_family("trig_gauss", {2}, g);
  CHECK(forward(GridFunction::zeros(g)).samples().sup_norm() == 0.0);
  CHECK(inverse(forward(GridFunction::zeros(g)), g).sup_norm() == 0.0);
  const auto lhs = forward(f * Complex(2.0) + h * Complex(-0.5)).samples();
  const auto rhs = forward(f).samples() * Complex(2.0) + forward(h).samples() * Complex(-0.5);
  CHECK((lhs - rhs).sup_norm() < 1e-12 * rhs.sup_norm());

  const auto Fe = forward(f).samples();
  CHECK(Fe.max_imag() < 1e-10 * Fe.sup_norm());
  for (int j = 0; j < Fe.size(); ++j) CHECK(Fe[j] == Fe[Fe.grid().mirror(j)]);

  std::vector<double> odd;
  for (double x : g->nodes()) odd.push_back(x * std::exp(-x * x));
  const auto Fo = forward(GridFunction(g, odd)).samples();
  double re = 0.0;
  for (int j = 0; j < Fo.size(); ++j) {
    re = std::max(re, std::abs(Fo[j].real()));
    CHECK(Fo[j].imag() == doctest::Approx(-Fo[Fo.grid().mirror(j)].imag()));
  }
  CHECK(re < 1e-10 * Fo.sup_norm());
}

TEST_CASE("transform near zero frequency is the integral") {
  const auto g = grid(1.0);
  const auto lg = default_lambda_grid(*g);
  const auto f = sample_family("bump", {1.0, 2.0}, g);
  const auto F = forward(f, lg);
  CHECK(std::abs(F[lg->positive(0)] - integrate(f)) < lg->node(lg->positive(0)) * 5.0);
}

TEST_CASE("round trips") {
  for (double k : {-0.5, 0.0, 0.5, 1.0}) {
    const auto g = grid(k, 2048);
    const auto f = sample_family("gaussian", {0.5}, g);
    CHECK((inverse(forward(f), g) - f).sup_norm() < 1e-4);
  }
  const auto g = grid(0.5, 2048);
  const auto b = sample_family("bump", {1.0, 2.0}, g);
  CHECK((inverse(forward(b), g) - b).sup_norm() < 1e-4);
}

TEST_CASE("plancherel") {
  CHECK(plancherel_defect(sample_family("gaussian", {0.5}, grid(-0.5, 4096))) < 1e-6);
  CHECK(plancherel_defect(sample_family("gaussian", {0.5}, grid(1.0, 4096))) < 1e-4);
  CHECK(plancherel_defect(sample_family("indicator_ball", {1.0}, grid(0.5, 4096))) < 1e-2);
  CHECK_THROWS(plancherel_defect(GridFunction::zeros(grid(0.5))));
  // indicator defect decreases under refinement
  CHECK(plancherel_defect(sample_family("indicator_ball", {1.0}, grid(0.5, 2048))) >
        plancherel_defect(sample_family("indicator_ball", {1.0}, grid(0.5, 4096))));
}

TEST_CASE("batched even inverse matches inverse") {
  const auto g = grid(0.5, 512);
  const auto lg = default_lambda_grid(*g);
  std::vector<double> spec(static_cast<std::size_t>(lg->half_size()));
  std::vector<Complex> full(static_cast<std::size_t>(lg->size()));
  for (int m = 0; m < lg->half_size(); ++m) {
    const double l = lg->node(lg->positive(m));
    spec[static_cast<std::size_t>(m)] = std::exp(-l * l / 3.0);
    full[static_cast<std::size_t>(lg->positive(m))] = full[static_cast<std::size_t>(lg->negative(m))] = spec[static_cast<std::size_t>(m)];
  }
  const auto batch = inverse_even_real_batch({spec}, *lg, *g);
  const auto ref = inverse(SpectralFunction(lg, full), g);
  for (int k = 0; k < g->half_size(); ++k)
    CHECK(batch[0][static_cast<std::size_t>(k)] == doctest::Approx(ref[g->positive(k)].real()).epsilon(1e-12).scale(1.0));
}

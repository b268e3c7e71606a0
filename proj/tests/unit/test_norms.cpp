#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dunkl/error.hpp"
#include "dunkl/measure.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/translation.hpp"

using namespace dunkl;

namespace {

GridPtr grid(double k, int n = 1024, double L = 16.0) { return make_grid(DunklParams::for_kappa(k), L, n); }
GridFunction ones(const GridPtr& g) { return GridFunction(g, std::vector<double>(static_cast<std::size_t>(g->size()), 1.0)); }
const Exponent kInf = Exponent::infinity();

}  // namespace

TEST_CASE("exponents") {
  CHECK(Exponent::parse("inf").is_infinite());
  CHECK(Exponent::parse("infinity").is_infinite());
  CHECK(Exponent::parse("1.5").value() == 1.5);
  CHECK(Exponent::parse("2").str() == "2");
  CHECK(kInf.reciprocal() == 0.0);
  CHECK(Exponent(2.0) < kInf);
  CHECK_THROWS_AS(Exponent(0.5), DomainError);
  CHECK_THROWS_AS(Exponent::parse("abc"), DomainError);
  CHECK_THROWS_AS(kInf.value(), DomainError);
}

TEST_CASE("radius grids") {
  const auto g = grid(0.5, 1024);
  const auto r = default_r_grid(*g);
  CHECK(r.front() == doctest::Approx(8 * g->spacing()));
  CHECK(r.back() <= 8.0 + 1e-12);
  for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] / r[i - 1] == doctest::Approx(std::sqrt(2.0)));
  NormSpec bad{Exponent(4.0), Exponent(8.0), Exponent(2.0), r};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  NormSpec empty{Exponent(1.0), Exponent(8.0), Exponent(2.0), {}};
  CHECK_THROWS_AS(empty.validate(), DomainError);
}

TEST_CASE("lebesgue and weak norms") {
  const auto g1 = grid(0.0, 1024, 1.0);
  CHECK(lp_norm(ones(g1), Exponent(2.0)) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-6));
  CHECK(lp_norm(GridFunction::zeros(g1), Exponent(3.0)) == 0.0);
  const auto g4 = grid(0.0, 1024, 4.0);
  const auto chi = sample_family("indicator_ball", {1.0}, g4);
  CHECK(lp_norm(chi, Exponent(1.0)) == doctest::Approx(0.5).epsilon(1e-2));
  CHECK(lp_norm(chi * Complex(-3.0), kInf) == 3.0);
  CHECK(weak_l1_norm(chi) == doctest::Approx(0.5).epsilon(1e-2));
  CHECK(weak_l1_norm(chi * Complex(2.0)) == doctest::Approx(1.0).epsilon(2e-2));
  CHECK(weak_l1_norm(GridFunction::zeros(g4)) == 0.0);
  // weak <= strong L^1
  for (const auto& m : default_family()) {
    const auto f = sample_family(m, g4);
    CHECK(weak_l1_norm(f) <= lp_norm(f, Exponent(1.0)) * (1 + 1e-12));
  }
}

TEST_CASE("weak L1 by brute force") {
  const auto g = grid(0.5, 64, 4.0);
  const auto f = sample_family("trig_gauss", {3}, g);
  const auto a = f.abs();
  double best = 0.0;
  for (double t : a) {
    double m = 0.0;
    for (int j = 0; j < g->size(); ++j)
      if (a[static_cast<std::size_t>(j)] >= t) m += g->weight(j);  // sup from below includes ties
    best = std::max(best, t * m);
  }
  CHECK(weak_l1_norm(f) == doctest::Approx(best).epsilon(1e-13));
}

TEST_CASE("amalgam norms") {
  const auto g = grid(0.0, 1024, 16.0);
  // u(y) = mu(B_1)^{1/2} away from the boundary
  const auto c = amalgam_windows(ones(g), Exponent(2.0), {1.0});
  CHECK(c[0][static_cast<std::size_t>(g->positive(10))] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-2));
  CHECK(amalgam_norm_r(GridFunction::zeros(g), Exponent(2.0), Exponent(4.0), 1.0) == 0.0);
  CHECK_THROWS_AS(amalgam_norm_r(ones(g), Exponent(2.0), Exponent(4.0), 9.0), DomainError);
  for (double k : {0.0, 0.5}) {
    const auto h = grid(k, 1024);
    const auto f = sample_family("gaussian", {0.5}, h);
    for (double q : {1.0, 2.0, 3.0}) {
      const double mu = ball_measure_origin(h->params(), 1.0);
      CHECK(amalgam_norm_r(f, Exponent(q), Exponent(q), 1.0) ==
            doctest::Approx(std::pow(mu, 1.0 / q) * lp_norm(f, Exponent(q))).epsilon(2e-2));
    }
    // (L^inf, L^inf) = L^inf
    for (const auto& m : default_family()) {
      const auto fm = sample_family(m, h);
      CHECK(amalgam_norm_r(fm, kInf, kInf, 1.0) == doctest::Approx(fm.sup_norm()).epsilon(1e-6));
    }
  }
}

TEST_CASE("norm axioms") {
  const auto g = grid(0.5, 512);
  const auto f = sample_family("trig_gauss", {1}, g), h = sample_family("bump", {1.0, 2.0}, g);
  const NormSpec spec{Exponent(2.0), Exponent(8.0), Exponent(4.0), default_r_grid(*g)};
  CHECK(fofana_norm(f * Complex(-2.5), spec) == doctest::Approx(2.5 * fofana_norm(f, spec)).epsilon(1e-10));
  CHECK(fofana_norm(f + h, spec) <= (fofana_norm(f, spec) + fofana_norm(h, spec)) * (1 + 1e-8));
  CHECK(fofana_norm(GridFunction::zeros(g), spec) == 0.0);
  CHECK(fofana_norm(h, spec) > 0.0);
  CHECK(amalgam_norm_r(f + h, Exponent(1.0), Exponent(2.0), 1.0) <=
        (amalgam_norm_r(f, Exponent(1.0), Exponent(2.0), 1.0) + amalgam_norm_r(h, Exponent(1.0), Exponent(2.0), 1.0)) * (1 + 1e-8));
}

TEST_CASE("fofana profile and embeddings") {
  const auto g = grid(0.5, 1024);
  const auto r = default_r_grid(*g);
  for (const auto& m : default_family()) {
    const auto f = sample_family(m, g);
    const NormSpec s{Exponent(2.0), Exponent(8.0), Exponent(4.0), r};
    const auto prof = fofana_profile(f, s);
    CHECK(prof.size() == r.size());
    CHECK(fofana_norm(f, s) == *std::max_element(prof.begin(), prof.end()));
    CHECK(fofana_norm(f, s) <= std::sqrt(2.0) * lp_norm(f, Exponent(4.0)) * 1.01);
    // q monotonicity
    const NormSpec s1{Exponent(1.0), Exponent(8.0), Exponent(4.0), r};
    CHECK(fofana_norm(f, s1) <= fofana_norm(f, s) * 1.01);
  }
}

TEST_CASE("classical fofana norm of an indicator") {
  // kappa = -1/2: tau is the shift, so u(y) = |(y - r, y + r) cap (-1, 1)| / sqrt(2 pi)
  const auto g = grid(-0.5, 2048);
  const auto chi = sample_family("indicator_ball", {1.0}, g);
  const auto r = default_r_grid(*g);
  const double c = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  double best = 0.0;
  for (double rr : r) {
    const double mu = 2.0 * rr * c;
    // sup_y of the mass captured by a window of radius rr
    best = std::max(best, std::pow(mu, 0.5 - 1.0) * std::min(2.0 * rr, 2.0) * c);
  }
  const NormSpec s{Exponent(1.0), kInf, Exponent(2.0), r};
  CHECK(fofana_norm(chi, s) == doctest::Approx(best).epsilon(1e-2));
}

TEST_CASE("weak fofana") {
  const auto g = grid(0.5, 256, 8.0);
  const auto r = std::vector<double>{0.5, 1.0, 2.0};
  const auto chi = sample_family("indicator_ball", {1.0}, g);
  CHECK(weak_fofana_norm(GridFunction::zeros(g), Exponent(4.0), Exponent(2.0), r) == 0.0);
  const NormSpec s{Exponent(1.0), Exponent(4.0), Exponent(2.0), r};
  for (const auto& m : {FamilyMember::parse("gaussian(0.5)"), FamilyMember::parse("indicator_ball(1)")}) {
    const auto f = sample_family(m, g);
    CHECK(weak_fofana_norm(f, Exponent(4.0), Exponent(2.0), r) <= fofana_norm(f, s) * 1.02);
  }
  // indicator: every window is bounded by mu(B_1)
  for (const auto& w : weak_windows(chi, 2.0)) CHECK(w <= ball_measure_origin(g->params(), 1.0) * (1 + 1e-2));
  // from windows == direct
  std::vector<std::vector<double>> per_r;
  for (double rr : r) per_r.push_back(weak_windows(chi, rr));
  CHECK(weak_fofana_from_windows(per_r, *g, Exponent(4.0), Exponent(2.0), r) ==
        doctest::Approx(weak_fofana_norm(chi, Exponent(4.0), Exponent(2.0), r)).epsilon(1e-14));
  CHECK_THROWS_AS(weak_fofana_norm(chi, Exponent(2.0), Exponent(4.0), r), DomainError);
}

TEST_CASE("interval norms") {
  const auto g = grid(0.0, 1024, 8.0);
  // q = 1, p = inf at r = 1 is the largest interval mass; at y = 0 it is mu(I(0,1)) = 1/2
  CHECK(interval_amalgam_norm_r(ones(g), Exponent(1.0), kInf, 1.0) >= 0.5);
  // alpha = inf: mu(I)^{-1} * mu(I) in every unclipped window
  CHECK(interval_fofana_term(ones(g), Exponent(1.0), kInf, kInf, 1.0) == doctest::Approx(1.0).epsilon(1e-2));
  CHECK(interval_fofana_norm(GridFunction::zeros(g), NormSpec{Exponent(2.0), Exponent(4.0), Exponent(2.0), {1.0}}) == 0.0);
  // equality with the translation norm at kappa = -1/2
  const auto h = grid(-0.5, 1024);
  const NormSpec s{Exponent(2.0), Exponent(8.0), Exponent(4.0), default_r_grid(*h)};
  for (const auto& m : default_family()) {
    const auto f = sample_family(m, h);
    CHECK(interval_fofana_norm(f, s) == doctest::Approx(fofana_norm(f, s)).epsilon(2e-2));
  }
}

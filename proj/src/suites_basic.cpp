// Kernel, measure, transform, translation and convolution suites.

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dunkl/maximal.hpp"
#include "dunkl/measure.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/transform.hpp"
#include "dunkl/translation.hpp"
#include "verify_internal.hpp"

namespace dunkl::detail {

namespace {

bool is_smooth(const FamilyMember& m) {
  return m.family == Family::gaussian || m.family == Family::bump || m.family == Family::trig_gauss;
}

int nearest_node(const Grid& g, double x) {
  int best = 0;
  for (int j = 1; j < g.size(); ++j)
    if (std::abs(g.node(j) - x) < std::abs(g.node(best) - x)) best = j;
  return best;
}

// Midpoint rule with n nodes for the density over (a, b), split at 0.
double quadrature_measure(const DunklParams& params, double a, double b, int n) {
  auto piece = [&](double lo, double hi) {
    if (!(hi > lo)) return 0.0;
    const double h = (hi - lo) / n;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += std::pow(std::abs(lo + (i + 0.5) * h), params.weight_exponent());
    return params.c_kappa() * sum * h;
  };
  if (a < 0.0 && b > 0.0) return piece(a, 0.0) + piece(0.0, b);
  return piece(a, b);
}

}  // namespace

void suite_kernel(Context& ctx, CaseSink& sink) {
  auto rng = ctx.rng("kernel");
  double worst = 0.0;
  double worst_kappa = 0.0, worst_s = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double kappa = uniform(rng, -0.5, 3.0);
    const double s = i % 4 == 0 ? uniform(rng, -500.0, 500.0) : uniform(rng, -30.0, 30.0);
    const double m = std::abs(dunkl_kernel(DunklParams::for_kappa(kappa), s));
    if (m > worst) {
      worst = m;
      worst_kappa = kappa;
      worst_s = s;
    }
  }
  sink.inequality("kernel_modulus_bound", "max |E(is)| over 10^4 random (kappa, s)",
                  {{"samples", 10000.0}, {"argmax_kappa", worst_kappa}, {"argmax_s", worst_s}}, worst, 1.0, 1.0, 1e-10);

  double err = 0.0;
  const DunklParams classical = DunklParams::classical();
  for (int i = 0; i < 10000; ++i) {
    const double s = uniform(rng, -100.0, 100.0);
    err = std::max(err, std::abs(dunkl_kernel(classical, s) - std::exp(Complex(0.0, s))));
  }
  sink.tolerance("classical_kernel_exponential", "max |E_{-1/2}(is) - e^{is}| over 10^4 random s",
                 {{"samples", 10000.0}}, err, 1.0, 1e-12);

  // Lambda_kappa E(i lambda .) = i lambda E(i lambda .), central differences O(dx^2)
  for (double kappa : ctx.config().kappas) {
    Level& lv = ctx.level(kappa);
    const Grid& g = *lv.grid;
    for (double lambda : {0.5, 1.0, 2.0}) {
      std::vector<Complex> e(static_cast<std::size_t>(g.size()));
      for (int j = 0; j < g.size(); ++j) e[static_cast<std::size_t>(j)] = dunkl_kernel(lv.params, lambda * g.node(j));
      const GridFunction f(lv.grid, e);
      const GridFunction d = dunkl_derivative(lv.params, f);
      double diff = 0.0;
      for (int j = 0; j < g.size(); ++j) {
        if (std::abs(g.node(j)) > 0.5 * g.half_width()) continue;
        diff = std::max(diff, std::abs(d[j] - Complex(0.0, lambda) * f[j]));
      }
      sink.tolerance("kernel_eigenfunction", "Dunkl operator applied to E(i lambda x) equals i lambda E(i lambda x)",
                     {{"kappa", kappa}, {"lambda", lambda}, {"nodes", static_cast<double>(g.size())}}, diff, lambda,
                     1e-3);
    }
  }
}

void suite_measure_lemmas(Context& ctx, CaseSink& sink) {
  auto rng = ctx.rng("measure_lemmas");
  const double exact = ctx.config().tolerances.exact;
  const int per_kappa = 10000 / static_cast<int>(ctx.config().kappas.size()) + 1;
  for (double kappa : ctx.config().kappas) {
    const DunklParams params = DunklParams::for_kappa(kappa);
    double ball_ratio = 0.0, equality_gap = 0.0, origin_ratio = 0.0;
    double doubling = 0.0, reverse = std::numeric_limits<double>::infinity();
    int cover_violations = 0;
    for (int i = 0; i < per_kappa; ++i) {
      const double x = uniform(rng, -10.0, 10.0);
      const double r = std::pow(10.0, uniform(rng, -2.0, 1.0));
      const double b = ball_measure(params, x, r);
      const double iv = interval_measure(params, x, r);
      ball_ratio = std::max(ball_ratio, b / (2.0 * iv));
      if (std::abs(x) >= r) equality_gap = std::max(equality_gap, std::abs(b / (2.0 * iv) - 1.0));
      origin_ratio = std::max(origin_ratio, interval_measure(params, 0.0, r) / (2.0 * iv));
      doubling = std::max(doubling, doubling_ratio(params, x, r));
      const double grow = std::pow(10.0, uniform(rng, 0.0, 2.0));
      reverse = std::min(reverse, interval_measure(params, x, grow * r) / iv / grow);
      // points of B(x, r) must lie in I(x, 3r) or I(-x, 3r)
      const double lo = std::max(0.0, std::abs(x) - r);
      const double hi = std::abs(x) + r;
      for (int k = 0; k < 4; ++k) {
        const double z = (k % 2 ? -1.0 : 1.0) * uniform(rng, lo, hi);
        if (!(std::abs(z - x) < 3.0 * r || std::abs(z + x) < 3.0 * r)) ++cover_violations;
      }
    }
    const Inputs in{{"kappa", kappa}, {"samples", static_cast<double>(per_kappa)}};
    sink.inequality("ball_interval_comparison", "max mu(B(x,r)) / 2 mu(I(x,r)) over random (x, r)", in, ball_ratio,
                    1.0, 1.0, exact);
    sink.tolerance("ball_interval_comparison", "mu(B(x,r)) = 2 mu(I(x,r)) whenever |x| >= r", in, equality_gap, 1.0,
                   exact);
    sink.inequality("origin_interval_comparison", "max mu(I(0,r)) / 2 mu(I(x,r)) over random (x, r)", in,
                    origin_ratio, 1.0, 1.0, exact);
    sink.measured("interval_doubling", "sup mu(I(x,2r)) / mu(I(x,r)) over random (x, r)", in, doubling);
    sink.measured("reverse_doubling", "inf mu(I(x,tr)) / (t mu(I(x,r))) over random (x, r) and t >= 1", in, reverse);
    sink.tolerance("dunkl_ball_cover", "sampled points of B(x,r) outside I(x,3r) u I(-x,3r)", in,
                   static_cast<double>(cover_violations), 1.0, 0.0);

    // closed forms against 10^6-node midpoint sums
    double worst = 0.0;
    for (double x : {0.0, 0.7, -2.5}) {
      for (double r : {0.5, 3.0}) {
        const double lo = std::max(0.0, std::abs(x) - r), hi = std::abs(x) + r;
        const double ball_q = 2.0 * quadrature_measure(params, lo, hi, 500000);
        const double int_q = quadrature_measure(params, x - r, x + r, 1000000);
        worst = std::max(worst, std::abs(ball_measure(params, x, r) / ball_q - 1.0));
        worst = std::max(worst, std::abs(interval_measure(params, x, r) / int_q - 1.0));
      }
    }
    sink.tolerance("measure_closed_forms", "closed-form ball and interval masses vs 10^6-node quadrature",
                   {{"kappa", kappa}}, worst, 1.0, 1e-8);
  }
}

void suite_transform(Context& ctx, CaseSink& sink) {
  for (double kappa : ctx.config().kappas) {
    Level& fine = ctx.level(kappa);
    Level* coarse = ctx.config().refine ? &ctx.level(kappa, true) : nullptr;
    const double tol = kappa == -0.5 ? 1e-6 : 1e-4;
    for (double a : {0.25, 0.5, 2.0}) {
      const FamilyMember m{Family::gaussian, {a}};
      const double d_fine = plancherel_defect(sample_family(m, fine.grid));
      const Inputs in{{"kappa", kappa}, {"f", m.label()}, {"nodes", static_cast<double>(fine.grid->size())}};
      sink.tolerance("plancherel_isometry", "| ||Ff||_2 - ||f||_2 | / ||f||_2", in, d_fine, 1.0, tol);
      if (coarse) {
        const double d_coarse = plancherel_defect(sample_family(m, coarse->grid));
        sink.inequality("plancherel_isometry", "Plancherel defect does not grow under N/2 -> N (rounding floor 1e-10)",
                        {{"kappa", kappa}, {"f", m.label()}, {"coarse", d_coarse}}, d_fine,
                        std::max(d_coarse, 1e-10), 1.0, 0.0);
      }
    }
    for (const auto& m : ctx.config().family) {
      if (!is_smooth(m)) continue;
      const GridFunction f = sample_family(m, fine.grid);
      const GridFunction back = inverse(forward(f), fine.grid);
      sink.tolerance("inversion_round_trip", "sup |F^{-1} F f - f|", {{"kappa", kappa}, {"f", m.label()}},
                     (back - f).sup_norm(), f.sup_norm(), 1e-4);
    }
  }
}

void suite_translation(Context& ctx, CaseSink& sink) {
  auto rng = ctx.rng("translation");
  const auto& cfg = ctx.config();
  const double slack = cfg.tolerances.inequality;
  for (double kappa : cfg.kappas) {
    Level& lv = ctx.level(kappa);
    const Grid& g = *lv.grid;
    const double L = g.half_width();

    for (std::size_t i = 0; i < cfg.family.size(); ++i) {
      if (!is_smooth(cfg.family[i])) continue;
      const GridFunction& f = lv.family[i];
      const Inputs in{{"kappa", kappa}, {"f", cfg.family[i].label()}};
      sink.tolerance("translation_identity", "sup |tau_0 f - f|", in, (translate(f, 0.0) - f).sup_norm(),
                     f.sup_norm(), 1e-4);
      const double mass = integrate(f).real();
      double worst = 0.0;
      for (int k = 0; k < 4; ++k) {
        const double y = uniform(rng, -0.25 * L, 0.25 * L);
        worst = std::max(worst, std::abs(integrate(translate(f, y)).real() - mass));
      }
      // scale by ||f||_1: the trig members nearly cancel
      sink.tolerance("translation_mass", "max |int tau_y f - int f| / ||f||_1 over 4 shifts |y| <= L/4", in, worst,
                     lp_norm(f, Exponent(1.0)), 1e-4);
    }

    // symmetry on 50 node pairs
    for (const FamilyMember& m : {FamilyMember{Family::gaussian, {0.5}}, FamilyMember{Family::bump, {1.0, 2.0}}}) {
      const GridFunction f = sample_family(m, lv.grid);
      double worst = 0.0;
      for (int k = 0; k < 50; ++k) {
        const int i = nearest_node(g, uniform(rng, -0.5 * L, 0.5 * L));
        const int j = nearest_node(g, uniform(rng, -0.5 * L, 0.5 * L));
        const double a = translate(f, g.node(i))[j].real();
        const double b = translate(f, g.node(j))[i].real();
        worst = std::max(worst, std::abs(a - b));
      }
      sink.tolerance("translation_symmetry", "max |tau_x f(y) - tau_y f(x)| over 50 node pairs",
                     {{"kappa", kappa}, {"f", m.label()}}, worst, f.sup_norm(), 1e-4);
    }

    // contraction with constant 4; at kappa = -1/2 translation is an isometry
    const double shifts[] = {uniform(rng, -0.5 * L, 0.5 * L), uniform(rng, -0.5 * L, 0.5 * L), 0.25 * L};
    for (const Exponent p : {Exponent(1.0), Exponent(2.0), Exponent(4.0), Exponent::infinity()}) {
      double worst = 0.0, iso = 0.0;
      std::string arg;
      for (std::size_t i = 0; i < cfg.family.size(); ++i) {
        const GridFunction& f = lv.family[i];
        const double base = lp_norm(f, p);
        for (double y : shifts) {
          const double ratio = lp_norm(translate(f, y), p) / base;
          if (ratio > worst) {
            worst = ratio;
            arg = cfg.family[i].label() + " y=" + fmt(y);
          }
          if (is_smooth(cfg.family[i]) && std::abs(y) <= 0.25 * L) iso = std::max(iso, std::abs(ratio - 1.0));
        }
      }
      sink.inequality("translation_contraction", "max ||tau_y f||_p / ||f||_p over family and shifts",
                      {{"kappa", kappa}, {"p", p.str()}, {"argmax", arg}}, worst, 1.0, 4.0, slack);
      if (kappa == -0.5)
        sink.tolerance("translation_contraction", "classical translation is an isometry (smooth members, |y| <= L/4)",
                       {{"kappa", kappa}, {"p", p.str()}}, iso, 1.0, 1e-3);
    }

    if (kappa == -0.5) {
      const GridFunction f = sample_family(FamilyMember{Family::gaussian, {0.5}}, lv.grid);
      const GridFunction t = translate(f, 1.0);
      double err = 0.0;
      for (int j = 0; j < g.size(); ++j) err = std::max(err, std::abs(t[j].real() - std::exp(-0.5 * (g.node(j) + 1.0) * (g.node(j) + 1.0))));
      sink.tolerance("classical_translation_shift", "tau_1 exp(-x^2/2) = exp(-(x+1)^2/2)", {{"kappa", kappa}}, err,
                     1.0, 1e-4);
    }

    // translated indicators: spectral mass, clamped mass within the boundary cells
    for (double r : {0.5, 2.0}) {
      const double mu = ball_measure_origin(lv.params, r);
      for (double y : {0.0, 1.3, -3.0}) {
        const double yy = g.node(nearest_node(g, y));
        const Inputs in{{"kappa", kappa}, {"r", r}, {"y", yy}};
        sink.tolerance("indicator_translate_mass", "|int tau_y chi_{B_r} - mu(B_r)| (spectral)", in,
                       std::abs(integrate(translate_indicator_raw(yy, r, lv.grid)).real() - mu), mu, 1e-3);
        const double dx = g.spacing();
        const double inner = std::max(0.0, std::abs(yy) - r), outer = std::abs(yy) + r;
        double cells = annulus_measure(lv.params, std::max(0.0, outer - dx), outer + dx);
        if (inner > 0.0) cells += annulus_measure(lv.params, std::max(0.0, inner - dx), inner + dx);
        sink.tolerance("indicator_translate_mass",
                       "|int tau_y chi_{B_r} - mu(B_r)| after clamping to [0,1] on B(y,r), against the boundary-cell mass",
                       in, std::abs(integrate(translate_indicator(lv.params, yy, r, lv.grid)).real() - mu), cells, 1.0);
      }
    }

    // decay of tau_x chi_{B_r} away from the origin
    if (kappa > -0.5) {
      auto decay = [&](Level& level) {
        double c = 0.0;
        const double r = 1.0;
        for (double x : {2.0, 3.0, 5.0, 7.0}) {
          const double xx = level.grid->node(nearest_node(*level.grid, x));
          const GridFunction t = translate_indicator(level.params, xx, r, level.grid);
          c = std::max(c, t.sup_norm() * std::pow(std::abs(xx) / r, 2.0 * kappa + 1.0));
        }
        return c;
      };
      std::optional<double> coarse;
      if (cfg.refine) coarse = decay(ctx.level(kappa, true));
      sink.stability("indicator_translate_bound", "max_y tau_x chi_{B_1}(y) (|x|/r)^{2 kappa + 1} over |x| >= 2r",
                     {{"kappa", kappa}}, kappa, "decay", decay(lv), coarse, cfg.tolerances.stability);
    }

    // tau_x (f * g) = (tau_x f) * g
    {
      const GridFunction f = sample_family(FamilyMember{Family::gaussian, {0.5}}, lv.grid);
      const GridFunction h = sample_family(FamilyMember{Family::bump, {1.0, 2.0}}, lv.grid);
      const GridFunction fh = convolve(f, h);
      for (double x : {0.7, -2.3}) {
        const double err = (translate(fh, x) - convolve(translate(f, x), h)).sup_norm();
        sink.tolerance("convolution_translation_commutation", "sup |tau_x (f * g) - (tau_x f) * g|",
                       {{"kappa", kappa}, {"x", x}}, err, fh.sup_norm(), 1e-3);
      }
    }

    // Lebesgue differentiation through the radius grid, eta <= 1
    {
      std::vector<double> etas;
      for (double r : lv.radii)
        if (r <= 1.0) etas.push_back(r);
      for (const FamilyMember& m : {FamilyMember{Family::gaussian, {0.5}}, FamilyMember{Family::bump, {1.0, 2.0}}}) {
        const GridFunction f = sample_family(m, lv.grid);
        const auto conv = convolve_with_balls(f, etas);
        for (double x : {0.0, 2.0}) {
          const int j = nearest_node(g, x);
          double prev = std::numeric_limits<double>::infinity();
          int increases = 0;
          double last = 0.0;
          for (std::size_t i = etas.size(); i-- > 0;) {  // decreasing eta
            const double avg = conv[i][static_cast<std::size_t>(j)] / ball_measure_origin(lv.params, etas[i]);
            last = std::abs(avg - f[j].real());
            if (last > prev + 1e-12 * f.sup_norm()) ++increases;
            prev = last;
          }
          const Inputs in{{"kappa", kappa}, {"f", m.label()}, {"x", g.node(j)}};
          sink.tolerance("lebesgue_differentiation", "steps where the ball-average error grows as eta decreases", in,
                         static_cast<double>(increases), 1.0, 0.0);
          sink.tolerance("lebesgue_differentiation", "ball-average error at the smallest eta", in, last, f.sup_norm(),
                         1e-2);
        }
      }
    }
  }
}

void suite_young(Context& ctx, CaseSink& sink) {
  const auto& cfg = ctx.config();
  struct Triple {
    Exponent p, q, r;
  };
  // 1/p + 1/q = 1 + 1/r
  const Triple triples[] = {{Exponent(1.0), Exponent(1.0), Exponent(1.0)},
                            {Exponent(1.0), Exponent(2.0), Exponent(2.0)},
                            {Exponent(2.0), Exponent(2.0), Exponent::infinity()},
                            {Exponent(1.5), Exponent(3.0), Exponent::infinity()}};
  for (double kappa : cfg.kappas) {
    Level& lv = ctx.level(kappa);
    const GridPtr lg = default_lambda_grid(*lv.grid);
    std::vector<SpectralFunction> spectra;
    for (const auto& f : lv.family) spectra.push_back(forward(f, lg));
    std::vector<double> worst(std::size(triples), 0.0);
    std::vector<std::string> arg(std::size(triples));
    for (std::size_t i = 0; i < lv.family.size(); ++i) {
      for (std::size_t j = i; j < lv.family.size(); ++j) {
        const GridFunction conv = inverse(spectra[i].multiplied(spectra[j].values()), lv.grid);
        for (std::size_t t = 0; t < std::size(triples); ++t) {
          const auto& tr = triples[t];
          const double lhs = lp_norm(conv, tr.r);
          const double rhs = std::min(lp_norm(lv.family[i], tr.p) * lp_norm(lv.family[j], tr.q),
                                      lp_norm(lv.family[j], tr.p) * lp_norm(lv.family[i], tr.q));
          if (lhs / rhs > worst[t]) {
            worst[t] = lhs / rhs;
            arg[t] = cfg.family[i].label() + " * " + cfg.family[j].label();
          }
        }
      }
    }
    for (std::size_t t = 0; t < std::size(triples); ++t) {
      const auto& tr = triples[t];
      sink.inequality("young_inequality", "max ||f * g||_r / (||f||_p ||g||_q) over family pairs",
                      {{"kappa", kappa}, {"p", tr.p.str()}, {"q", tr.q.str()}, {"r", tr.r.str()}, {"argmax", arg[t]}},
                      worst[t], 1.0, 4.0, cfg.tolerances.inequality);
    }
  }
}

}  // namespace dunkl::detail

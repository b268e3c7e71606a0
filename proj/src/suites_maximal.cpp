// Maximal-operator suites: pointwise equivalence, interval Fofana bound,
// Fofana boundedness of M and its weak-type endpoint.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dunkl/maximal.hpp"
#include "dunkl/measure.hpp"
#include "dunkl/norms.hpp"
#include "dunkl/translation.hpp"
#include "verify_internal.hpp"

namespace dunkl::detail {

namespace {

constexpr double kFloor = 1e-6;

GridFunction interval_indicator(const GridPtr& grid, double center, double r) {
  std::vector<double> v(static_cast<std::size_t>(grid->size()));
  for (int j = 0; j < grid->size(); ++j) v[static_cast<std::size_t>(j)] = std::abs(grid->node(j) - center) < r ? 1.0 : 0.0;
  return GridFunction(grid, v);
}

// Largest max(a/b, b/a) over unclipped nodes where every value clears the floor.
double equivalence_window(Level& lv) {
  const auto clipped = clipped_nodes(*lv.grid, lv.radii);
  const auto& m = lv.dunkl_max();
  const auto& mt = lv.centered_max();
  const auto& mi = lv.interval_max();
  double c = 1.0;
  for (std::size_t i = 0; i < lv.family.size(); ++i) {
    for (int j = 0; j < lv.grid->size(); ++j) {
      if (clipped[static_cast<std::size_t>(j)]) continue;
      const double a = m[i][j].real(), b = mt[i][j].real(), d = mi[i][j].real();
      if (a < kFloor || b < kFloor || d < kFloor) continue;
      c = std::max({c, a / b, b / a, b / d, d / b, a / d, d / a});
    }
  }
  return c;
}

std::vector<ExponentTriple> strong_triples(const SuiteConfig& cfg) {
  std::vector<ExponentTriple> out;
  for (const auto& t : cfg.exponents)
    if (t.q.is_infinite() || t.q.value() > 1.0) out.push_back(t);
  return out;
}

std::vector<ExponentTriple> weak_triples(const SuiteConfig& cfg) {
  std::vector<ExponentTriple> out;
  for (const auto& t : cfg.exponents)
    if (!t.q.is_infinite() && t.q.value() == 1.0) out.push_back(t);
  return out;
}

}  // namespace

void suite_maximal_equivalence(Context& ctx, CaseSink& sink) {
  const auto& cfg = ctx.config();
  for (double kappa : cfg.kappas) {
    Level& lv = ctx.level(kappa);
    std::optional<double> coarse;
    if (cfg.refine) coarse = equivalence_window(ctx.level(kappa, true));
    sink.stability("maximal_equivalence", "smallest C with M f, M~ f, M_mu f pairwise within [1/C, C] (family, |x| <= L/2)",
                   {{"kappa", kappa}}, kappa, "window", equivalence_window(lv), coarse, cfg.tolerances.stability);

    // L^p boundedness and weak (1,1), reported
    const auto& m = lv.dunkl_max();
    for (const Exponent p : {Exponent(2.0), Exponent(4.0), Exponent::infinity()}) {
      double worst = 0.0;
      for (std::size_t i = 0; i < lv.family.size(); ++i)
        worst = std::max(worst, lp_norm(m[i], p) / lp_norm(lv.family[i], p));
      sink.measured("maximal_lp_bound", "max ||M f||_p / ||f||_p over family", {{"kappa", kappa}, {"p", p.str()}},
                    worst);
    }
    double weak = 0.0;
    for (std::size_t i = 0; i < lv.family.size(); ++i)
      weak = std::max(weak, weak_l1_norm(m[i]) / lp_norm(lv.family[i], Exponent(1.0)));
    sink.measured("maximal_weak_type", "max ||M f||_{1,inf} / ||f||_1 over family", {{"kappa", kappa}}, weak);

    // f <= g pointwise: g = |f|, f' = |f| (1 + cos x) / 2
    double mono = 0.0;
    for (std::size_t i = 0; i < lv.family.size(); ++i) {
      std::vector<double> small = lv.family[i].abs();
      for (int j = 0; j < lv.grid->size(); ++j) small[static_cast<std::size_t>(j)] *= 0.5 * (1.0 + std::cos(lv.grid->node(j)));
      const GridFunction fs(lv.grid, small);
      const GridFunction ms[] = {dunkl_maximal(fs, lv.radii), centered_maximal(fs, lv.radii), interval_maximal(fs, lv.radii)};
      const GridFunction* mg[] = {&m[i], &lv.centered_max()[i], &lv.interval_max()[i]};
      for (int op = 0; op < 3; ++op)
        for (int j = 0; j < lv.grid->size(); ++j) mono = std::max(mono, ms[op][j].real() - (*mg[op])[j].real());
    }
    sink.tolerance("maximal_monotonicity", "max (M f' - M f) over family and operators, 0 <= f' <= |f|",
                   {{"kappa", kappa}}, mono, 1.0, 1e-10);
  }

  // classical oracle: at kappa = -1/2 mu = dx / sqrt(2 pi) and the window
  // averages of exp(-a x^2) have an erf closed form
  if (std::find(cfg.kappas.begin(), cfg.kappas.end(), -0.5) != cfg.kappas.end()) {
    Level& lv = ctx.level(-0.5);
    const double a = 0.5;
    const GridFunction g = sample_family(FamilyMember{Family::gaussian, {a}}, lv.grid);
    const GridFunction mg = dunkl_maximal(g, lv.radii);
    const auto clipped = clipped_nodes(*lv.grid, lv.radii);
    const double sa = std::sqrt(a);
    double worst = 0.0;
    for (int j = 0; j < lv.grid->size(); ++j) {
      if (clipped[static_cast<std::size_t>(j)]) continue;
      const double x = lv.grid->node(j);
      double best = 0.0;
      for (double rho : lv.radii) {
        const double avg = std::sqrt(std::numbers::pi / a) * 0.5 * (std::erf(sa * (x + rho)) - std::erf(sa * (x - rho))) / (2.0 * rho);
        best = std::max(best, avg);
      }
      worst = std::max(worst, std::abs(mg[j].real() / best - 1.0));
    }
    sink.tolerance("classical_maximal", "max |M g / M_classical g - 1| on |x| <= L/2, g = exp(-x^2/2), kappa = -1/2",
                   {{"kappa", -0.5}}, worst, 1.0, cfg.tolerances.classical_maximal);
  }
}

void suite_interval_fofana_maximal(Context& ctx, CaseSink& sink) {
  const auto& cfg = ctx.config();
  for (double kappa : cfg.kappas) {
    for (const auto& t : strong_triples(cfg)) {
      auto measure = [&](Level& lv) {
        double worst = 0.0;
        const auto& mi = lv.interval_max();
        for (std::size_t i = 0; i < lv.family.size(); ++i)
          worst = std::max(worst, interval_fofana_norm(mi[i], lv.spec(t)) / interval_fofana_norm(lv.family[i], lv.spec(t)));
        return worst;
      };
      std::optional<double> coarse;
      if (cfg.refine) coarse = measure(ctx.level(kappa, true));
      sink.stability("interval_maximal_bound",
                     "max ||M_mu f|| / ||f|| in (L^q,L^p)^alpha(R,|.|,mu) over family",
                     {{"kappa", kappa}, {"q,p,alpha", t.str()}}, kappa, t.str(), measure(ctx.level(kappa)), coarse,
                     cfg.tolerances.stability);
    }

    // M_mu chi_{I(y,r)}(x) <= C mu(I(y,r)) / mu(I(y,|x-y|)) for |x-y| > 2r
    auto decay = [&](Level& lv) {
      const auto clipped = clipped_nodes(*lv.grid, lv.radii);
      double c = 0.0;
      for (double y : {0.0, 1.0, 3.0}) {
        for (double r : {0.5, 1.0, 2.0}) {
          const GridFunction m = interval_maximal(interval_indicator(lv.grid, y, r), lv.radii);
          const double base = interval_measure(lv.params, y, r);
          for (int j = 0; j < lv.grid->size(); ++j) {
            const double d = std::abs(lv.grid->node(j) - y);
            if (clipped[static_cast<std::size_t>(j)] || d <= 2.0 * r) continue;
            c = std::max(c, m[j].real() * interval_measure(lv.params, y, d) / base);
          }
        }
      }
      return c;
    };
    std::optional<double> coarse;
    if (cfg.refine) coarse = decay(ctx.level(kappa, true));
    sink.stability("interval_indicator_decay",
                   "max M_mu chi_{I(y,r)}(x) mu(I(y,|x-y|)) / mu(I(y,r)) over |x-y| > 2r, y in {0,1,3}, r in {1/2,1,2}",
                   {{"kappa", kappa}}, kappa, "decay", decay(ctx.level(kappa)), coarse, cfg.tolerances.stability);
  }

  // translated indicator vs shifted interval; tau_x chi = chi(. + x) at kappa = -1/2
  if (std::find(cfg.kappas.begin(), cfg.kappas.end(), -0.5) != cfg.kappas.end()) {
    auto discrepancy = [&](Level& lv) {
      double worst = 0.0;
      for (double x : {0.0, 0.75, 2.0, -3.0}) {
        for (double r : {0.5, 1.0}) {
          const GridFunction a = interval_maximal(translate_indicator(lv.params, x, r, lv.grid), lv.radii);
          const GridFunction b = interval_maximal(interval_indicator(lv.grid, -x, r), lv.radii);
          worst = std::max(worst, (a - b).sup_norm() / b.sup_norm());
        }
      }
      return worst;
    };
    const double fine = discrepancy(ctx.level(-0.5));
    sink.tolerance("translated_interval_maximal", "max ||M_mu(tau_x chi_{I(0,r)}) - M_mu(chi_{I(-x,r)})||_inf / peak",
                   {{"kappa", -0.5}}, fine, 1.0, 1e-2);
    if (cfg.refine)
      sink.inequality("translated_interval_maximal", "discrepancy at N does not exceed the one at N/2",
                      {{"kappa", -0.5}}, fine, discrepancy(ctx.level(-0.5, true)), 1.0, cfg.tolerances.inequality);
  }
}

void suite_theorem_maxi(Context& ctx, CaseSink& sink) {
  const auto& cfg = ctx.config();
  for (double kappa : cfg.kappas) {
    for (const auto& t : strong_triples(cfg)) {
      auto measure = [&](Level& lv, double& worst_member) {
        const auto& fof = lv.fofana_family(t);
        const auto& m = lv.dunkl_max();
        double worst = 0.0;
        worst_member = 0.0;
        for (std::size_t i = 0; i < lv.family.size(); ++i) {
          const double ratio = fofana_norm(m[i], lv.spec(t)) / fof[i];
          if (!std::isfinite(ratio)) worst_member = std::numeric_limits<double>::infinity();
          worst = std::max(worst, ratio);
        }
        return worst;
      };
      double nonfinite = 0.0, ignored = 0.0;
      const double fine = measure(ctx.level(kappa), nonfinite);
      std::optional<double> coarse;
      if (cfg.refine) coarse = measure(ctx.level(kappa, true), ignored);
      const Inputs in{{"kappa", kappa}, {"q,p,alpha", t.str()}};
      sink.tolerance("maximal_fofana_bound", "non-finite ratios ||M f||_{q,p,alpha} / ||f||_{q,p,alpha} in family", in,
                     nonfinite, 1.0, 0.0);
      sink.stability("maximal_fofana_bound", "max ||M f||_{q,p,alpha} / ||f||_{q,p,alpha} over family", in, kappa,
                     t.str(), fine, coarse, cfg.tolerances.stability);
    }
  }
}

void suite_theorem_weakmaxi(Context& ctx, CaseSink& sink) {
  const auto& cfg = ctx.config();
  for (double kappa : cfg.kappas) {
    for (const auto& t : weak_triples(cfg)) {
      // per member: weak Fofana of M f and of f, strong Fofana of f, all over the weak radii
      auto measure = [&](Level& lv, double& embed) {
        const auto radii = lv.weak_radii();
        const NormSpec spec{t.q, t.p, t.alpha, radii};
        const auto& wm = lv.weak_windows_maximal();
        const auto& wf = lv.weak_windows_family();
        double worst = 0.0;
        embed = 0.0;
        for (std::size_t i = 0; i < lv.family.size(); ++i) {
          std::vector<std::vector<double>> per_m, per_f;
          for (std::size_t k = 0; k < radii.size(); ++k) {
            per_m.push_back(wm[k][i]);
            per_f.push_back(wf[k][i]);
          }
          const double strong = fofana_norm(lv.family[i], spec);
          worst = std::max(worst, weak_fofana_from_windows(per_m, *lv.grid, t.p, t.alpha, radii) / strong);
          embed = std::max(embed, weak_fofana_from_windows(per_f, *lv.grid, t.p, t.alpha, radii) / strong);
        }
        return worst;
      };
      double embed = 0.0, ignored = 0.0;
      const double fine = measure(ctx.level(kappa), embed);
      std::optional<double> coarse;
      if (cfg.refine) coarse = measure(ctx.level(kappa, true), ignored);
      const Inputs in{{"kappa", kappa}, {"p,alpha", t.p.str() + "," + t.alpha.str()}};
      sink.inequality("weak_fofana_embedding", "max ||f||_{(L^{1,inf},L^p)^alpha} / ||f||_{1,p,alpha} over family", in,
                      embed, 1.0, 1.0, cfg.tolerances.inequality);
      sink.stability("maximal_weak_fofana_bound",
                     "max ||M f||_{(L^{1,inf},L^p)^alpha} / ||f||_{1,p,alpha} over family", in, kappa, t.str(), fine,
                     coarse, cfg.tolerances.stability);
    }
  }
}

}  // namespace dunkl::detail

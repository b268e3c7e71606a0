// Amalgam and Fofana norm suites: Holder, norm axioms, L^inf identity,
// embeddings, Lebesgue identity.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "dunkl/measure.hpp"
#include "dunkl/norms.hpp"
#include "verify_internal.hpp"

namespace dunkl::detail {

namespace {

constexpr double kUnitRadius = 1.0;

Exponent harmonic(Exponent a, Exponent b) {
  const double inv = a.reciprocal() + b.reciprocal();
  return inv == 0.0 ? Exponent::infinity() : Exponent(1.0 / inv);
}

double unit_amalgam(const GridFunction& f, Exponent q, Exponent p) { return amalgam_norm_r(f, q, p, kUnitRadius); }

}  // namespace

void suite_holder(Context& ctx, CaseSink& sink) {
  const auto& cfg = ctx.config();
  struct Pair {
    Exponent q1, p1, q2, p2;
  };
  const Exponent inf = Exponent::infinity();
  const Pair pairs[] = {{Exponent(2.0), inf, Exponent(2.0), inf},
                        {Exponent(2.0), Exponent(4.0), Exponent(2.0), Exponent(4.0)},
                        {Exponent(4.0), inf, Exponent(4.0 / 3.0), inf},
                        {Exponent(4.0), Exponent(4.0), Exponent(4.0 / 3.0), Exponent(4.0)}};
  for (double kappa : cfg.kappas) {
    Level& lv = ctx.level(kappa);
    const std::size_t n = lv.family.size();
    for (const auto& pr : pairs) {
      const Exponent q = harmonic(pr.q1, pr.q2), p = harmonic(pr.p1, pr.p2);
      std::vector<double> a1(n), a2(n);
      for (std::size_t i = 0; i < n; ++i) {
        a1[i] = unit_amalgam(lv.family[i], pr.q1, pr.p1);
        a2[i] = unit_amalgam(lv.family[i], pr.q2, pr.p2);
      }
      double worst = 0.0;
      std::string arg;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          const double lhs = unit_amalgam(lv.family[i] * lv.family[j], q, p);
          const double rhs = std::min(a1[i] * a2[j], a1[j] * a2[i]);
          if (lhs / rhs > worst) {
            worst = lhs / rhs;
            arg = cfg.family[i].label() + " . " + cfg.family[j].label();
          }
        }
      }
      sink.inequality("holder_inequality", "max ||fg||_{q,p} / (||f||_{q1,p1} ||g||_{q2,p2}) over family pairs, r = 1",
                      {{"kappa", kappa},
                       {"q1,p1", pr.q1.str() + "," + pr.p1.str()},
                       {"q2,p2", pr.q2.str() + "," + pr.p2.str()},
                       {"argmax", arg}},
                      worst, 1.0, 1.0, cfg.tolerances.inequality);
    }
  }
}

void suite_norm_axioms(Context& ctx, CaseSink& sink) {
  const auto& cfg = ctx.config();
  struct Norm {
    std::string label;
    std::function<double(const GridFunction&)> eval;
  };
  for (double kappa : cfg.kappas) {
    Level& lv = ctx.level(kappa);
    std::vector<Norm> norms;
    for (const auto& [q, p] : {std::pair{Exponent(1.0), Exponent(2.0)}, std::pair{Exponent(2.0), Exponent::infinity()},
                               std::pair{Exponent(3.0), Exponent(3.0)}})
      norms.push_back({"amalgam q,p=" + q.str() + "," + p.str(), [q, p](const GridFunction& f) { return unit_amalgam(f, q, p); }});
    for (const auto& t : cfg.exponents) {
      const NormSpec spec = lv.spec(t);
      norms.push_back({"fofana " + t.str(), [spec](const GridFunction& f) { return fofana_norm(f, spec); }});
    }
    const std::size_t n = lv.family.size();
    for (const auto& nm : norms) {
      std::vector<double> base(n);
      for (std::size_t i = 0; i < n; ++i) base[i] = nm.eval(lv.family[i]);
      double hom = 0.0, tri = 0.0, low = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < n; ++i) {
        low = std::min(low, base[i] / lv.family[i].sup_norm());
        for (double c : {-2.5, 0.3}) hom = std::max(hom, std::abs(nm.eval(lv.family[i] * Complex(c)) / (std::abs(c) * base[i]) - 1.0));
        const std::size_t j = (i + 1) % n;
        tri = std::max(tri, nm.eval(lv.family[i] + lv.family[j]) / (base[i] + base[j]));
      }
      const Inputs in{{"kappa", kappa}, {"norm", nm.label}};
      sink.tolerance("norm_homogeneity", "max | ||c f|| / (|c| ||f||) - 1 | over family, c in {-2.5, 0.3}", in, hom,
                     1.0, cfg.tolerances.homogeneity);
      sink.inequality("norm_triangle", "max ||f + g|| / (||f|| + ||g||) over adjacent family pairs", in, tri, 1.0, 1.0,
                      cfg.tolerances.triangle);
      sink.tolerance("norm_definiteness", "norm of the zero function", in, nm.eval(GridFunction::zeros(lv.grid)), 1.0,
                     0.0);
      sink.measured("norm_definiteness", "min ||f|| / ||f||_inf over the family (positive for f != 0)", in, low);
    }
  }
}

void suite_linfty_identity(Context& ctx, CaseSink& sink) {
  const auto& cfg = ctx.config();
  for (double kappa : cfg.kappas) {
    Level& lv = ctx.level(kappa);
    double worst = 0.0, worst_fofana = 0.0;
    const NormSpec spec{Exponent::infinity(), Exponent::infinity(), Exponent::infinity(), lv.radii};
    for (const auto& f : lv.family) {
      const double sup = f.sup_norm();
      for (double r : lv.radii)
        worst = std::max(worst, std::abs(amalgam_norm_r(f, Exponent::infinity(), Exponent::infinity(), r) / sup - 1.0));
      worst_fofana = std::max(worst_fofana, std::abs(fofana_norm(f, spec) / sup - 1.0));
    }
    sink.tolerance("linfty_identity", "max | _r||f||_{inf,inf} / ||f||_inf - 1 | over family and radii",
                   {{"kappa", kappa}}, worst, 1.0, cfg.tolerances.linfty_identity);
    sink.tolerance("linfty_identity", "max | ||f||_{inf,inf,inf} / ||f||_inf - 1 | over family", {{"kappa", kappa}},
                   worst_fofana, 1.0, cfg.tolerances.linfty_identity);
  }
}

void suite_embeddings(Context& ctx, CaseSink& sink) {
  const auto& cfg = ctx.config();
  const double slack = cfg.tolerances.inequality;
  for (double kappa : cfg.kappas) {
    Level& lv = ctx.level(kappa);
    const double mu1 = ball_measure_origin(lv.params, 1.0);
    const std::size_t n = lv.family.size();

    // ||f||_{q,p} <= 4^{1/q} mu(B_1)^{1/p - 1/s + 1/q} ||f||_s, q <= s <= p
    struct Qsp {
      Exponent q, s, p;
    };
    for (const auto& e : {Qsp{Exponent(1.0), Exponent(2.0), Exponent(4.0)}, Qsp{Exponent(2.0), Exponent(2.0), Exponent::infinity()},
                          Qsp{Exponent(1.0), Exponent(1.0), Exponent::infinity()}, Qsp{Exponent(2.0), Exponent(4.0), Exponent(8.0)},
                          Qsp{Exponent(1.5), Exponent(3.0), Exponent(6.0)}}) {
      const double c = std::pow(4.0, e.q.reciprocal()) * std::pow(mu1, e.p.reciprocal() - e.s.reciprocal() + e.q.reciprocal());
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, unit_amalgam(lv.family[i], e.q, e.p) / (c * lp_norm(lv.family[i], e.s)));
      sink.inequality("lq_embedding", "max ||f||_{q,p} / (4^{1/q} mu(B_1)^{1/p-1/s+1/q} ||f||_s) over family",
                      {{"kappa", kappa}, {"q", e.q.str()}, {"s", e.s.str()}, {"p", e.p.str()}}, worst, 1.0, 1.0, slack);
    }

    // ||f||_{q1,p} <= mu(B_1)^{1/q1 - 1/q2} ||f||_{q2,p}
    struct Qqp {
      Exponent q1, q2, p;
    };
    for (const auto& e : {Qqp{Exponent(1.0), Exponent(2.0), Exponent(4.0)}, Qqp{Exponent(2.0), Exponent(4.0), Exponent(8.0)},
                          Qqp{Exponent(1.0), Exponent::infinity(), Exponent::infinity()},
                          Qqp{Exponent(1.5), Exponent(3.0), Exponent::infinity()}}) {
      const double c = std::pow(mu1, e.q1.reciprocal() - e.q2.reciprocal());
      double worst = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        worst = std::max(worst, unit_amalgam(lv.family[i], e.q1, e.p) / (c * unit_amalgam(lv.family[i], e.q2, e.p)));
      sink.inequality("amalgam_q_monotonicity", "max ||f||_{q1,p} / (mu(B_1)^{1/q1-1/q2} ||f||_{q2,p}) over family",
                      {{"kappa", kappa}, {"q1", e.q1.str()}, {"q2", e.q2.str()}, {"p", e.p.str()}}, worst, 1.0, 1.0,
                      slack);
    }

    for (const auto& t : cfg.exponents) {
      const auto& fof = lv.fofana_family(t);
      double worst = 0.0, worst_interval = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        worst = std::max(worst, fof[i] / (std::pow(4.0, t.q.reciprocal()) * lp_norm(lv.family[i], t.alpha)));
        worst_interval = std::max(worst_interval, interval_fofana_norm(lv.family[i], lv.spec(t)) / fof[i]);
      }
      const Inputs in{{"kappa", kappa}, {"q,p,alpha", t.str()}};
      sink.inequality("lebesgue_embedding", "max ||f||_{q,p,alpha} / (4^{1/q} ||f||_alpha) over family", in, worst, 1.0,
                      1.0, slack);
      sink.inequality("interval_vs_translation_fofana",
                      "max ||f||_{(L^q,L^p)^alpha(R,|.|,mu)} / ||f||_{q,p,alpha} over family", in, worst_interval, 1.0,
                      1.0, cfg.tolerances.comparison);
      // ||f||_{q1,p,alpha} <= ||f||_{q2,p,alpha} for q1 <= q2
      if (t.q.is_infinite() || t.q.value() <= 1.0) continue;
      const ExponentTriple lower{Exponent(1.0), t.p, t.alpha};
      const auto& fof1 = lv.fofana_family(lower);
      double worst_q = 0.0;
      for (std::size_t i = 0; i < n; ++i) worst_q = std::max(worst_q, fof1[i] / fof[i]);
      sink.inequality("fofana_q_monotonicity", "max ||f||_{1,p,alpha} / ||f||_{q,p,alpha} over family", in, worst_q,
                      1.0, 1.0, slack);
    }
  }
}

void suite_fofana_lebesgue(Context& ctx, CaseSink& sink) {
  const auto& cfg = ctx.config();
  const ExponentTriple triples[] = {ExponentTriple::parse("1,4,1"), ExponentTriple::parse("2,4,2"),
                                    ExponentTriple::parse("2,4,4"), ExponentTriple::parse("1.5,3,3")};
  for (double kappa : cfg.kappas) {
    for (const auto& t : triples) {
      auto measure = [&](Level& lv, double& upper) {
        double low = std::numeric_limits<double>::infinity();
        upper = 0.0;
        const auto& fof = lv.fofana_family(t);
        for (std::size_t i = 0; i < lv.family.size(); ++i) {
          const double ratio = fof[i] / lp_norm(lv.family[i], t.alpha);
          low = std::min(low, ratio);
          upper = std::max(upper, ratio);
        }
        return low;
      };
      double upper = 0.0, ignored = 0.0;
      const double low = measure(ctx.level(kappa), upper);
      std::optional<double> coarse;
      if (cfg.refine) coarse = measure(ctx.level(kappa, true), ignored);
      const Inputs in{{"kappa", kappa}, {"q,p,alpha", t.str()}};
      sink.inequality("lebesgue_identity", "max ||f||_{q,p,alpha} / ||f||_alpha over family (alpha in {q,p})", in,
                      upper, 1.0, std::pow(4.0, t.q.reciprocal()), cfg.tolerances.inequality);
      sink.stability("lebesgue_identity", "min ||f||_{q,p,alpha} / ||f||_alpha over family (alpha in {q,p})", in, kappa,
                     t.str(), low, coarse, cfg.tolerances.stability);
    }
  }
}

}  // namespace dunkl::detail

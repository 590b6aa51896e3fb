#include "mms/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "mms/curve.hpp"
#include "mms/functional.hpp"
#include "mms/gradient.hpp"
#include "mms/measure.hpp"
#include "mms/metric.hpp"
#include "mms/rng.hpp"
#include "mms/transport.hpp"
#include "mms/wasserstein.hpp"

namespace mms {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

SpacePtr random_planar_space(Rng& rng, int n) {
  std::vector<std::vector<double>> coords(n, std::vector<double>(2));
  for (auto& c : coords) {
    c[0] = rng.uniform();
    c[1] = rng.uniform();
  }
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double dx = coords[i][0] - coords[j][0];
      const double dy = coords[i][1] - coords[j][1];
      // Clamp away from zero so random points never collide.
      const double d = std::max(std::sqrt(dx * dx + dy * dy), 1e-6);
      dist[i][j] = dist[j][i] = d;
    }
  }
  std::vector<double> weight(n);
  for (double& w : weight) w = rng.uniform(0.5, 1.5);
  return MetricSpace::from_matrix(dist, weight, coords);
}

Measure random_rational_measure(Rng& rng, const SpacePtr& sp) {
  std::vector<double> phi(sp->size());
  for (double& v : phi) v = rng.uniform_int(0, 8) / 8.0;
  return Measure(sp, std::move(phi));
}

struct Checker {
  SuiteReport report;
  void add(const std::string& name, bool pass, const std::string& detail) {
    report.checks.push_back({name, pass, detail});
  }
};

void require_instances(const VerifyConfig& cfg) {
  if (cfg.instances <= 0) {
    throw std::invalid_argument("verify: instance count must be >= 1 (empty suite)");
  }
}

}  // namespace

SuiteReport verify_metric(const VerifyConfig& cfg) {
  require_instances(cfg);
  Rng rng(cfg.seed ^ 0x6d657472ULL);
  const HFunction h(cfg.h_exponent);
  Checker ck;
  ck.report.suite = "metric";
  ck.report.seed = cfg.seed;
  ck.report.instances = cfg.instances;

  {
    double worst = 0.0;
    for (int it = 0; it < cfg.instances; ++it) {
      const SpacePtr sp = random_planar_space(rng, rng.uniform_int(2, 5));
      const Measure a = random_rational_measure(rng, sp);
      const Measure b = random_rational_measure(rng, sp);
      worst = std::max(worst, std::abs(dm(a, b, h) - dm_bruteforce(a, b, h)));
    }
    ck.add("oracle_agreement", worst <= 1e-9, "max |solver - oracle| = " + fmt(worst));
  }
  {
    bool sym = true;
    double worst_id = 0.0;
    double worst_tri = 0.0;
    bool distinct_zero = true;
    for (int it = 0; it < cfg.instances; ++it) {
      const SpacePtr sp = random_planar_space(rng, 8);
      const Measure a = random_rational_measure(rng, sp);
      const Measure b = random_rational_measure(rng, sp);
      const Measure c = random_rational_measure(rng, sp);
      const double ab = dm(a, b, h);
      sym = sym && (ab == dm(b, a, h));
      worst_id = std::max(worst_id, dm(a, a, h));
      worst_tri = std::max(worst_tri, ab - (dm(a, c, h) + dm(c, b, h)));
      if (!approx_equal(a, b) && ab <= 0.0) distinct_zero = false;
    }
    // An injected non-metric space must surface here: heavy atoms at the ends
    // of a broken triangle make the kill-and-recreate route beat relocation.
    for (const auto& sp : cfg.extra_spaces) {
      for (int i = 0; i + 2 < sp->size(); ++i) {
        const Measure a = Measure::indicator(sp, {i});
        const Measure b = Measure::indicator(sp, {i + 1});
        const Measure c = Measure::indicator(sp, {i + 2});
        worst_tri = std::max(worst_tri, dm(a, c, h) - (dm(a, b, h) + dm(b, c, h)));
      }
    }
    ck.add("symmetry_exact", sym, sym ? "bitwise equal" : "asymmetry found");
    ck.add("identity", worst_id <= 1e-12 && distinct_zero,
           "max dm(a,a) = " + fmt(worst_id) +
               (distinct_zero ? "" : "; zero distance between distinct measures"));
    ck.add("triangle", worst_tri <= 1e-9, "max violation = " + fmt(worst_tri));
  }
  {
    bool ok = true;
    for (int it = 0; it < cfg.instances && ok; ++it) {
      const SpacePtr sp = random_planar_space(rng, 6);
      const Measure a = random_rational_measure(rng, sp);
      const Measure b = random_rational_measure(rng, sp);
      double prev = -1.0;
      for (double eps : {0.0, 0.2, 0.5, 0.9, 1.5}) {
        const double m = max_matched_mass(a, b, eps).mass;
        ok = ok && m >= prev - 1e-12;
        prev = m;
      }
      const double eps0 = rng.uniform(0.0, 1.0);
      const double del0 = rng.uniform(0.0, 2.0);
      if (gamma_feasible(a, b, eps0, del0)) {
        ok = ok && gamma_feasible(a, b, eps0 + 0.3, del0);
        ok = ok && gamma_feasible(a, b, eps0, del0 + 0.3);
      }
    }
    ck.add("matched_mass_and_gamma_monotone", ok, ok ? "nondecreasing" : "monotonicity broken");
  }
  {
    double worst = 0.0;
    for (int it = 0; it < cfg.instances; ++it) {
      const SpacePtr sp = random_planar_space(rng, 6);
      const Measure a = random_rational_measure(rng, sp);
      const Measure b = random_rational_measure(rng, sp);
      const double base = dm(a, b, h);
      const double t = rng.uniform();
      std::vector<double> phi(sp->size());
      for (int i = 0; i < sp->size(); ++i) {
        phi[i] = (1.0 - t) * a.density(i) + t * b.density(i);
      }
      worst = std::max(worst, dm(a, Measure(sp, std::move(phi)), h) - base);
    }
    ck.add("mixture_bound", worst <= 1e-9, "max excess = " + fmt(worst));
  }
  {
    // Whole-cell grid shifts move mass by exactly the shift length.
    double worst = 0.0;
    const SpacePtr grid = MetricSpace::grid(1, {24}, 0.125);
    for (int it = 0; it < cfg.instances; ++it) {
      std::vector<double> phi(grid->size(), 0.0);
      for (int i = 4; i < 12; ++i) phi[i] = rng.uniform_int(0, 8) / 8.0;
      const int cells = rng.uniform_int(1, 8);
      const Measure m0(grid, phi);
      std::vector<double> shifted(grid->size(), 0.0);
      for (int i = 0; i < grid->size() - cells; ++i) shifted[i + cells] = phi[i];
      const double t = cells * 0.125;
      worst = std::max(worst, dm(Measure(grid, std::move(shifted)), m0, h) - t);
    }
    ck.add("shift_bound", worst <= 1e-9, "max excess over shift length = " + fmt(worst));
  }
  {
    bool ok = true;
    for (int it = 0; it < cfg.instances && ok; ++it) {
      const SpacePtr sp = random_planar_space(rng, 5);
      const Measure a = random_rational_measure(rng, sp);
      const Measure b = random_rational_measure(rng, sp);
      const auto [m1, m2] = mass_bounds_check(a, b, h);
      ok = ok && m1 && m2;
    }
    ck.add("mass_support_bounds", ok, ok ? "both bounds hold" : "bound violated");
  }
  {
    double worst = 0.0;
    for (int it = 0; it < cfg.instances; ++it) {
      const SpacePtr sp = random_planar_space(rng, 4);
      const Measure a = random_rational_measure(rng, sp);
      const Measure zero = Measure::zero(sp);
      const double expect = a.is_zero() ? 0.0 : h.inverse(a.total_mass());
      worst = std::max(worst, std::abs(dm(a, zero, h) - expect));
    }
    ck.add("zero_measure_distance", worst <= 1e-12,
           "max |dm(a,0) - h_inv(|a|)| = " + fmt(worst));
  }
  {
    bool ok = true;
    for (int it = 0; it < cfg.instances && ok; ++it) {
      const double x = rng.uniform(0.0, 2.0);
      const double y = rng.uniform(0.0, 2.0);
      ok = ok && h(x) + h(y) <= h(x + y) + 1e-12;
      ok = ok && (x < y ? h(x) < h(y) + 1e-15 : h(y) < h(x) + 1e-15);
    }
    ok = ok && h(0.0) == 0.0 && h(1e-9) / 1e-9 < 1e-3;
    ck.add("h_function_shape", ok, ok ? "superadditive, increasing, flat at 0" : "shape broken");
  }
  return ck.report;
}

SuiteReport verify_norms(const VerifyConfig& cfg) {
  require_instances(cfg);
  Rng rng(cfg.seed ^ 0x6e6f726dULL);
  Checker ck;
  ck.report.suite = "norms";
  ck.report.seed = cfg.seed;
  ck.report.instances = cfg.instances;
  const double ps[4] = {1.0, 1.5, 2.0, 3.0};

  {
    double worst = 0.0;
    bool no_subdensity_win = true;
    for (int it = 0; it < cfg.instances; ++it) {
      const SpacePtr sp = random_planar_space(rng, rng.uniform_int(2, 5));
      PointFunction f;
      f.values.resize(sp->size());
      for (double& v : f.values) v = rng.uniform(-2.0, 2.0);
      const double p = ps[rng.uniform_int(0, 3)];
      const auto res = lp_norm_functional_bruteforce_detailed(
          sp, MeasureFunctional::induced(f), p);
      worst = std::max(worst, std::abs(res.norm - lp_norm_point(*sp, f, p)));
      no_subdensity_win = no_subdensity_win && !res.subdensity_exceeded;
    }
    ck.add("point_vs_functional_norm", worst <= 1e-9 && no_subdensity_win,
           "max gap = " + fmt(worst));
  }
  {
    double worst_h = 0.0;
    double worst_sub = 0.0;
    double worst_scale = 0.0;
    for (int it = 0; it < cfg.instances; ++it) {
      const SpacePtr sp = random_planar_space(rng, 4);
      PointFunction f, g;
      f.values.resize(sp->size());
      g.values.resize(sp->size());
      for (double& v : f.values) v = rng.uniform(-2.0, 2.0);
      for (double& v : g.values) v = rng.uniform(-2.0, 2.0);
      const auto F = MeasureFunctional::induced(f);
      const auto G = MeasureFunctional::induced(g);
      const auto FG = MeasureFunctional::tabulated(
          [F, G](const Measure& m) { return F(m) * G(m); });
      const auto FplusG = MeasureFunctional::tabulated(
          [F, G](const Measure& m) { return F(m) + G(m); });
      const double p = 2.0, q = 2.0;
      worst_h = std::max(worst_h,
                         lp_norm_functional_bruteforce(sp, FG, 1.0) -
                             lp_norm_functional_bruteforce(sp, F, p) *
                                 lp_norm_functional_bruteforce(sp, G, q));
      const double pp = ps[rng.uniform_int(0, 3)];
      worst_sub = std::max(worst_sub,
                           lp_norm_functional_bruteforce(sp, FplusG, pp) -
                               (lp_norm_functional_bruteforce(sp, F, pp) +
                                lp_norm_functional_bruteforce(sp, G, pp)));
      const double a = rng.uniform(-3.0, 3.0);
      const auto aF =
          MeasureFunctional::tabulated([F, a](const Measure& m) { return a * F(m); });
      const double na = lp_norm_functional_bruteforce(sp, aF, pp);
      const double nf = lp_norm_functional_bruteforce(sp, F, pp);
      worst_scale = std::max(worst_scale, std::abs(na - std::abs(a) * nf));
    }
    ck.add("hoelder", worst_h <= 1e-9, "max excess = " + fmt(worst_h));
    ck.add("finite_subadditivity", worst_sub <= 1e-9, "max excess = " + fmt(worst_sub));
    ck.add("norm_scaling", worst_scale <= 1e-9, "max gap = " + fmt(worst_scale));
  }
  {
    // Search is a lower bound, finds the singleton optimum for induced
    // functionals and never decreases with budget.
    const SpacePtr grid = MetricSpace::grid(1, {64}, 0.1);
    PointFunction f;
    f.values.resize(grid->size());
    for (int i = 0; i < grid->size(); ++i) f.values[i] = std::sin(0.37 * i) + 0.2;
    const auto F = MeasureFunctional::induced(f);
    const double exact = lp_norm_point(*grid, f, 2.0);
    const double v_small = lp_norm_functional_search(grid, F, 2.0, 4, cfg.seed).norm;
    const double v_big = lp_norm_functional_search(grid, F, 2.0, 32, cfg.seed).norm;
    const bool ok = v_small <= v_big + 1e-12 && v_big <= exact + 1e-9 &&
                    std::abs(v_big - exact) <= 1e-6;
    ck.add("search_lower_bound", ok,
           "search " + fmt(v_big) + " vs exact " + fmt(exact));
  }
  {
    bool recovered = true;
    for (int it = 0; it < cfg.instances && recovered; ++it) {
      const SpacePtr sp = random_planar_space(rng, rng.uniform_int(2, 6));
      PointFunction f;
      f.values.resize(sp->size());
      for (double& v : f.values) v = rng.uniform(-2.0, 2.0);
      const auto F = MeasureFunctional::induced(f);
      const auto tab = MeasureFunctional::tabulated([F](const Measure& m) { return F(m); });
      const auto back = representability_check(sp, tab, 1e-9, rng.bits());
      recovered = back.has_value();
      if (recovered) {
        for (int i = 0; i < sp->size(); ++i) {
          recovered = recovered && std::abs(back->values[i] - f.values[i]) <= 1e-9;
        }
      }
    }
    const SpacePtr sp = random_planar_space(rng, 4);
    const auto total = MeasureFunctional::tabulated(
        [](const Measure& m) { return m.total_mass(); });
    const bool rejected = !representability_check(sp, total, 1e-9, rng.bits()).has_value();
    ck.add("representability_recovers", recovered, recovered ? "all recovered" : "missed");
    ck.add("representability_rejects_total_mass", rejected,
           rejected ? "rejected" : "wrongly accepted");
  }
  return ck.report;
}

SuiteReport verify_gradients(const VerifyConfig& cfg) {
  require_instances(cfg);
  Rng rng(cfg.seed ^ 0x67726164ULL);
  const HFunction h(cfg.h_exponent);
  Checker ck;
  ck.report.suite = "gradients";
  ck.report.seed = cfg.seed;
  ck.report.instances = cfg.instances;

  const int n = 64;
  const double delta = 2.0 * std::numbers::pi / (n - 1);
  const SpacePtr grid = MetricSpace::grid(1, {n}, delta);
  const double rho = 2.0 * delta;
  const std::vector<double> scales{delta, 2.0 * delta, 4.0 * delta};

  PointFunction fsin, fcos, flin;
  fsin.values.resize(n);
  fcos.values.resize(n);
  flin.values.resize(n);
  for (int i = 0; i < n; ++i) {
    fsin.values[i] = std::sin(grid->coord(i, 0));
    fcos.values[i] = std::cos(grid->coord(i, 0));
    flin.values[i] = grid->coord(i, 0);
  }
  const auto Fs = MeasureFunctional::induced(fsin);
  const auto Fc = MeasureFunctional::induced(fcos);

  // Exactly anchored ensemble (translations + the rho-dilation) at a handful
  // of interior probes.
  std::vector<int> probes;
  for (int it = 0; it < std::min(cfg.instances, 12); ++it) probes.push_back(rng.uniform_int(12, n - 13));

  auto anchored_ensemble = [&](int x) {
    CurveEnsemble ens = grid_probe_ensemble(grid, x, rho, scales, h);
    std::vector<Curve> keep;
    for (auto& c : ens.curves) {
      if (approx_equal(c.states[0], ens.anchor, 1e-12)) keep.push_back(std::move(c));
    }
    ens.curves = std::move(keep);
    return ens;
  };

  {
    double worst_hom = 0.0;
    double worst_sub = 0.0;
    double worst_lattice = 0.0;
    double worst_prod = 0.0;
    double worst_sum = 0.0;
    bool monotone = true;
    for (int x : probes) {
      const CurveEnsemble ens = anchored_ensemble(x);
      const Measure& anchor = ens.anchor;
      const double rF = upper_gradient_estimate(Fs, anchor, ens);
      const double rG = upper_gradient_estimate(Fc, anchor, ens);
      const double a = rng.uniform(-3.0, 3.0);
      const auto aF = MeasureFunctional::tabulated(
          [a, &Fs](const Measure& m) { return a * Fs(m); });
      worst_hom = std::max(worst_hom,
                           std::abs(upper_gradient_estimate(aF, anchor, ens) - std::abs(a) * rF));
      const auto FplusG = MeasureFunctional::tabulated(
          [&Fs, &Fc](const Measure& m) { return Fs(m) + Fc(m); });
      worst_sub = std::max(worst_sub,
                           upper_gradient_estimate(FplusG, anchor, ens) - (rF + rG));
      const auto Fmax = MeasureFunctional::tabulated(
          [&Fs, &Fc](const Measure& m) { return std::max(Fs(m), Fc(m)); });
      const auto Fmin = MeasureFunctional::tabulated(
          [&Fs, &Fc](const Measure& m) { return std::min(Fs(m), Fc(m)); });
      worst_lattice = std::max(
          {worst_lattice, upper_gradient_estimate(Fmax, anchor, ens) - std::max(rF, rG),
           upper_gradient_estimate(Fmin, anchor, ens) - std::max(rF, rG)});
      const auto FG = MeasureFunctional::tabulated(
          [&Fs, &Fc](const Measure& m) { return Fs(m) * Fc(m); });
      const double eps_used = scales.back() + scales.front();
      worst_prod = std::max(worst_prod,
                            upper_gradient_estimate(FG, anchor, ens) -
                                (std::abs(Fs(anchor)) * rG + std::abs(Fc(anchor)) * rF +
                                 rF * rG * eps_used));
      // Finite-sum bound with three terms.
      const auto F3 = MeasureFunctional::tabulated(
          [&Fs, &Fc](const Measure& m) { return Fs(m) + Fc(m) + 0.5 * Fs(m); });
      worst_sum = std::max(worst_sum,
                           upper_gradient_estimate(F3, anchor, ens) - (1.5 * rF + rG));
      // Dropping curves or scales never raises the estimate.
      CurveEnsemble smaller = ens;
      smaller.curves.resize(std::max<std::size_t>(1, smaller.curves.size() / 2));
      smaller.scales.resize(1);
      monotone = monotone && upper_gradient_estimate(Fs, anchor, smaller) <= rF + 1e-15;
    }
    ck.add("homogeneity_exact", worst_hom <= 1e-12, "max gap = " + fmt(worst_hom));
    ck.add("subadditivity", worst_sub <= 1e-12, "max excess = " + fmt(worst_sub));
    ck.add("lattice_bound", worst_lattice <= 1e-12, "max excess = " + fmt(worst_lattice));
    ck.add("product_bound", worst_prod <= 1e-12, "max excess = " + fmt(worst_prod));
    ck.add("finite_sum_bound", worst_sum <= 1e-12, "max excess = " + fmt(worst_sum));
    ck.add("ensemble_monotone", monotone, monotone ? "sup over larger set" : "broken");
  }
  {
    // Lipschitz bound: |x - c| has constant 1.
    PointFunction f;
    f.values.resize(n);
    const double c = grid->coord(n / 2, 0);
    for (int i = 0; i < n; ++i) f.values[i] = std::abs(grid->coord(i, 0) - c);
    GradientFieldOptions opts;
    opts.rho = rho;
    opts.scales = scales;
    const GradientField field = gradient_field(grid, f, h, opts);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      if (!field.excluded[i]) worst = std::max(worst, field.values[i] - 1.0);
    }
    ck.add("lipschitz_bound", worst <= 1e-6, "max excess over constant = " + fmt(worst));
  }
  {
    GradientFieldOptions opts;
    opts.rho = rho;
    opts.scales = scales;
    const GradientField gs = gradient_field(grid, fsin, h, opts);
    const GradientField gc = gradient_field(grid, fcos, h, opts);

    // Chain: (u^2) o sin.
    PointFunction fsq;
    fsq.values.resize(n);
    for (int i = 0; i < n; ++i) fsq.values[i] = fsin.values[i] * fsin.values[i];
    const GradientField gsq = gradient_field(grid, fsq, h, opts);
    double worst_chain = 0.0;
    for (int i = 0; i < n; ++i) {
      if (gsq.excluded[i]) continue;
      worst_chain = std::max(
          worst_chain, gsq.values[i] - (2.0 * std::abs(fsin.values[i]) * gs.values[i]));
    }
    ck.add("chain_rule_field", worst_chain <= 0.02, "max excess = " + fmt(worst_chain));

    // Product: sin * cos.
    PointFunction fprod;
    fprod.values.resize(n);
    for (int i = 0; i < n; ++i) fprod.values[i] = fsin.values[i] * fcos.values[i];
    const GradientField gp = gradient_field(grid, fprod, h, opts);
    double worst_prod = 0.0;
    for (int i = 0; i < n; ++i) {
      if (gp.excluded[i]) continue;
      worst_prod = std::max(worst_prod,
                            gp.values[i] - (std::abs(fsin.values[i]) * gc.values[i] +
                                            std::abs(fcos.values[i]) * gs.values[i]));
    }
    ck.add("product_rule_field", worst_prod <= 0.02, "max excess = " + fmt(worst_prod));

    // Sum: sin + cos.
    PointFunction fsum;
    fsum.values.resize(n);
    for (int i = 0; i < n; ++i) fsum.values[i] = fsin.values[i] + fcos.values[i];
    const GradientField gsum = gradient_field(grid, fsum, h, opts);
    double worst_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      if (gsum.excluded[i]) continue;
      worst_sum = std::max(worst_sum, gsum.values[i] - (gs.values[i] + gc.values[i]));
    }
    ck.add("sum_rule_field", worst_sum <= 0.02, "max excess = " + fmt(worst_sum));

    // Locality: sin clipped at 0.5 away from the level set.
    PointFunction fclip;
    fclip.values.resize(n);
    for (int i = 0; i < n; ++i) fclip.values[i] = std::min(fsin.values[i], 0.5);
    const GradientField gclip = gradient_field(grid, fclip, h, opts);
    double worst_loc = 0.0;
    const double margin = rho + delta;
    for (int i = 0; i < n; ++i) {
      if (gclip.excluded[i]) continue;
      const double x = grid->coord(i, 0);
      double dist_to_set = 1e9;
      for (int j = 0; j + 1 < n; ++j) {
        if ((fsin.values[j] - 0.5) * (fsin.values[j + 1] - 0.5) <= 0.0) {
          dist_to_set = std::min(dist_to_set, std::abs(x - grid->coord(j, 0)));
        }
      }
      if (dist_to_set <= margin) continue;
      const double expect = fsin.values[i] < 0.5 ? gs.values[i] : 0.0;
      worst_loc = std::max(worst_loc, std::abs(gclip.values[i] - expect));
    }
    ck.add("locality_field", worst_loc <= 0.05, "max gap = " + fmt(worst_loc));

    // Constant functions have a vanishing field.
    PointFunction fconst;
    fconst.values.assign(n, 3.25);
    const GradientField g0 = gradient_field(grid, fconst, h, opts);
    double worst0 = 0.0;
    for (int i = 0; i < n; ++i) worst0 = std::max(worst0, g0.values[i]);
    ck.add("constant_zero_field", worst0 <= 1e-12, "max = " + fmt(worst0));
  }
  {
    // Fundamental inequality along a translation curve of f(x) = x.
    std::vector<double> phi(grid->size(), 0.0);
    for (int i = 8; i < 20; ++i) phi[i] = 1.0;
    const Curve curve = translation_curve(grid, phi, 0, +1, 10, h);
    const auto Flin = MeasureFunctional::induced(flin);
    const std::vector<double> ones(curve.states.size(), 1.0);
    const FundamentalCheck good = fundamental_inequality_check(Flin, curve, ones);
    const std::vector<double> zeros(curve.states.size(), 0.0);
    const FundamentalCheck bad = fundamental_inequality_check(Flin, curve, zeros);
    ck.add("fundamental_inequality", good.holds && !bad.holds,
           "gap = " + fmt(good.max_relative_gap) + ", zero witness " +
               (bad.holds ? "missed" : "rejected"));
  }
  return ck.report;
}

std::vector<SuiteReport> verify_all(const VerifyConfig& cfg) {
  return {verify_metric(cfg), verify_norms(cfg), verify_gradients(cfg)};
}

}  // namespace mms

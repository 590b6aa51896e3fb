// Acceptance suite: end-to-end checks of the solver stack at fixed seeds and
// tolerances. Prints one PASS/FAIL line per criterion and exits nonzero when
// any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "mms/curve.hpp"
#include "mms/functional.hpp"
#include "mms/gradient.hpp"
#include "mms/metric.hpp"
#include "mms/rng.hpp"
#include "mms/verify.hpp"
#include "mms/wasserstein.hpp"

using namespace mms;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail) {
  std::printf("%s %2d. %s: %s\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

SpacePtr random_planar(Rng& rng, int n) {
  std::vector<std::vector<double>> coords(n, std::vector<double>(2));
  for (auto& c : coords) {
    c[0] = rng.uniform();
    c[1] = rng.uniform();
  }
  std::vector<std::vector<double>> dist(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double dx = coords[i][0] - coords[j][0];
      const double dy = coords[i][1] - coords[j][1];
      dist[i][j] = dist[j][i] = std::max(std::sqrt(dx * dx + dy * dy), 1e-6);
    }
  std::vector<double> w(n);
  for (double& v : w) v = rng.uniform(0.5, 1.5);
  return MetricSpace::from_matrix(dist, w, coords);
}

Measure random_rational(Rng& rng, const SpacePtr& sp) {
  std::vector<double> phi(sp->size());
  for (double& v : phi) v = rng.uniform_int(0, 8) / 8.0;
  return Measure(sp, std::move(phi));
}

// ---------------------------------------------------------------------------

void criterion_1_and_3() {
  const HFunction h(2.0);
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(0xACCE01);
  double worst = 0.0;
  bool bounds_ok = true;
  for (int it = 0; it < 500; ++it) {
    const SpacePtr sp = random_planar(rng, rng.uniform_int(2, 5));
    const Measure a = random_rational(rng, sp);
    const Measure b = random_rational(rng, sp);
    worst = std::max(worst, std::abs(dm(a, b, h) - dm_bruteforce(a, b, h)));
    const auto [m1, m2] = mass_bounds_check(a, b, h);
    bounds_ok = bounds_ok && m1 && m2;
  }
  const double elapsed = seconds_since(t0);
  report(1, "metric oracle equivalence (500 instances)",
         worst <= 1e-9 && elapsed < 60.0,
         "max |solver - oracle| = " + fmt(worst) + ", " + fmt(elapsed) + " s");
  report(3, "mass/support bounds on the same instances", bounds_ok,
         bounds_ok ? "both bounds hold on all 500" : "a bound failed");
}

void criterion_2() {
  const HFunction h(2.0);
  Rng rng(0xACCE02);
  bool sym = true;
  double worst_id = 0.0;
  double worst_tri = 0.0;
  for (int it = 0; it < 200; ++it) {
    const SpacePtr sp = random_planar(rng, 8);
    const Measure a = random_rational(rng, sp);
    const Measure b = random_rational(rng, sp);
    const Measure c = random_rational(rng, sp);
    sym = sym && (dm(a, b, h) == dm(b, a, h));
    worst_id = std::max(worst_id, dm(a, a, h));
    worst_tri = std::max(worst_tri, dm(a, b, h) - dm(a, c, h) - dm(c, b, h));
  }
  report(2, "metric axioms (200 triples, 8 points)",
         sym && worst_id <= 1e-12 && worst_tri <= 1e-9,
         std::string(sym ? "symmetry bitwise" : "symmetry BROKEN") +
             ", max self-distance " + fmt(worst_id) + ", max triangle excess " +
             fmt(worst_tri));
}

void criterion_4() {
  const HFunction h(2.0);
  Rng rng(0xACCE04);
  const double ps[4] = {1.0, 1.5, 2.0, 3.0};
  double worst_eq = 0.0;
  double worst_hoelder = 0.0;
  double worst_sub = 0.0;
  for (int it = 0; it < 100; ++it) {
    const SpacePtr sp = random_planar(rng, rng.uniform_int(2, 5));
    PointFunction f, g;
    f.values.resize(sp->size());
    g.values.resize(sp->size());
    for (double& v : f.values) v = rng.uniform(-2, 2);
    for (double& v : g.values) v = rng.uniform(-2, 2);
    const double p = ps[rng.uniform_int(0, 3)];
    const auto F = MeasureFunctional::induced(f);
    const auto G = MeasureFunctional::induced(g);
    worst_eq = std::max(worst_eq, std::abs(lp_norm_functional_bruteforce(sp, F, p) -
                                           lp_norm_point(*sp, f, p)));
    const auto FG =
        MeasureFunctional::tabulated([F, G](const Measure& m) { return F(m) * G(m); });
    const auto FpG =
        MeasureFunctional::tabulated([F, G](const Measure& m) { return F(m) + G(m); });
    worst_hoelder = std::max(
        worst_hoelder, lp_norm_functional_bruteforce(sp, FG, 1.0) -
                           lp_norm_functional_bruteforce(sp, F, 2.0) *
                               lp_norm_functional_bruteforce(sp, G, 2.0));
    worst_sub = std::max(worst_sub, lp_norm_functional_bruteforce(sp, FpG, p) -
                                        lp_norm_functional_bruteforce(sp, F, p) -
                                        lp_norm_functional_bruteforce(sp, G, p));
  }
  report(4, "norm equality + Hoelder + subadditivity (100 instances)",
         worst_eq <= 1e-9 && worst_hoelder <= 1e-9 && worst_sub <= 1e-9,
         "max equality gap " + fmt(worst_eq) + ", Hoelder excess " + fmt(worst_hoelder) +
             ", subadditivity excess " + fmt(worst_sub));
}

void criterion_5() {
  const HFunction h(2.0);
  // Grid spacing 0.1 spanning 4 length units with the unit block centered so
  // ten cell shifts stay inside; states are the block shifted k cells.
  auto grid = MetricSpace::grid(1, {41}, 0.1);
  std::vector<double> phi(41, 0.0);
  for (int i = 10; i <= 20; ++i) phi[i] = 1.0;
  const Curve curve = translation_curve(grid, phi, 0, +1, 10, h);
  bool ok = true;
  std::ostringstream detail;
  for (int k = 1; k <= 10; ++k) {
    const double d = dm(curve.states[0], curve.states[k], h);
    const double err = std::abs(d - 0.1 * k);
    if (err > 0.1 + 1e-12) {
      ok = false;
      detail << " k=" << k << ": dm=" << fmt(d) << " err=" << fmt(err) << ";";
    }
  }
  report(5, "translation curve isometry |dm - shift| <= spacing, k <= 10", ok,
         ok ? "all shifts within one spacing"
            : "mass-penalty shortcut undercuts relocation at large shifts:" + detail.str());
}

void criterion_6() {
  const HFunction h(2.0);
  Rng rng(0xACCE06);
  bool mass_ok = true;
  bool drift_ok = true;
  bool sum_ok = true;
  double worst_lip = 0.0;
  int splits = 0;
  while (splits < 50) {
    const int n = 26;
    auto grid = MetricSpace::grid(1, {n}, 0.1);
    std::vector<double> phi(n, 0.0);
    for (int i = 4; i < 14; ++i) phi[i] = rng.uniform_int(1, 8) / 8.0;
    const int steps = rng.uniform_int(1, 6);
    const int dir = rng.uniform() < 0.5 ? 1 : -1;
    std::vector<double> start = phi;
    if (dir < 0) {
      // leave room on the left
      std::fill(start.begin(), start.end(), 0.0);
      for (int i = 0; i < n; ++i) {
        if (phi[i] > 0 && i + 8 < n) start[i + 8] = phi[i];
      }
    }
    const Curve c = translation_curve(grid, start, 0, dir, steps, h);
    mass_ok = mass_ok && mass_drift(c) <= 1e-9;
    drift_ok = drift_ok && support_drift_ok(c, 0.1);

    const int at = rng.uniform_int(0, c.steps() - 1);
    std::vector<double> pa(n, 0.0), pb(n, 0.0);
    for (int i = 0; i < n; ++i) {
      const double t = rng.uniform();
      pa[i] = c.states[at].density(i) * t;
      pb[i] = c.states[at].density(i) - pa[i];
    }
    const auto parts = decompose_curve(c, at, {Measure(grid, pa), Measure(grid, pb)}, h);
    for (int k = 0; k < c.steps(); ++k) {
      const Measure sum = add_checked(parts[0].states[k], parts[1].states[k]);
      sum_ok = sum_ok && approx_equal(sum, c.states[k], 1e-9);
    }
    for (const auto& p : parts) worst_lip = std::max(worst_lip, p.lip_cert);
    ++splits;
  }
  report(6, "curve invariants + 50 random splits",
         mass_ok && drift_ok && sum_ok && worst_lip <= 1.0 + 1e-6,
         std::string("mass ") + (mass_ok ? "constant" : "DRIFTED") + ", support drift " +
             (drift_ok ? "within one cell" : "EXCEEDED") + ", components " +
             (sum_ok ? "sum exactly" : "DO NOT SUM") + ", max component constant " +
             fmt(worst_lip));
}

struct Grid1D {
  SpacePtr grid;
  PointFunction fsin;
  int n = 0;
  double delta = 0.0;
};

Grid1D make_sine_grid() {
  Grid1D g;
  g.n = 256;
  g.delta = 2.0 * std::numbers::pi / (g.n - 1);
  g.grid = MetricSpace::grid(1, {g.n}, g.delta);
  g.fsin.values.resize(g.n);
  for (int i = 0; i < g.n; ++i) g.fsin.values[i] = std::sin(g.grid->coord(i, 0));
  return g;
}

void criterion_7(const Grid1D& G) {
  const HFunction h(2.0);
  {
    const auto t0 = std::chrono::steady_clock::now();
    GradientFieldOptions opts;  // rho = 2 delta, scales {1,2,4} delta, extrapolated
    const GradientField field = gradient_field(G.grid, G.fsin, h, opts);
    double worst = 0.0;
    for (int i = 0; i < G.n; ++i) {
      if (field.excluded[i]) continue;
      worst = std::max(worst,
                       std::abs(field.values[i] - std::abs(std::cos(G.grid->coord(i, 0)))));
    }
    const double sob = sobolev_norm(*G.grid, G.fsin, 2.0, field);
    const double target = std::sqrt(2.0 * std::numbers::pi);
    const double rel = std::abs(sob - target) / target;
    const double elapsed = seconds_since(t0);
    report(7, "gradient recovery, line grid N=256 (sine)",
           worst <= 0.05 && rel <= 0.03 && elapsed < 300.0,
           "max field error " + fmt(worst) + " (<= 0.05), norm rel error " + fmt(rel) +
               " (<= 0.03), " + fmt(elapsed) + " s");
  }
  {
    const auto t0 = std::chrono::steady_clock::now();
    const int n = 64;
    const double delta = 2.0 / (n - 1);
    auto grid = MetricSpace::grid(2, {n, n}, delta);
    PointFunction f;
    f.values.resize(grid->size());
    for (int i = 0; i < grid->size(); ++i) {
      const double x = grid->coord(i, 0) - 1.0;
      const double y = grid->coord(i, 1) - 1.0;
      f.values[i] = x * x + y * y;
    }
    GradientFieldOptions opts;
    const GradientField field = gradient_field(grid, f, h, opts);
    double fd_max = 0.0;
    for (int i = 0; i < grid->size(); ++i) {
      if (field.excluded[i]) continue;
      const double x = grid->coord(i, 0) - 1.0;
      const double y = grid->coord(i, 1) - 1.0;
      fd_max = std::max(fd_max, 2.0 * std::sqrt(x * x + y * y));
    }
    double worst = 0.0;
    for (int i = 0; i < grid->size(); ++i) {
      if (field.excluded[i]) continue;
      const double x = grid->coord(i, 0) - 1.0;
      const double y = grid->coord(i, 1) - 1.0;
      const double truth = 2.0 * std::sqrt(x * x + y * y);
      worst = std::max(worst,
                       std::abs(field.values[i] - truth) / std::max(truth, 0.1 * fd_max));
    }
    const double elapsed = seconds_since(t0);
    report(7, "gradient recovery, square grid N=64x64 (paraboloid)",
           worst <= 0.08 && elapsed < 300.0,
           "max relative field error " + fmt(worst) + " (<= 0.08), " + fmt(elapsed) + " s");
  }
}

void criterion_8(const Grid1D& G) {
  const HFunction h(2.0);
  const double rho = 2.0 * G.delta;
  const std::vector<double> scales{G.delta, 2 * G.delta, 4 * G.delta};

  PointFunction fcos;
  fcos.values.resize(G.n);
  for (int i = 0; i < G.n; ++i) fcos.values[i] = std::cos(G.grid->coord(i, 0));
  const auto Fs = MeasureFunctional::induced(G.fsin);
  const auto Fc = MeasureFunctional::induced(fcos);

  // Estimator identities on exactly anchored ensembles at sampled probes.
  Rng rng(0xACCE08);
  double worst_hom = 0.0;
  double worst_sub = 0.0;
  double worst_lat = 0.0;
  for (int it = 0; it < 10; ++it) {
    const int x = rng.uniform_int(16, G.n - 17);
    CurveEnsemble ens = grid_probe_ensemble(G.grid, x, rho, scales, h);
    std::vector<Curve> keep;
    for (auto& c : ens.curves) {
      if (approx_equal(c.states[0], ens.anchor, 1e-12)) keep.push_back(std::move(c));
    }
    ens.curves = std::move(keep);
    const double rF = upper_gradient_estimate(Fs, ens.anchor, ens);
    const double rG = upper_gradient_estimate(Fc, ens.anchor, ens);
    const double a = rng.uniform(-3, 3);
    const auto aF = MeasureFunctional::tabulated(
        [a, Fs](const Measure& m) { return a * Fs(m); });
    worst_hom = std::max(
        worst_hom, std::abs(upper_gradient_estimate(aF, ens.anchor, ens) - std::abs(a) * rF));
    const auto sum = MeasureFunctional::tabulated(
        [Fs, Fc](const Measure& m) { return Fs(m) + Fc(m); });
    worst_sub = std::max(worst_sub, upper_gradient_estimate(sum, ens.anchor, ens) - rF - rG);
    const auto vee = MeasureFunctional::tabulated(
        [Fs, Fc](const Measure& m) { return std::max(Fs(m), Fc(m)); });
    worst_lat =
        std::max(worst_lat, upper_gradient_estimate(vee, ens.anchor, ens) - std::max(rF, rG));
  }

  // Field calculus with pinned tolerances on the same grid.
  GradientFieldOptions opts;
  const GradientField gs = gradient_field(G.grid, G.fsin, h, opts);
  const GradientField gc = gradient_field(G.grid, fcos, h, opts);

  PointFunction fsq, fprod, fclip;
  fsq.values.resize(G.n);
  fprod.values.resize(G.n);
  fclip.values.resize(G.n);
  for (int i = 0; i < G.n; ++i) {
    fsq.values[i] = G.fsin.values[i] * G.fsin.values[i];
    fprod.values[i] = G.fsin.values[i] * fcos.values[i];
    fclip.values[i] = std::min(G.fsin.values[i], 0.5);
  }
  const GradientField gsq = gradient_field(G.grid, fsq, h, opts);
  const GradientField gp = gradient_field(G.grid, fprod, h, opts);
  const GradientField gclip = gradient_field(G.grid, fclip, h, opts);

  double worst_chain = 0.0;
  double worst_prod = 0.0;
  double worst_loc = 0.0;
  const double margin = 2.0 * G.delta + G.delta;  // probe radius + one cell
  for (int i = 0; i < G.n; ++i) {
    if (gsq.excluded[i]) continue;
    worst_chain = std::max(
        worst_chain, gsq.values[i] - 2.0 * std::abs(G.fsin.values[i]) * gs.values[i]);
    worst_prod = std::max(worst_prod,
                          gp.values[i] - (std::abs(G.fsin.values[i]) * gc.values[i] +
                                          std::abs(fcos.values[i]) * gs.values[i]));
    double dist_to_set = 1e9;
    for (int j = 0; j + 1 < G.n; ++j) {
      if ((G.fsin.values[j] - 0.5) * (G.fsin.values[j + 1] - 0.5) <= 0.0) {
        dist_to_set =
            std::min(dist_to_set, std::abs(G.grid->coord(i, 0) - G.grid->coord(j, 0)));
      }
    }
    if (dist_to_set > margin) {
      const double expect = G.fsin.values[i] < 0.5 ? gs.values[i] : 0.0;
      worst_loc = std::max(worst_loc, std::abs(gclip.values[i] - expect));
    }
  }

  const bool pass = worst_hom <= 1e-12 && worst_sub <= 1e-12 && worst_lat <= 1e-12 &&
                    worst_chain <= 0.01 && worst_prod <= 0.01 && worst_loc <= 0.05;
  report(8, "gradient calculus (homogeneity/subadd/lattice/chain/product/locality)", pass,
         "homogeneity gap " + fmt(worst_hom) + ", subadd excess " + fmt(worst_sub) +
             ", lattice excess " + fmt(worst_lat) + ", chain excess " + fmt(worst_chain) +
             " (<= 0.01), product excess " + fmt(worst_prod) + " (<= 0.01), locality gap " +
             fmt(worst_loc) + " (<= 0.05)");
}

void criterion_9() {
  const HFunction h(2.0);
  auto grid = MetricSpace::grid(1, {64}, 0.05);
  std::vector<double> phi(64, 0.0);
  for (int i = 10; i < 26; ++i) phi[i] = 1.0;
  const Curve curve = translation_curve(grid, phi, 0, +1, 10, h);
  PointFunction f;
  f.values.resize(64);
  for (int i = 0; i < 64; ++i) f.values[i] = grid->coord(i, 0);
  const auto F = MeasureFunctional::induced(f);
  const FundamentalCheck check =
      fundamental_inequality_check(F, curve, std::vector<double>(curve.steps(), 1.0));
  report(9, "fundamental inequality with near-equality (linear profile)",
         check.holds && check.max_relative_gap <= 2.0 * 0.05,
         std::string(check.holds ? "holds" : "VIOLATED") + ", relative gap " +
             fmt(check.max_relative_gap) + " (<= 0.1)");
}

void criterion_10() {
  const HFunction h(2.0);
  // Unit block vs the block with its upper half shifted by t; everything has
  // mass one, so the normalized transport distance is directly comparable.
  const int n = 27;
  auto grid = MetricSpace::grid(1, {n}, 0.05);
  bool ok = true;
  std::ostringstream detail;
  for (double t : {0.1, 0.2}) {
    const int k = static_cast<int>(std::lround(t / 0.05));
    std::vector<double> p(n, 0.0), q(n, 0.0);
    for (int i = 0; i < 20; ++i) p[i] = 1.0;
    for (int i = 0; i < 10; ++i) q[i] = 1.0;
    for (int i = 10; i < 20; ++i) q[i + k] = 1.0;
    const Measure a(grid, p);
    const Measure b(grid, q);
    const double d = dm(a, b, h);
    const double w = w1(a, b);
    detail << " t=" << t << ": dm=" << fmt(d) << " w1=" << fmt(w) << ";";
    ok = ok && std::abs(d - t) <= 0.05 + 1e-12 && std::abs(w - t / 2) <= 0.05 + 1e-12;
  }
  // Mixture bound on random pairs.
  Rng rng(0xACCE10);
  double worst = 0.0;
  for (int it = 0; it < 100; ++it) {
    const SpacePtr sp = random_planar(rng, 6);
    const Measure a = random_rational(rng, sp);
    const Measure b = random_rational(rng, sp);
    const double base = dm(a, b, h);
    const double t = rng.uniform();
    std::vector<double> mix(sp->size());
    for (int i = 0; i < sp->size(); ++i) mix[i] = (1 - t) * a.density(i) + t * b.density(i);
    worst = std::max(worst, dm(a, Measure(sp, std::move(mix)), h) - base);
  }
  ok = ok && worst <= 1e-9;
  report(10, "split-interval comparison and mixture bound", ok,
         detail.str() + " mixture excess " + fmt(worst));
}

void criterion_11() {
  Rng rng(0xACCE11);
  bool recovered = true;
  for (int it = 0; it < 50 && recovered; ++it) {
    const SpacePtr sp = random_planar(rng, rng.uniform_int(2, 6));
    PointFunction f;
    f.values.resize(sp->size());
    for (double& v : f.values) v = rng.uniform(-2, 2);
    const auto F = MeasureFunctional::induced(f);
    const auto tab = MeasureFunctional::tabulated([F](const Measure& m) { return F(m); });
    const auto got = representability_check(sp, tab, 1e-9, rng.bits());
    recovered = got.has_value();
    if (recovered) {
      for (int i = 0; i < sp->size(); ++i) {
        recovered = recovered && std::abs(got->values[i] - f.values[i]) <= 1e-9;
      }
    }
  }
  const SpacePtr sp = random_planar(rng, 4);
  const auto total =
      MeasureFunctional::tabulated([](const Measure& m) { return m.total_mass(); });
  const bool rejected = !representability_check(sp, total, 1e-9, rng.bits()).has_value();
  report(11, "representability (recover 50, reject total mass)", recovered && rejected,
         std::string(recovered ? "all recovered" : "recovery FAILED") + ", total mass " +
             (rejected ? "rejected" : "wrongly ACCEPTED"));
}

void criterion_12() {
#ifndef MMS_CLI_PATH
  report(12, "determinism of the verification tool", false, "CLI not built");
#else
  const std::string cli = MMS_CLI_PATH;
  const std::string out1 = "/tmp/mms_accept_report1.json";
  const std::string out2 = "/tmp/mms_accept_report2.json";
  const std::string cmd_base =
      cli + " verify --suite all --seed 7 --n 12 2>/dev/null";
  const int rc1 = std::system((cmd_base + " --out " + out1).c_str());
  const int rc2 = std::system((cmd_base + " --out " + out2).c_str());
  auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  };
  const std::string r1 = slurp(out1);
  const std::string r2 = slurp(out2);
  const bool pass = rc1 == 0 && rc2 == 0 && !r1.empty() && r1 == r2;
  report(12, "determinism of the verification tool", pass,
         pass ? "two seeded runs byte-identical, all suites green"
              : "runs differ or a suite failed (exit " + std::to_string(rc1) + "/" +
                    std::to_string(rc2) + ")");
  std::remove(out1.c_str());
  std::remove(out2.c_str());
#endif
}

}  // namespace

int main() {
  criterion_1_and_3();
  criterion_2();
  criterion_4();
  criterion_5();
  criterion_6();
  const Grid1D G = make_sine_grid();
  criterion_7(G);
  criterion_8(G);
  criterion_9();
  criterion_10();
  criterion_11();
  criterion_12();

  std::printf("%s: %d criterion check(s) failed\n", g_failures == 0 ? "OK" : "FAILURES",
              g_failures);
  return g_failures == 0 ? 0 : 1;
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mms/errors.hpp"
#include "mms/gradient.hpp"

using namespace mms;

namespace {
const HFunction kH(2.0);

SpacePtr line_grid(int n, double delta) { return MetricSpace::grid(1, {n}, delta); }

PointFunction sample(const MetricSpace& g, double (*fn)(double)) {
  PointFunction f;
  f.values.resize(g.size());
  for (int i = 0; i < g.size(); ++i) f.values[i] = fn(g.coord(i, 0));
  return f;
}
}  // namespace

TEST_CASE("estimate is zero for constant functionals") {
  auto g = line_grid(32, 0.1);
  const CurveEnsemble ens = grid_probe_ensemble(g, 16, 0.2, {0.1, 0.2, 0.4}, kH);
  const auto C = MeasureFunctional::tabulated([](const Measure&) { return 42.0; });
  CHECK(upper_gradient_estimate(C, ens.anchor, ens) == 0.0);
  CHECK_THROWS_AS(upper_gradient_estimate(C, Measure::zero(g), ens), std::invalid_argument);
}

TEST_CASE("estimate recovers the slope of a linear function") {
  auto g = line_grid(64, 0.1);
  const PointFunction f = sample(*g, [](double x) { return x; });
  const auto F = MeasureFunctional::induced(f);
  const CurveEnsemble ens = grid_probe_ensemble(g, 32, 0.2, {0.1, 0.2, 0.4}, kH);
  // Translating the probe shifts the mean by exactly the step.
  CHECK(upper_gradient_estimate(F, ens.anchor, ens) == doctest::Approx(1.0).epsilon(1e-12));
  const GradientProfile prof = upper_gradient_profile(F, ens.anchor, ens);
  for (double v : prof.per_scale) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(prof.richardson == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("estimator homogeneity is exact on a shared ensemble") {
  auto g = line_grid(48, 0.1);
  const PointFunction f = sample(*g, [](double x) { return std::sin(1.3 * x); });
  const auto F = MeasureFunctional::induced(f);
  const CurveEnsemble ens = grid_probe_ensemble(g, 24, 0.2, {0.1, 0.2}, kH);
  const double base = upper_gradient_estimate(F, ens.anchor, ens);
  for (double a : {-2.0, 0.0, 0.5, 3.0}) {
    const auto aF = MeasureFunctional::tabulated(
        [a, F](const Measure& m) { return a * F(m); });
    CHECK(upper_gradient_estimate(aF, ens.anchor, ens) ==
          doctest::Approx(std::abs(a) * base).epsilon(1e-12));
  }
}

TEST_CASE("ensemble rejects foreign anchors and over-dominating starts") {
  auto g = line_grid(32, 0.1);
  CurveEnsemble ens = grid_probe_ensemble(g, 16, 0.2, {0.1}, kH);
  const auto F = MeasureFunctional::induced(sample(*g, [](double x) { return x; }));
  const Measure other = Measure::indicator(g, ball(*g, 10, 0.2));
  CHECK_THROWS_AS(upper_gradient_estimate(F, other, ens), MismatchError);
  // A curve starting above the anchor is not a valid probe.
  CurveEnsemble bad = ens;
  Curve c;
  c.times = {0.0, 0.1};
  c.states = {Measure::indicator(g, ball(*g, 16, 0.5)), Measure::indicator(g, ball(*g, 16, 0.5))};
  c.lip_cert = 0.0;
  bad.curves.push_back(c);
  CHECK_THROWS_AS(upper_gradient_estimate(F, ens.anchor, bad), std::invalid_argument);
}

TEST_CASE("gradient field on simple profiles") {
  auto g = line_grid(96, 0.05);
  GradientFieldOptions opts;  // rho = 2 delta, scales {1,2,4} delta

  const GradientField flat = gradient_field(g, PointFunction{std::vector<double>(96, 7.0)},
                                            kH, opts);
  for (double v : flat.values) CHECK(v <= 1e-12);

  const GradientField lin = gradient_field(g, sample(*g, [](double x) { return x; }), kH, opts);
  for (int i = 0; i < 96; ++i) {
    if (!lin.excluded[i]) CHECK(lin.values[i] == doctest::Approx(1.0).epsilon(1e-9));
  }
  // Boundary cells are flagged, not computed.
  CHECK(lin.excluded[0] == 1);
  CHECK(lin.values[0] == 0.0);
}

TEST_CASE("gradient field sees the kink only near the kink") {
  auto g = line_grid(96, 0.05);
  const double c = g->coord(48, 0);
  PointFunction f;
  f.values.resize(96);
  for (int i = 0; i < 96; ++i) f.values[i] = std::abs(g->coord(i, 0) - c);
  GradientFieldOptions opts;
  const GradientField field = gradient_field(g, f, kH, opts);
  const double margin = 2 * 0.05 + 4 * 0.05 + 0.05;
  for (int i = 0; i < 96; ++i) {
    if (field.excluded[i]) continue;
    CHECK(field.values[i] <= 1.0 + 1e-9);
    if (std::abs(g->coord(i, 0) - c) > margin) {
      CHECK(field.values[i] == doctest::Approx(1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("fundamental inequality along a linear translation") {
  auto g = line_grid(64, 0.1);
  std::vector<double> phi(64, 0.0);
  for (int i = 10; i < 22; ++i) phi[i] = 1.0;
  const Curve curve = translation_curve(g, phi, 0, +1, 8, kH);
  const auto F = MeasureFunctional::induced(sample(*g, [](double x) { return x; }));

  const FundamentalCheck good =
      fundamental_inequality_check(F, curve, std::vector<double>(curve.steps(), 1.0));
  CHECK(good.holds);
  CHECK(good.max_relative_gap <= 1e-9);  // both sides equal s exactly

  const FundamentalCheck bad =
      fundamental_inequality_check(F, curve, std::vector<double>(curve.steps(), 0.0));
  CHECK_FALSE(bad.holds);

  const auto C = MeasureFunctional::tabulated([](const Measure&) { return 1.0; });
  CHECK(fundamental_inequality_check(C, curve, std::vector<double>(curve.steps(), 0.0)).holds);
}

TEST_CASE("sobolev norm basics") {
  auto g = line_grid(32, 0.1);
  GradientField field;
  field.values.assign(32, 0.0);
  field.excluded.assign(32, 0);
  field.rho = 0.2;

  PointFunction zero{std::vector<double>(32, 0.0)};
  CHECK(sobolev_norm(*g, zero, 2.0, field) == 0.0);

  PointFunction one{std::vector<double>(32, 1.0)};
  CHECK(sobolev_norm(*g, one, 2.0, field) ==
        doctest::Approx(std::sqrt(g->total_weight())));
}

TEST_CASE("euclidean comparison on a linear profile") {
  auto g = line_grid(80, 0.05);
  const PointFunction f = sample(*g, [](double x) { return x; });
  const CompareReport rep = euclidean_compare(g, f, 2.0, kH);
  CHECK(rep.max_abs_err <= 1e-9);
  CHECK(rep.norm_rel_error <= 1e-9);
  REQUIRE(!rep.points.empty());
  for (const auto& p : rep.points) {
    CHECK(p.fd_grad == doctest::Approx(1.0));
    CHECK(p.g_est == doctest::Approx(1.0).epsilon(1e-9));
  }

  const CompareReport flat =
      euclidean_compare(g, PointFunction{std::vector<double>(80, 2.0)}, 2.0, kH);
  CHECK(flat.max_abs_err == 0.0);
  CHECK(flat.sobolev_estimated == doctest::Approx(flat.sobolev_classical));
}

TEST_CASE("sine field approximates the cosine magnitude") {
  const int n = 96;
  const double delta = 2.0 * std::numbers::pi / (n - 1);
  auto g = line_grid(n, delta);
  const PointFunction f = sample(*g, [](double x) { return std::sin(x); });
  GradientFieldOptions opts;
  const GradientField field = gradient_field(g, f, kH, opts);
  for (int i = 0; i < n; ++i) {
    if (field.excluded[i]) continue;
    CHECK(field.values[i] ==
          doctest::Approx(std::abs(std::cos(g->coord(i, 0)))).epsilon(0.05));
  }
}

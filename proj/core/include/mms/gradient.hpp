#pragma once

#include <vector>

#include "mms/curve.hpp"
#include "mms/functional.hpp"
#include "mms/measure.hpp"

namespace mms {

/// A declared family of curves used to probe difference quotients around an
/// anchor measure. Every curve must start either at the anchor itself or at a
/// sub-measure of it (densities dominated by the anchor's); for mean-value
/// functionals, monotonicity of the quotient sup in the measure makes
/// sub-anchored curves valid lower-bound probes. Scales are evaluation
/// offsets; each curve is read at its own grid time nearest a requested
/// scale, and quotients divide by the actual time stretched by the curve's
/// certificate when it exceeds 1.
struct CurveEnsemble {
  Measure anchor;
  std::vector<Curve> curves;
  std::vector<double> scales;
};

/// Largest difference quotient over the ensemble: a lower bound of the ideal
/// small-scale sup, exact on the declared set, deterministic.
double upper_gradient_estimate(const MeasureFunctional& F, const Measure& anchor,
                               const CurveEnsemble& ensemble);

struct GradientProfile {
  /// Max quotient per requested scale.
  std::vector<double> per_scale;
  /// Per-curve two-point Richardson extrapolation toward zero offset using the
  /// two smallest scales, maxed over curves and clamped at 0. Reported next to
  /// the raw scales, never silently substituted.
  double richardson = 0.0;
};
GradientProfile upper_gradient_profile(const MeasureFunctional& F, const Measure& anchor,
                                       const CurveEnsemble& ensemble);

/// Default probe family on a uniform grid around point x: the full-density
/// ball of radius rho translated one lattice offset per step along every
/// nonzero offset in {-1,0,1}^dim (diagonal shifts run on a sqrt-scaled time
/// grid), plus expanding dilations anchored at radii rho and rho/2 (the
/// latter a sub-measure of the probe).
CurveEnsemble grid_probe_ensemble(const SpacePtr& space, int x, double rho,
                                  const std::vector<double>& scales, const HFunction& h);

struct GradientField {
  std::vector<double> values;   // nonnegative; 0 at excluded points
  std::vector<char> excluded;   // boundary points whose probes would exit
  double rho = 0.0;
  std::vector<double> scales;
  bool richardson = true;
};

struct GradientFieldOptions {
  double rho = 0.0;              // 0 = 2 * grid spacing
  std::vector<double> scales;    // empty = {1, 2, 4} * spacing
  bool richardson = true;
  int jobs = 0;                  // 0 = default_jobs()
};

/// Pointwise estimates g[x] = upper_gradient_estimate(F_f, ball probe at x).
/// Points whose probe or shifted/expanded supports would leave the grid are
/// flagged excluded and not computed.
GradientField gradient_field(const SpacePtr& space, const PointFunction& f,
                             const HFunction& h, const GradientFieldOptions& opts = {});

struct FundamentalCheck {
  bool holds = false;
  /// Largest violation of |F(state_s) - F(state_0)| <= integral, as a gap.
  double max_violation = 0.0;
  /// Largest relative slack (integral - increment) / max(increment, 1e-12).
  double max_relative_gap = 0.0;
};

/// Trapezoid integral of the supplied per-state gradient values must dominate
/// |F(state_s) - F(state_0)| at every grid time, within 1e-6 plus half the
/// largest adjacent jump of g times the step (integration error allowance).
FundamentalCheck fundamental_inequality_check(const MeasureFunctional& F, const Curve& curve,
                                              const std::vector<double>& g_along);

/// (|f|_p^p + |g|_p^p)^{1/p} over the non-excluded points.
double sobolev_norm(const MetricSpace& space, const PointFunction& f, double p,
                    const GradientField& gradient);

struct ComparePoint {
  int point = 0;
  double g_est = 0.0;
  double fd_grad = 0.0;
  double abs_err = 0.0;
};

struct CompareReport {
  double sobolev_estimated = 0.0;  // via the gradient field
  double sobolev_classical = 0.0;  // via central finite differences
  double norm_rel_error = 0.0;
  double max_abs_err = 0.0;
  double max_rel_err = 0.0;  // relative to max(|fd|, 0.1 * field max)
  std::vector<ComparePoint> points;  // interior points only
};

/// Field vs. central finite differences of f on the same interior.
CompareReport euclidean_compare(const SpacePtr& space, const PointFunction& f, double p,
                                const HFunction& h, const GradientFieldOptions& opts = {});

/// |grad f| by central differences; boundary cells get 0 and are reported in
/// the excluded mask.
std::pair<std::vector<double>, std::vector<char>> finite_difference_gradient(
    const MetricSpace& space, const PointFunction& f);

}  // namespace mms

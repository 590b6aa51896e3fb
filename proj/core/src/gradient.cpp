#include "mms/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mms/errors.hpp"
#include "mms/parallel.hpp"

namespace mms {

namespace {

constexpr double kAnchorTol = 1e-9;

void check_ensemble(const CurveEnsemble& ens) {
  if (ens.curves.empty()) throw std::invalid_argument("ensemble: no curves");
  if (ens.scales.empty()) throw std::invalid_argument("ensemble: no scales");
  for (double s : ens.scales) {
    if (!(s > 0.0)) throw std::invalid_argument("ensemble: scales must be > 0");
  }
  for (const auto& c : ens.curves) {
    if (c.states.empty()) throw std::invalid_argument("ensemble: empty curve");
    if (!same_space(c.states[0], ens.anchor)) {
      throw MismatchError("ensemble: curve on wrong space");
    }
    for (int i = 0; i < ens.anchor.space().size(); ++i) {
      if (c.states[0].density(i) > ens.anchor.density(i) + kAnchorTol) {
        throw std::invalid_argument(
            "ensemble: curve start must be the anchor or a sub-measure of it");
      }
    }
  }
}

// Closed ball with a relative slack so cells sitting exactly at the radius
// stay in regardless of floating rounding in the distance table.
PointSet snapped_ball(const MetricSpace& sp, int center, double radius) {
  return ball(sp, center, radius + 1e-9 * std::max(1.0, radius));
}

// State index of curve c whose time is nearest to the requested scale
// (never the start state). Returns -1 when the curve is too short.
int state_for_scale(const Curve& c, double scale) {
  if (c.steps() < 2) return -1;
  const double step = c.times[1] - c.times[0];
  int k = std::max(1, static_cast<int>(std::llround(scale / step)));
  if (k >= c.steps()) return -1;
  return k;
}

double quotient(const MeasureFunctional& F, const Curve& c, int k) {
  const double t = (c.times[k] - c.times[0]) * std::max(1.0, c.lip_cert);
  return std::abs(F(c.states[k]) - F(c.states[0])) / t;
}

}  // namespace

double upper_gradient_estimate(const MeasureFunctional& F, const Measure& anchor,
                               const CurveEnsemble& ensemble) {
  if (anchor.is_zero()) throw std::invalid_argument("upper_gradient_estimate: zero anchor");
  if (!approx_equal(anchor, ensemble.anchor, kAnchorTol)) {
    throw MismatchError("upper_gradient_estimate: ensemble anchored elsewhere");
  }
  check_ensemble(ensemble);
  double best = 0.0;
  for (const auto& c : ensemble.curves) {
    for (double s : ensemble.scales) {
      const int k = state_for_scale(c, s);
      if (k > 0) best = std::max(best, quotient(F, c, k));
    }
  }
  return best;
}

GradientProfile upper_gradient_profile(const MeasureFunctional& F, const Measure& anchor,
                                       const CurveEnsemble& ensemble) {
  if (anchor.is_zero()) throw std::invalid_argument("upper_gradient_profile: zero anchor");
  if (!approx_equal(anchor, ensemble.anchor, kAnchorTol)) {
    throw MismatchError("upper_gradient_profile: ensemble anchored elsewhere");
  }
  check_ensemble(ensemble);

  GradientProfile out;
  out.per_scale.assign(ensemble.scales.size(), 0.0);
  for (const auto& c : ensemble.curves) {
    for (std::size_t si = 0; si < ensemble.scales.size(); ++si) {
      const int k = state_for_scale(c, ensemble.scales[si]);
      if (k > 0) out.per_scale[si] = std::max(out.per_scale[si], quotient(F, c, k));
    }
  }

  const double s0 = *std::min_element(ensemble.scales.begin(), ensemble.scales.end());
  for (const auto& c : ensemble.curves) {
    const int k1 = state_for_scale(c, s0);
    if (k1 <= 0 || 2 * k1 >= c.steps()) continue;
    const double q1 = quotient(F, c, k1);
    const double q2 = quotient(F, c, 2 * k1);
    // Clamp the extrapolation into [0, q1]: outside that range it would
    // exceed a raw quotient, which only happens when the linear-bias model
    // does not apply (kinks, extrema) and the raw estimate is the safer one.
    const double extrapolated = std::clamp(2.0 * q1 - q2, 0.0, q1);
    out.richardson = std::max(out.richardson, extrapolated);
  }
  return out;
}

CurveEnsemble grid_probe_ensemble(const SpacePtr& space, int x, double rho,
                                  const std::vector<double>& scales, const HFunction& h) {
  if (!space->grid_info()) {
    throw std::invalid_argument("grid_probe_ensemble: requires a grid-built space");
  }
  const GridInfo& g = *space->grid_info();
  if (!(rho >= g.delta)) {
    throw std::invalid_argument("grid_probe_ensemble: rho must be >= grid spacing");
  }
  for (int i = 1; i < space->size(); ++i) {
    if (space->weight(i) != space->weight(0)) {
      throw std::invalid_argument(
          "grid_probe_ensemble: requires uniform cell weights (lattice shifts preserve "
          "mass only then)");
    }
  }

  CurveEnsemble ens{Measure::indicator(space, snapped_ball(*space, x, rho)), {}, scales};
  const double smax = *std::max_element(scales.begin(), scales.end());
  const double smin = *std::min_element(scales.begin(), scales.end());

  // Lattice translations, one offset vector per step; +1 extra state so the
  // smallest scale always has its doubled partner for extrapolation.
  std::vector<std::vector<int>> offsets;
  {
    std::vector<int> v(g.dim, -1);
    while (true) {
      bool nonzero = false;
      for (int a : v) nonzero |= (a != 0);
      if (nonzero) offsets.push_back(v);
      int a = g.dim - 1;
      for (; a >= 0; --a) {
        if (++v[a] <= 1) break;
        v[a] = -1;
      }
      if (a < 0) break;
    }
  }
  for (const auto& off : offsets) {
    double norm2 = 0.0;
    for (int a : off) norm2 += static_cast<double>(a) * a;
    const double step = std::sqrt(norm2) * g.delta;
    // Enough states for the largest scale and for doubling the smallest one
    // (two-point extrapolation).
    const int steps = std::max(std::max(1, static_cast<int>(std::llround(smax / step))),
                               2 * std::max(1, static_cast<int>(std::llround(smin / step))));

    std::vector<Measure> states;
    std::vector<double> times;
    std::vector<double> phi(ens.anchor.densities());
    states.emplace_back(space, phi);
    times.push_back(0.0);
    for (int k = 1; k <= steps; ++k) {
      std::vector<double> shifted(space->size(), 0.0);
      for (int i = 0; i < space->size(); ++i) {
        if (phi[i] == 0.0) continue;
        std::vector<int> cell = space->grid_cell(i);
        for (int a = 0; a < g.dim; ++a) cell[a] += off[a];
        const int j = space->grid_index(cell);
        if (j < 0) throw std::invalid_argument("grid_probe_ensemble: probe exits the grid");
        shifted[j] = phi[i];
      }
      phi = std::move(shifted);
      states.emplace_back(space, phi);
      times.push_back(k * step);
    }
    Curve c;
    c.times = std::move(times);
    c.states = std::move(states);
    c.lip_cert = 1.0;  // lattice shifts move every atom by exactly `step`
    c.rectifiable = true;
    ens.curves.push_back(std::move(c));
  }

  // Expanding dilations anchored at the probe ball and at the half ball
  // (a sub-measure of the probe).
  for (const double r : {rho, 0.5 * rho}) {
    if (r < g.delta) continue;
    const int steps = std::max(std::max(1, static_cast<int>(std::llround(smax / g.delta))),
                               2 * std::max(1, static_cast<int>(std::llround(smin / g.delta))));
    ens.curves.push_back(dilation_curve(space, x, r, steps, h, /*validate=*/false));
  }
  return ens;
}

GradientField gradient_field(const SpacePtr& space, const PointFunction& f,
                             const HFunction& h, const GradientFieldOptions& opts) {
  if (!space->grid_info()) {
    throw std::invalid_argument("gradient_field: requires a grid-built space");
  }
  const GridInfo& g = *space->grid_info();
  if (static_cast<int>(f.values.size()) != space->size()) {
    throw MismatchError("gradient_field: point function length mismatch");
  }

  GradientField field;
  field.rho = opts.rho > 0.0 ? opts.rho : 2.0 * g.delta;
  field.scales = opts.scales;
  if (field.scales.empty()) field.scales = {g.delta, 2.0 * g.delta, 4.0 * g.delta};
  field.richardson = opts.richardson;
  if (!(field.rho >= g.delta)) {
    throw std::invalid_argument("gradient_field: rho must be >= grid spacing");
  }

  const int n = space->size();
  field.values.assign(n, 0.0);
  field.excluded.assign(n, 0);

  const double smax = *std::max_element(field.scales.begin(), field.scales.end());
  const double smin = *std::min_element(field.scales.begin(), field.scales.end());
  // Reach of the probes: the ball translated or grown by the largest scale
  // (the doubled smallest scale when that is bigger).
  const double reach = field.rho + std::max(smax, 2.0 * smin) + 1e-12;
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < g.dim; ++a) {
      const double c = space->coord(i, a);
      if (c - reach < -1e-12 || c + reach > (g.extents[a] - 1) * g.delta + 1e-12) {
        field.excluded[i] = 1;
        break;
      }
    }
  }

  const MeasureFunctional F = MeasureFunctional::induced(f);
  const int jobs = opts.jobs > 0 ? opts.jobs : default_jobs();
  parallel_for(n, jobs, [&](int i) {
    if (field.excluded[i]) return;
    const CurveEnsemble ens = grid_probe_ensemble(space, i, field.rho, field.scales, h);
    if (field.richardson) {
      field.values[i] = upper_gradient_profile(F, ens.anchor, ens).richardson;
    } else {
      field.values[i] = upper_gradient_estimate(F, ens.anchor, ens);
    }
  });
  return field;
}

FundamentalCheck fundamental_inequality_check(const MeasureFunctional& F, const Curve& curve,
                                              const std::vector<double>& g_along) {
  if (g_along.size() != curve.states.size()) {
    throw MismatchError("fundamental_inequality_check: gradient samples per state required");
  }
  FundamentalCheck out;
  out.holds = true;

  double max_jump = 0.0;
  for (std::size_t k = 0; k + 1 < g_along.size(); ++k) {
    max_jump = std::max(max_jump, std::abs(g_along[k + 1] - g_along[k]));
  }
  double max_step = 0.0;
  for (std::size_t k = 0; k + 1 < curve.times.size(); ++k) {
    max_step = std::max(max_step, curve.times[k + 1] - curve.times[k]);
  }
  const double tol = 1e-6 + 0.5 * max_step * max_jump;

  const double f0 = F(curve.states[0]);
  double integral = 0.0;
  for (int k = 1; k < curve.steps(); ++k) {
    const double dt = curve.times[k] - curve.times[k - 1];
    integral += 0.5 * dt * (g_along[k - 1] + g_along[k]);
    const double increment = std::abs(F(curve.states[k]) - f0);
    if (increment > integral + tol) {
      out.holds = false;
      out.max_violation = std::max(out.max_violation, increment - integral);
    }
    out.max_relative_gap = std::max(
        out.max_relative_gap, (integral - increment) / std::max(increment, 1e-12));
  }
  return out;
}

double sobolev_norm(const MetricSpace& space, const PointFunction& f, double p,
                    const GradientField& gradient) {
  if (!(p >= 1.0)) throw std::invalid_argument("sobolev_norm: p must be >= 1");
  if (static_cast<int>(f.values.size()) != space.size() ||
      static_cast<int>(gradient.values.size()) != space.size()) {
    throw MismatchError("sobolev_norm: length mismatch");
  }
  double acc = 0.0;
  for (int i = 0; i < space.size(); ++i) {
    if (gradient.excluded[i]) continue;
    acc += std::pow(std::abs(f.values[i]), p) * space.weight(i);
    acc += std::pow(gradient.values[i], p) * space.weight(i);
  }
  return std::pow(acc, 1.0 / p);
}

std::pair<std::vector<double>, std::vector<char>> finite_difference_gradient(
    const MetricSpace& space, const PointFunction& f) {
  if (!space.grid_info()) {
    throw std::invalid_argument("finite_difference_gradient: requires a grid space");
  }
  const GridInfo& g = *space.grid_info();
  const int n = space.size();
  std::vector<double> grad(n, 0.0);
  std::vector<char> excluded(n, 0);
  for (int i = 0; i < n; ++i) {
    const std::vector<int> cell = space.grid_cell(i);
    double acc = 0.0;
    for (int a = 0; a < g.dim; ++a) {
      std::vector<int> up = cell;
      std::vector<int> dn = cell;
      ++up[a];
      --dn[a];
      const int iu = space.grid_index(up);
      const int id = space.grid_index(dn);
      if (iu < 0 || id < 0) {
        excluded[i] = 1;
        break;
      }
      const double d = (f.values[iu] - f.values[id]) / (2.0 * g.delta);
      acc += d * d;
    }
    if (!excluded[i]) grad[i] = std::sqrt(acc);
  }
  return {std::move(grad), std::move(excluded)};
}

CompareReport euclidean_compare(const SpacePtr& space, const PointFunction& f, double p,
                                const HFunction& h, const GradientFieldOptions& opts) {
  const GradientField field = gradient_field(space, f, h, opts);
  auto [fd, fd_excluded] = finite_difference_gradient(*space, f);

  // Compare on the common interior; fold the FD exclusions into the field's
  // mask so both norms integrate over the same points.
  GradientField fd_field;
  fd_field.values = fd;
  fd_field.excluded = field.excluded;
  for (int i = 0; i < space->size(); ++i) {
    if (fd_excluded[i]) fd_field.excluded[i] = 1;
  }
  GradientField est_field = field;
  est_field.excluded = fd_field.excluded;

  CompareReport rep;
  rep.sobolev_estimated = sobolev_norm(*space, f, p, est_field);
  rep.sobolev_classical = sobolev_norm(*space, f, p, fd_field);
  rep.norm_rel_error = std::abs(rep.sobolev_estimated - rep.sobolev_classical) /
                       std::max(rep.sobolev_classical, 1e-12);

  double fd_max = 0.0;
  for (int i = 0; i < space->size(); ++i) {
    if (!est_field.excluded[i]) fd_max = std::max(fd_max, fd[i]);
  }
  const double rel_floor = std::max(0.1 * fd_max, 1e-12);
  for (int i = 0; i < space->size(); ++i) {
    if (est_field.excluded[i]) continue;
    ComparePoint cp;
    cp.point = i;
    cp.g_est = est_field.values[i];
    cp.fd_grad = fd[i];
    cp.abs_err = std::abs(cp.g_est - cp.fd_grad);
    rep.points.push_back(cp);
    rep.max_abs_err = std::max(rep.max_abs_err, cp.abs_err);
    rep.max_rel_err = std::max(rep.max_rel_err, cp.abs_err / std::max(fd[i], rel_floor));
  }
  return rep;
}

}  // namespace mms

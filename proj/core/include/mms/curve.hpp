#pragma once

#include <vector>

#include "mms/measure.hpp"
#include "mms/metric.hpp"

namespace mms {

/// A discrete curve of measures: states on an increasing time grid together
/// with a certified Lipschitz constant under the mass-transport distance.
/// The certificate covers the time grid only; nothing is interpolated.
struct Curve {
  std::vector<double> times;
  std::vector<Measure> states;
  double lip_cert = 0.0;
  /// lip_cert <= 1 + 1e-6.
  bool rectifiable = false;

  const Measure& at(int k) const { return states.at(k); }
  int steps() const { return static_cast<int>(states.size()); }
  double duration() const { return times.empty() ? 0.0 : times.back() - times.front(); }
};

struct ValidateOptions {
  /// All-pairs distance evaluation up to this many states; longer curves use
  /// adjacent pairs only (the triangle inequality extends the adjacent bound
  /// to every pair).
  int all_pairs_limit = 24;
  int jobs = 0;  // 0 = default_jobs()
};

/// Measure the Lipschitz constant of a state sequence and package it as a
/// Curve. Throws when a curve that certifies as 1-Lipschitz fails mass
/// constancy (tolerance 1e-9 relative), which signals inconsistent input.
Curve validate_curve(std::vector<Measure> states, std::vector<double> times,
                     const HFunction& h, const ValidateOptions& opts = {});

/// Shift a density by whole cells along a grid axis, one cell per step;
/// times are multiples of the cell spacing. Requires a uniform-weight grid
/// (cell shifts preserve mass only then) and the support must stay inside.
/// Each shift moves every atom exactly delta, so the curve is 1-Lipschitz by
/// construction; `validate` re-measures via the metric.
Curve translation_curve(const SpacePtr& space, const std::vector<double>& phi, int axis,
                        int direction, int steps, const HFunction& h, bool validate = true);

/// Expanding ball with density scaled to hold mass roughly constant:
/// state k has density (r/(r+k*delta))^dim on ball(center, r+k*delta).
/// Mass is constant only up to cell quantization; the measured Lipschitz
/// constant records the resulting slack instead of hiding it.
Curve dilation_curve(const SpacePtr& space, int center, double r, int steps,
                     const HFunction& h, bool validate = true);

/// Straight-line interpolation (1-t) a + t b, k = 0..steps. Returned as bare
/// states: such paths are continuous but typically far from 1-Lipschitz.
std::vector<Measure> mixture_path(const Measure& a, const Measure& b, int steps);

/// Split a curve into component curves that sum statewise to the original.
/// `parts` must sum to states[at]. Between adjacent times the optimal plan at
/// eps = dm(adjacent states) moves each part pro rata (source mass split by
/// density share); mass appearing on the target side is assigned pro rata to
/// incoming matched mass, falling back to the parts' mass shares. Proceeds
/// from `at` outward in both directions.
std::vector<Curve> decompose_curve(const Curve& curve, int at,
                                   const std::vector<Measure>& parts, const HFunction& h);

/// Time reversal and contiguous sub-curves keep the certificate.
Curve reverse_curve(const Curve& curve);
Curve restrict_curve(const Curve& curve, int first, int last);

/// Max relative drift of total mass across states.
double mass_drift(const Curve& curve);

/// Check supp(states[j]) within the (L |t_i - t_j| + slack)-enlargement of
/// supp(states[i]) for all pairs.
bool support_drift_ok(const Curve& curve, double slack);

}  // namespace mms

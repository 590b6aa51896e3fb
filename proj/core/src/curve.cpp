#include "mms/curve.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mms/errors.hpp"
#include "mms/parallel.hpp"

namespace mms {

namespace {

constexpr double kMassTol = 1e-9;
constexpr double kRectifiableSlack = 1e-6;

void require_grid(const SpacePtr& space, const char* op) {
  if (!space->grid_info()) {
    throw std::invalid_argument(std::string(op) + ": requires a grid-built space");
  }
}

void require_uniform_weights(const MetricSpace& sp, const char* op) {
  for (int i = 1; i < sp.size(); ++i) {
    if (sp.weight(i) != sp.weight(0)) {
      throw std::invalid_argument(std::string(op) +
                                  ": requires uniform cell weights (cell shifts are "
                                  "mass-preserving only then)");
    }
  }
}

}  // namespace

Curve validate_curve(std::vector<Measure> states, std::vector<double> times,
                     const HFunction& h, const ValidateOptions& opts) {
  if (states.empty()) throw std::invalid_argument("validate_curve: need at least one state");
  if (states.size() != times.size()) {
    throw MismatchError("validate_curve: states/times length mismatch");
  }
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) {
      throw std::invalid_argument("validate_curve: times must be strictly increasing");
    }
    if (!same_space(states[k], states[0])) {
      throw MismatchError("validate_curve: states live on different spaces");
    }
  }

  const int m = static_cast<int>(states.size());
  std::vector<std::pair<int, int>> pairs;
  if (m <= opts.all_pairs_limit) {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  } else {
    for (int i = 0; i + 1 < m; ++i) pairs.emplace_back(i, i + 1);
  }

  std::vector<double> ratio(pairs.size(), 0.0);
  const int jobs = opts.jobs > 0 ? opts.jobs : default_jobs();
  parallel_for(static_cast<int>(pairs.size()), jobs, [&](int k) {
    const auto [i, j] = pairs[k];
    ratio[k] = dm(states[i], states[j], h) / (times[j] - times[i]);
  });

  Curve c;
  c.times = std::move(times);
  c.states = std::move(states);
  c.lip_cert = pairs.empty() ? 0.0 : *std::max_element(ratio.begin(), ratio.end());
  c.rectifiable = c.lip_cert <= 1.0 + kRectifiableSlack;

  if (c.rectifiable) {
    // Mass constancy holds exactly in the limit; on a time grid each step may
    // drift by up to h(lip * dt) (the mass bound at the step distance). More
    // drift than that cannot coexist with the measured certificate.
    double allowed = 0.0;
    for (std::size_t k = 0; k + 1 < c.times.size(); ++k) {
      allowed += h(c.lip_cert * (c.times[k + 1] - c.times[k]));
    }
    const double scale = std::max(1.0, c.states[0].total_mass());
    if (mass_drift(c) * scale > allowed + kMassTol * scale) {
      throw std::invalid_argument(
          "validate_curve: mass drift exceeds what the certificate permits "
          "(inconsistent states)");
    }
  }
  return c;
}

Curve translation_curve(const SpacePtr& space, const std::vector<double>& phi, int axis,
                        int direction, int steps, const HFunction& h, bool validate) {
  require_grid(space, "translation_curve");
  require_uniform_weights(*space, "translation_curve");
  const GridInfo& g = *space->grid_info();
  if (axis < 0 || axis >= g.dim) throw std::invalid_argument("translation_curve: bad axis");
  if (direction != 1 && direction != -1) {
    throw std::invalid_argument("translation_curve: direction must be +1 or -1 "
                                "(only axis-aligned whole-cell shifts are supported)");
  }
  if (steps < 0) throw std::invalid_argument("translation_curve: steps must be >= 0");

  std::vector<Measure> states;
  std::vector<double> times;
  Measure current(space, phi);
  for (int k = 0; k <= steps; ++k) {
    if (k > 0) {
      std::vector<double> shifted(space->size(), 0.0);
      for (int i = 0; i < space->size(); ++i) {
        if (current.density(i) == 0.0) continue;
        std::vector<int> cell = space->grid_cell(i);
        cell[axis] += direction;
        const int j = space->grid_index(cell);
        if (j < 0) {
          throw std::invalid_argument("translation_curve: support exits the grid at step " +
                                      std::to_string(k));
        }
        shifted[j] = current.density(i);
      }
      current = Measure(space, std::move(shifted));
    }
    states.push_back(current);
    times.push_back(k * g.delta);
  }

  if (validate) return validate_curve(std::move(states), std::move(times), h);
  Curve c;
  c.times = std::move(times);
  c.states = std::move(states);
  c.lip_cert = 1.0;  // every atom moves exactly delta per step
  c.rectifiable = true;
  return c;
}

Curve dilation_curve(const SpacePtr& space, int center, double r, int steps,
                     const HFunction& h, bool validate) {
  require_grid(space, "dilation_curve");
  require_uniform_weights(*space, "dilation_curve");
  const GridInfo& g = *space->grid_info();
  if (!(r > 0.0)) throw std::invalid_argument("dilation_curve: radius must be > 0");
  if (steps < 0) throw std::invalid_argument("dilation_curve: steps must be >= 0");

  const double rmax = r + steps * g.delta;
  for (int a = 0; a < g.dim; ++a) {
    const double c = space->coord(center, a);
    const double lo = 0.0;
    const double hi = (g.extents[a] - 1) * g.delta;
    if (c - rmax < lo - 1e-12 || c + rmax > hi + 1e-12) {
      throw std::invalid_argument("dilation_curve: final ball exits the grid");
    }
  }

  std::vector<Measure> states;
  std::vector<double> times;
  for (int k = 0; k <= steps; ++k) {
    const double radius = r + k * g.delta;
    const double level = std::pow(r / radius, g.dim);
    std::vector<double> phi(space->size(), 0.0);
    // Slack keeps cells at exactly the radius inside despite rounding in the
    // distance table.
    for (int i : ball(*space, center, radius + 1e-9 * std::max(1.0, radius))) phi[i] = level;
    states.emplace_back(space, std::move(phi));
    times.push_back(k * g.delta);
  }

  if (validate) return validate_curve(std::move(states), std::move(times), h);
  Curve c;
  c.times = std::move(times);
  c.states = std::move(states);
  // Cheap sound certificate: keeping every cell in place and paying h for the
  // per-cell mass difference is always a feasible decomposition, so adjacent
  // states are within h^{-1}(L1 mass difference).
  double lip = 1.0;
  for (std::size_t k = 0; k + 1 < c.states.size(); ++k) {
    double l1 = 0.0;
    for (int i = 0; i < space->size(); ++i) {
      l1 += std::abs(c.states[k].mass_at(i) - c.states[k + 1].mass_at(i));
    }
    lip = std::max(lip, h.inverse(l1) / g.delta);
  }
  c.lip_cert = lip;
  c.rectifiable = lip <= 1.0 + kRectifiableSlack;
  return c;
}

std::vector<Measure> mixture_path(const Measure& a, const Measure& b, int steps) {
  if (!same_space(a, b)) throw MismatchError("mixture_path: measures live on different spaces");
  if (steps < 1) throw std::invalid_argument("mixture_path: steps must be >= 1");
  std::vector<Measure> out;
  out.reserve(steps + 1);
  for (int k = 0; k <= steps; ++k) {
    const double t = static_cast<double>(k) / steps;
    std::vector<double> phi(a.space().size());
    for (int i = 0; i < a.space().size(); ++i) {
      phi[i] = (1.0 - t) * a.density(i) + t * b.density(i);
    }
    out.emplace_back(a.space_ptr(), std::move(phi));
  }
  return out;
}

namespace {

// Push parts one time step through the optimal plan between parent states.
std::vector<std::vector<double>> propagate_parts(
    const Measure& from, const Measure& to, const std::vector<std::vector<double>>& part_phi,
    const HFunction& h) {
  const MetricSpace& sp = from.space();
  const int n = sp.size();
  const int np = static_cast<int>(part_phi.size());

  const DmResult res = dm_detailed(from, to, h);
  std::vector<double> col = plan_col_masses(res.plan, n);

  std::vector<double> part_mass(np, 0.0);
  double total_from = 0.0;
  for (int p = 0; p < np; ++p) {
    for (int i = 0; i < n; ++i) part_mass[p] += part_phi[p][i] * sp.weight(i);
    total_from += part_mass[p];
  }

  std::vector<std::vector<double>> incoming(np, std::vector<double>(n, 0.0));
  for (const auto& e : res.plan.entries) {
    const double from_phi = from.density(e.src);
    if (from_phi <= 0.0) continue;
    for (int p = 0; p < np; ++p) {
      const double share = part_phi[p][e.src] / from_phi;
      if (share > 0.0) incoming[p][e.dst] += e.mass * share;
    }
  }

  std::vector<std::vector<double>> next(np, std::vector<double>(n, 0.0));
  for (int j = 0; j < n; ++j) {
    const double target = to.mass_at(j);
    if (target <= 0.0) continue;
    double matched_in = 0.0;
    for (int p = 0; p < np; ++p) matched_in += incoming[p][j];
    const double appearing = std::max(0.0, target - col[j]);
    for (int p = 0; p < np; ++p) {
      double share;
      if (matched_in > 1e-15) {
        share = incoming[p][j] / matched_in;
      } else if (total_from > 1e-15) {
        share = part_mass[p] / total_from;
      } else {
        share = 1.0 / np;
      }
      const double mass = incoming[p][j] + appearing * share;
      double phi = mass / sp.weight(j);
      if (phi > 1.0 + 1e-9) {
        throw std::runtime_error("decompose_curve: propagation broke domination");
      }
      next[p][j] = std::min(phi, to.density(j));
    }
  }
  return next;
}

}  // namespace

std::vector<Curve> decompose_curve(const Curve& curve, int at,
                                   const std::vector<Measure>& parts, const HFunction& h) {
  if (curve.states.empty()) throw std::invalid_argument("decompose_curve: empty curve");
  if (at < 0 || at >= curve.steps()) throw std::invalid_argument("decompose_curve: bad index");
  if (parts.empty()) throw std::invalid_argument("decompose_curve: no parts");

  const MetricSpace& sp = curve.states[0].space();
  const int n = sp.size();
  const int np = static_cast<int>(parts.size());
  {
    std::vector<double> sum(n, 0.0);
    for (const auto& p : parts) {
      if (!same_space(p, curve.states[0])) {
        throw MismatchError("decompose_curve: part on wrong space");
      }
      for (int i = 0; i < n; ++i) sum[i] += p.density(i);
    }
    for (int i = 0; i < n; ++i) {
      if (std::abs(sum[i] - curve.states[at].density(i)) > kMassTol) {
        throw std::invalid_argument("decompose_curve: parts do not sum to states[at]");
      }
    }
  }

  const int m = curve.steps();
  // part_states[k][p] = density of part p at time index k
  std::vector<std::vector<std::vector<double>>> part_states(
      m, std::vector<std::vector<double>>(np));
  for (int p = 0; p < np; ++p) part_states[at][p] = parts[p].densities();

  for (int k = at; k + 1 < m; ++k) {
    part_states[k + 1] =
        propagate_parts(curve.states[k], curve.states[k + 1], part_states[k], h);
  }
  for (int k = at; k > 0; --k) {
    part_states[k - 1] =
        propagate_parts(curve.states[k], curve.states[k - 1], part_states[k], h);
  }

  std::vector<Curve> out;
  out.reserve(np);
  for (int p = 0; p < np; ++p) {
    std::vector<Measure> states;
    states.reserve(m);
    for (int k = 0; k < m; ++k) states.emplace_back(curve.states[0].space_ptr(), part_states[k][p]);
    Curve c;
    c.times = curve.times;
    c.states = std::move(states);
    // Components inherit the parent's feasibility: the pro-rata share of the
    // parent plan matches enough of each component's mass at the same eps.
    std::vector<double> ratio;
    for (int k = 0; k + 1 < m; ++k) {
      ratio.push_back(dm(c.states[k], c.states[k + 1], h) / (c.times[k + 1] - c.times[k]));
    }
    c.lip_cert = ratio.empty() ? 0.0 : *std::max_element(ratio.begin(), ratio.end());
    c.rectifiable = c.lip_cert <= 1.0 + kRectifiableSlack;
    out.push_back(std::move(c));
  }
  return out;
}

Curve reverse_curve(const Curve& curve) {
  Curve out;
  const double end = curve.times.back();
  for (int k = curve.steps() - 1; k >= 0; --k) {
    out.states.push_back(curve.states[k]);
    out.times.push_back(end - curve.times[k]);
  }
  out.lip_cert = curve.lip_cert;
  out.rectifiable = curve.rectifiable;
  return out;
}

Curve restrict_curve(const Curve& curve, int first, int last) {
  if (first < 0 || last >= curve.steps() || first > last) {
    throw std::invalid_argument("restrict_curve: bad range");
  }
  Curve out;
  for (int k = first; k <= last; ++k) {
    out.states.push_back(curve.states[k]);
    out.times.push_back(curve.times[k] - curve.times[first]);
  }
  out.lip_cert = curve.lip_cert;
  out.rectifiable = curve.rectifiable;
  return out;
}

double mass_drift(const Curve& curve) {
  double lo = curve.states[0].total_mass();
  double hi = lo;
  for (const auto& s : curve.states) {
    lo = std::min(lo, s.total_mass());
    hi = std::max(hi, s.total_mass());
  }
  return (hi - lo) / std::max(1.0, hi);
}

bool support_drift_ok(const Curve& curve, double slack) {
  const int m = curve.steps();
  for (int i = 0; i < m; ++i) {
    const PointSet base = curve.states[i].support();
    for (int j = 0; j < m; ++j) {
      if (i == j) continue;
      const double radius =
          curve.lip_cert * std::abs(curve.times[i] - curve.times[j]) + slack;
      PointSet reach = enlarge(curve.states[0].space(), base, radius);
      if (!is_subset(curve.states[j].support(), reach)) return false;
    }
  }
  return true;
}

}  // namespace mms

#include "mms/metric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mms/errors.hpp"

namespace mms {

namespace {

constexpr double kFeasTol = 1e-12;

// Lexicographic density order; ties broken by space pointer. Used to make dm
// invariant under argument swap.
bool canonical_before(const Measure& a, const Measure& b) {
  const auto& da = a.densities();
  const auto& db = b.densities();
  if (da != db) return da < db;
  return a.space_ptr().get() <= b.space_ptr().get();
}

std::vector<double> cross_distances(const Measure& nu, const Measure& eta) {
  const PointSet src = nu.support();
  const PointSet dst = eta.support();
  std::vector<double> d;
  d.reserve(src.size() * dst.size() + 1);
  d.push_back(0.0);
  for (int i : src)
    for (int j : dst) d.push_back(nu.space().dist(i, j));
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

DmResult dm_sweep(const Measure& nu, const Measure& eta, const HFunction& h) {
  const double total = nu.total_mass() + eta.total_mass();
  const double tol = kFeasTol * std::max(1.0, total);
  const std::vector<double> thresholds = cross_distances(nu, eta);
  const int last = static_cast<int>(thresholds.size()) - 1;

  for (int k = 0; k <= last; ++k) {
    MatchResult match = max_matched_mass(nu, eta, thresholds[k]);
    const double mismatch = std::max(0.0, total - 2.0 * match.mass);
    const double candidate =
        std::max(thresholds[k], mismatch <= tol ? 0.0 : h.inverse(mismatch));
    if (k == last || candidate < thresholds[k + 1]) {
      return {candidate, match.mass, std::move(match.plan)};
    }
  }
  return {};  // unreachable: the last interval always yields a candidate
}

}  // namespace

HFunction::HFunction(double exponent) : s_(exponent) {
  if (!(s_ > 1.0) || !std::isfinite(s_)) {
    throw std::invalid_argument("h-function: exponent must be finite and > 1");
  }
  // Spot-check the required shape on a fixed sample.
  if ((*this)(0.0) != 0.0) throw std::logic_error("h-function: h(0) != 0");
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const double x = 0.17 * i;
      const double y = 0.29 * j;
      if ((*this)(x) + (*this)(y) > (*this)(x + y) + 1e-12) {
        throw std::logic_error("h-function: superadditivity failed");
      }
    }
  }
}

double HFunction::operator()(double eps) const {
  if (eps < 0.0) throw std::invalid_argument("h-function: negative argument");
  return std::pow(eps, s_);
}

double HFunction::inverse(double y) const {
  if (y < 0.0) throw std::invalid_argument("h-function inverse: negative argument");
  return std::pow(y, 1.0 / s_);
}

bool gamma_feasible(const Measure& nu, const Measure& eta, double eps, double delta) {
  if (eps < 0.0 || delta < 0.0) {
    throw std::invalid_argument("gamma_feasible: eps and delta must be >= 0");
  }
  const double total = nu.total_mass() + eta.total_mass();
  const double need = (total - delta) / 2.0;
  if (need <= 0.0) return true;
  const double tol = kFeasTol * std::max(1.0, total);
  return max_matched_mass(nu, eta, eps).mass >= need - tol;
}

DmResult dm_detailed(const Measure& nu, const Measure& eta, const HFunction& h) {
  if (!same_space(nu, eta)) throw MismatchError("dm: measures live on different spaces");
  if (canonical_before(nu, eta)) return dm_sweep(nu, eta, h);
  DmResult r = dm_sweep(eta, nu, h);
  r.plan = transpose(r.plan);
  return r;
}

double dm(const Measure& nu, const Measure& eta, const HFunction& h) {
  return dm_detailed(nu, eta, h).epsilon;
}

double dm_bruteforce(const Measure& nu, const Measure& eta, const HFunction& h,
                     int max_atoms) {
  if (!same_space(nu, eta)) {
    throw MismatchError("dm_bruteforce: measures live on different spaces");
  }
  PointSet joint = nu.support();
  {
    PointSet d = eta.support();
    joint.insert(joint.end(), d.begin(), d.end());
    std::sort(joint.begin(), joint.end());
    joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
  }
  if (static_cast<int>(joint.size()) > max_atoms) {
    throw std::invalid_argument("dm_bruteforce: joint support exceeds max_atoms");
  }

  const MetricSpace& sp = nu.space();
  const PointSet src = nu.support();
  const PointSet dst = eta.support();
  const double total = nu.total_mass() + eta.total_mass();
  const double tol = kFeasTol * std::max(1.0, total);

  // Optimal matched mass via explicit minimum vertex cut: keep a subset A of
  // source atoms, pay for the excluded sources and for every target reachable
  // from A within eps.
  auto matched = [&](double eps) {
    if (src.empty() || dst.empty()) return 0.0;
    const int a = static_cast<int>(src.size());
    double best = std::numeric_limits<double>::infinity();
    for (unsigned mask = 0; mask < (1u << a); ++mask) {
      double cut = 0.0;
      for (int i = 0; i < a; ++i) {
        if (!(mask & (1u << i))) cut += nu.mass_at(src[i]);
      }
      for (int j : dst) {
        for (int i = 0; i < a; ++i) {
          if ((mask & (1u << i)) && sp.dist(src[i], j) <= eps) {
            cut += eta.mass_at(j);
            break;
          }
        }
      }
      best = std::min(best, cut);
    }
    return best;
  };

  auto feasible = [&](double eps) {
    return 2.0 * matched(eps) + h(eps) >= total - tol;
  };

  std::vector<double> thresholds;
  thresholds.push_back(0.0);
  for (int i : src)
    for (int j : dst) thresholds.push_back(sp.dist(i, j));
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  for (std::size_t k = 0; k < thresholds.size(); ++k) {
    const double lo = thresholds[k];
    if (feasible(lo)) return lo;
    double hi;
    if (k + 1 < thresholds.size()) {
      hi = thresholds[k + 1];
      // Matched mass is constant on [lo, hi); if even the right end cannot
      // satisfy h there, move to the next interval.
      if (2.0 * matched(lo) + h(hi) < total - tol) continue;
    } else {
      hi = std::max(lo, 1.0);
      while (!feasible(hi)) hi *= 2.0;
    }
    // h is continuous and increasing: bisect the crossing inside [lo, hi].
    double a = lo;
    double b = hi;
    for (int it = 0; it < 200 && (b - a) > 1e-14 * std::max(1.0, b); ++it) {
      const double mid = 0.5 * (a + b);
      if (2.0 * matched(lo) + h(mid) >= total - tol) {
        b = mid;
      } else {
        a = mid;
      }
    }
    return b;
  }
  return 0.0;
}

std::pair<bool, bool> mass_bounds_check(const Measure& nu, const Measure& eta,
                                        const HFunction& h) {
  const double delta = dm(nu, eta, h) + 1e-9;
  const double bound = h(delta) + 1e-9;
  const bool first = std::abs(nu.total_mass() - eta.total_mass()) <= bound;

  const PointSet reach = enlarge(nu.space(), nu.support(), delta);
  std::vector<char> inside(nu.space().size(), 0);
  for (int i : reach) inside[i] = 1;
  double outside_mass = 0.0;
  for (int i = 0; i < eta.space().size(); ++i) {
    if (!inside[i]) outside_mass += eta.mass_at(i);
  }
  const bool second = outside_mass <= bound;
  return {first, second};
}

Decomposition decomposition_from_plan(const Measure& nu, const Measure& eta,
                                      const TransportPlan& plan) {
  const SpacePtr sp = nu.space_ptr();
  const int n = nu.space().size();
  Decomposition dec;

  auto atom = [&](int point, double mass) {
    std::vector<double> phi(n, 0.0);
    phi[point] = mass / nu.space().weight(point);
    return Measure(sp, std::move(phi));
  };

  std::vector<double> row = plan_row_masses(plan, n);
  std::vector<double> col = plan_col_masses(plan, n);
  for (const auto& e : plan.entries) {
    dec.pieces.emplace_back(atom(e.src, e.mass), atom(e.dst, e.mass));
  }
  const Measure zero = Measure::zero(sp);
  for (int i = 0; i < n; ++i) {
    const double rest = nu.mass_at(i) - row[i];
    if (rest > 1e-15) dec.pieces.emplace_back(atom(i, rest), zero);
  }
  for (int j = 0; j < n; ++j) {
    const double rest = eta.mass_at(j) - col[j];
    if (rest > 1e-15) dec.pieces.emplace_back(zero, atom(j, rest));
  }

  // Piece sums must reproduce the inputs.
  std::vector<double> sum_nu(n, 0.0);
  std::vector<double> sum_eta(n, 0.0);
  for (const auto& [p, q] : dec.pieces) {
    for (int i = 0; i < n; ++i) {
      sum_nu[i] += p.mass_at(i);
      sum_eta[i] += q.mass_at(i);
    }
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(sum_nu[i] - nu.mass_at(i)) > 1e-9 ||
        std::abs(sum_eta[i] - eta.mass_at(i)) > 1e-9) {
      throw std::logic_error("decomposition_from_plan: piece sums drifted");
    }
  }
  return dec;
}

DecompositionStats decomposition_stats(const Decomposition& dec) {
  DecompositionStats st;
  for (const auto& [p, q] : dec.pieces) {
    PointSet joint = p.support();
    {
      PointSet d = q.support();
      joint.insert(joint.end(), d.begin(), d.end());
      std::sort(joint.begin(), joint.end());
      joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
    }
    if (!joint.empty()) {
      st.max_diameter = std::max(st.max_diameter, diameter(p.space(), joint));
    }
    st.mass_mismatch += std::abs(p.total_mass() - q.total_mass());
  }
  return st;
}

}  // namespace mms

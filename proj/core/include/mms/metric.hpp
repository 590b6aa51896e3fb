#pragma once

#include <utility>
#include <vector>

#include "mms/measure.hpp"
#include "mms/transport.hpp"

namespace mms {

/// Mass-mismatch penalty h(eps) = eps^s with s > 1 (default 2). Strictly
/// increasing, h(0) = 0, h(eps)/eps -> 0, superadditive, unbounded; the
/// constructor spot-checks superadditivity on a fixed sample.
class HFunction {
 public:
  explicit HFunction(double exponent = 2.0);
  double operator()(double eps) const;
  double inverse(double y) const;
  double exponent() const { return s_; }

 private:
  double s_;
};

/// True iff a paired decomposition of (nu, eta) exists whose pieces all have
/// joint support diameter <= eps and whose total mass mismatch is <= delta.
/// On a finite space that holds iff a plan on pairs within eps matches at
/// least (|nu| + |eta| - delta) / 2 of the mass: any piece refines into
/// matched atom pairs plus lone atoms carrying exactly its mass discrepancy,
/// and conversely atom pairs and lone atoms are valid pieces.
bool gamma_feasible(const Measure& nu, const Measure& eta, double eps, double delta);

struct DmResult {
  double epsilon = 0.0;
  /// Matched mass of the optimal plan at the winning threshold.
  double matched_mass = 0.0;
  TransportPlan plan;
};

/// The mass-transport distance: the least eps such that a decomposition with
/// piece diameter <= eps and mass mismatch <= h(eps) exists.
///
/// Exact sweep: matched mass is a step function of eps that only changes at
/// support cross-distances d_0 = 0 < d_1 < ... < d_K. Within [d_k, d_{k+1})
/// feasibility reads h(eps) >= M_k with M_k = max(0, |nu|+|eta| - 2 F_k), so
/// the interval's least feasible point is max(d_k, h^{-1}(M_k)) when that
/// stays below d_{k+1}; the first interval producing one yields the infimum.
/// Arguments are ordered canonically first, making dm(a,b) and dm(b,a)
/// bitwise equal.
double dm(const Measure& nu, const Measure& eta, const HFunction& h);
DmResult dm_detailed(const Measure& nu, const Measure& eta, const HFunction& h);

/// Independent brute-force evaluation of the same distance for small supports
/// (union of supports <= max_atoms points). Matched mass is obtained by
/// enumerating vertex cuts over source-support subsets instead of running a
/// flow, and the crossing of h against the mismatch level is located by
/// bisection instead of the closed-form inverse.
double dm_bruteforce(const Measure& nu, const Measure& eta, const HFunction& h,
                     int max_atoms = 6);

/// Consequences of dm(nu, eta) <= delta, checked at delta = dm + 1e-9:
///   first:  | |nu| - |eta| | <= h(delta)
///   second: eta-mass outside the delta-enlargement of supp(nu) <= h(delta)
std::pair<bool, bool> mass_bounds_check(const Measure& nu, const Measure& eta,
                                        const HFunction& h);

/// Paired splitting of two measures; piece sums must reproduce the originals.
struct Decomposition {
  std::vector<std::pair<Measure, Measure>> pieces;
};

/// Atomized decomposition realizing a plan: one piece per plan entry (equal
/// masses at the two endpoints) plus lone per-point pieces for unmatched
/// mass. sums reproduce nu and eta within 1e-9.
Decomposition decomposition_from_plan(const Measure& nu, const Measure& eta,
                                      const TransportPlan& plan);

/// Largest piece diameter and total mass mismatch of a decomposition.
struct DecompositionStats {
  double max_diameter = 0.0;
  double mass_mismatch = 0.0;
};
DecompositionStats decomposition_stats(const Decomposition& dec);

}  // namespace mms

#pragma once

#include <vector>

#include "mms/measure.hpp"

namespace mms {

struct PlanEntry {
  int src = 0;
  int dst = 0;
  double mass = 0.0;
};

/// A partial coupling between two measures: row sums bounded by the source
/// masses, column sums by the target masses.
struct TransportPlan {
  std::vector<PlanEntry> entries;
  double total_mass = 0.0;
};

struct MatchResult {
  double mass = 0.0;
  TransportPlan plan;
};

/// Maximum total mass of a plan supported on point pairs with dist <= eps,
/// with marginals dominated by nu and eta. Computed as a bipartite max-flow
/// (Dinic, deterministic node order, tolerance 1e-12 relative to total mass).
/// Nondecreasing in eps.
MatchResult max_matched_mass(const Measure& nu, const Measure& eta, double eps);

/// Swap plan orientation.
TransportPlan transpose(const TransportPlan& plan);

/// Row/column marginal sums indexed by point.
std::vector<double> plan_row_masses(const TransportPlan& plan, int n);
std::vector<double> plan_col_masses(const TransportPlan& plan, int n);

}  // namespace mms

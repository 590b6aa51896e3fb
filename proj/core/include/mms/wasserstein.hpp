#pragma once

#include "mms/measure.hpp"
#include "mms/transport.hpp"

namespace mms {

/// Wasserstein-1 distance between two equal-mass measures: minimum cost of a
/// full coupling with ground cost dist. Masses must agree within 1e-9 (the
/// caller normalizes). Successive shortest paths with potentials; exact for
/// these sizes and deterministic.
double w1(const Measure& a, const Measure& b);

struct W1Result {
  double cost = 0.0;
  TransportPlan plan;
};
W1Result w1_detailed(const Measure& a, const Measure& b);

}  // namespace mms

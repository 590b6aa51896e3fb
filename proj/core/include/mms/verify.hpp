#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mms/space.hpp"

namespace mms {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  int instances = 0;
  std::vector<CheckResult> checks;

  int failed() const {
    int k = 0;
    for (const auto& c : checks) k += c.pass ? 0 : 1;
    return k;
  }
  bool all_pass() const { return failed() == 0; }
};

struct VerifyConfig {
  int instances = 50;
  std::uint64_t seed = 0;
  double h_exponent = 2.0;
  /// Extra spaces thrown into the instance pool (testing hook; a space that
  /// breaks the metric axioms must make the metric suite fail).
  std::vector<SpacePtr> extra_spaces;
};

/// Distance solver checks: oracle agreement, metric axioms, matched-mass and
/// feasibility monotonicity, mixture and shift bounds, mass/support bounds.
SuiteReport verify_metric(const VerifyConfig& cfg);

/// Norm checks: point/functional norm agreement, Hoelder, subadditivity,
/// scaling, the search lower bound, representability.
SuiteReport verify_norms(const VerifyConfig& cfg);

/// Estimator checks: homogeneity, subadditivity, product/lattice/sum bounds,
/// ensemble monotonicity, Lipschitz bound, field calculus, the fundamental
/// inequality.
SuiteReport verify_gradients(const VerifyConfig& cfg);

std::vector<SuiteReport> verify_all(const VerifyConfig& cfg);

}  // namespace mms

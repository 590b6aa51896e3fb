#include "mms/wasserstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "mms/errors.hpp"

namespace mms {

namespace {
constexpr double kMassTol = 1e-9;
}

W1Result w1_detailed(const Measure& a, const Measure& b) {
  if (!same_space(a, b)) throw MismatchError("w1: measures live on different spaces");
  if (std::abs(a.total_mass() - b.total_mass()) > kMassTol) {
    throw MismatchError("w1: total masses differ beyond 1e-9; normalize first");
  }
  const MetricSpace& sp = a.space();
  const PointSet src = a.support();
  const PointSet dst = b.support();
  W1Result out;
  if (src.empty() || dst.empty()) return out;

  const int m = static_cast<int>(src.size());
  const int n = static_cast<int>(dst.size());
  const double tol = 1e-12 * std::max(1.0, a.total_mass());

  std::vector<double> supply(m);
  std::vector<double> demand(n);
  for (int i = 0; i < m; ++i) supply[i] = a.mass_at(src[i]);
  for (int j = 0; j < n; ++j) demand[j] = b.mass_at(dst[j]);
  // Equalize the tiny mass difference on the last point so the flow closes.
  {
    double sa = 0.0, sb = 0.0;
    for (double v : supply) sa += v;
    for (double v : demand) sb += v;
    demand[n - 1] += sa - sb;
  }

  std::vector<std::vector<double>> flow(m, std::vector<double>(n, 0.0));
  std::vector<double> pot_src(m, 0.0);
  std::vector<double> pot_dst(n, 0.0);
  const double inf = std::numeric_limits<double>::infinity();

  // Successive shortest augmenting paths on the bipartite residual graph.
  // Each augmentation exhausts a supply or a demand, so at most m+n rounds.
  while (true) {
    int start = -1;
    for (int i = 0; i < m; ++i) {
      if (supply[i] > tol) {
        start = i;
        break;
      }
    }
    if (start < 0) break;

    // Bellman-Ford-style relaxation (costs reduced by potentials stay >= 0,
    // but plain relaxation is simplest and cheap at these sizes).
    std::vector<double> dist_src(m, inf);
    std::vector<double> dist_dst(n, inf);
    std::vector<int> prev_dst(n, -1);  // source feeding this target
    std::vector<int> prev_src(m, -1);  // target whose flow was rolled back
    for (int i = 0; i < m; ++i) {
      if (supply[i] > tol) dist_src[i] = 0.0;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (int i = 0; i < m; ++i) {
        if (dist_src[i] == inf) continue;
        for (int j = 0; j < n; ++j) {
          const double c = dist_src[i] + sp.dist(src[i], dst[j]);
          if (c < dist_dst[j] - 1e-15) {
            dist_dst[j] = c;
            prev_dst[j] = i;
            changed = true;
          }
        }
      }
      for (int j = 0; j < n; ++j) {
        if (dist_dst[j] == inf) continue;
        for (int i = 0; i < m; ++i) {
          if (flow[i][j] > tol) {
            const double c = dist_dst[j] - sp.dist(src[i], dst[j]);
            if (c < dist_src[i] - 1e-15) {
              dist_src[i] = c;
              prev_src[i] = j;
              changed = true;
            }
          }
        }
      }
    }

    int best = -1;
    for (int j = 0; j < n; ++j) {
      if (demand[j] > tol && dist_dst[j] < inf && (best < 0 || dist_dst[j] < dist_dst[best])) {
        best = j;
      }
    }
    if (best < 0) break;

    // Trace the alternating path and find its bottleneck.
    double push = demand[best];
    {
      int j = best;
      while (true) {
        const int i = prev_dst[j];
        if (prev_src[i] < 0) {
          push = std::min(push, supply[i]);
          break;
        }
        j = prev_src[i];
        push = std::min(push, flow[i][j]);
      }
    }
    int j = best;
    while (true) {
      const int i = prev_dst[j];
      flow[i][j] += push;
      if (prev_src[i] < 0) {
        supply[i] -= push;
        break;
      }
      flow[i][prev_src[i]] -= push;
      j = prev_src[i];
    }
    demand[best] -= push;
  }

  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      if (flow[i][j] > tol) {
        out.plan.entries.push_back({src[i], dst[j], flow[i][j]});
        out.plan.total_mass += flow[i][j];
        out.cost += flow[i][j] * sp.dist(src[i], dst[j]);
      }
    }
  }
  return out;
}

double w1(const Measure& a, const Measure& b) { return w1_detailed(a, b).cost; }

}  // namespace mms

#include "mms/transport.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "mms/errors.hpp"

namespace mms {

namespace {

// Plain Dinic max-flow on doubles. Determinism comes from fixed node numbering
// and edge insertion order.
class MaxFlow {
 public:
  MaxFlow(int nodes, double eps) : head_(nodes, -1), level_(nodes), iter_(nodes), eps_(eps) {}

  int add_edge(int from, int to, double cap) {
    const int id = static_cast<int>(to_.size());
    to_.push_back(to);
    cap_.push_back(cap);
    next_.push_back(head_[from]);
    head_[from] = id;
    to_.push_back(from);
    cap_.push_back(0.0);
    next_.push_back(head_[to]);
    head_[to] = id + 1;
    return id;
  }

  double run(int s, int t) {
    double flow = 0.0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (true) {
        const double pushed = dfs(s, t, std::numeric_limits<double>::infinity());
        if (pushed <= eps_) break;
        flow += pushed;
      }
    }
    return flow;
  }

  /// Flow currently on edge id = capacity stored on its reverse edge.
  double flow_on(int id) const { return cap_[id ^ 1]; }

 private:
  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    queue_.clear();
    queue_.push_back(s);
    level_[s] = 0;
    for (std::size_t q = 0; q < queue_.size(); ++q) {
      const int u = queue_[q];
      for (int e = head_[u]; e != -1; e = next_[e]) {
        if (cap_[e] > eps_ && level_[to_[e]] < 0) {
          level_[to_[e]] = level_[u] + 1;
          queue_.push_back(to_[e]);
        }
      }
    }
    return level_[t] >= 0;
  }

  double dfs(int u, int t, double limit) {
    if (u == t) return limit;
    for (int& e = iter_[u]; e != -1; e = next_[e]) {
      const int v = to_[e];
      if (cap_[e] > eps_ && level_[v] == level_[u] + 1) {
        const double d = dfs(v, t, std::min(limit, cap_[e]));
        if (d > eps_) {
          cap_[e] -= d;
          cap_[e ^ 1] += d;
          return d;
        }
      }
    }
    return 0.0;
  }

  std::vector<int> to_;
  std::vector<double> cap_;
  std::vector<int> next_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
  std::vector<int> queue_;
  double eps_;
};

}  // namespace

MatchResult max_matched_mass(const Measure& nu, const Measure& eta, double eps) {
  if (!same_space(nu, eta)) {
    throw MismatchError("max_matched_mass: measures live on different spaces");
  }
  if (eps < 0.0) throw std::invalid_argument("max_matched_mass: eps must be >= 0");

  const MetricSpace& sp = nu.space();
  const PointSet src = nu.support();
  const PointSet dst = eta.support();
  MatchResult out;
  if (src.empty() || dst.empty()) return out;

  const int a = static_cast<int>(src.size());
  const int b = static_cast<int>(dst.size());
  const double scale = std::max(1.0, nu.total_mass() + eta.total_mass());
  const double tol = 1e-12 * scale;

  MaxFlow flow(a + b + 2, tol);
  const int s = a + b;
  const int t = a + b + 1;
  for (int i = 0; i < a; ++i) flow.add_edge(s, i, nu.mass_at(src[i]));
  for (int j = 0; j < b; ++j) flow.add_edge(a + j, t, eta.mass_at(dst[j]));

  struct EdgeRef {
    int id;
    int src_pt;
    int dst_pt;
  };
  std::vector<EdgeRef> refs;
  const double inf = std::numeric_limits<double>::infinity();
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      if (sp.dist(src[i], dst[j]) <= eps) {
        refs.push_back({flow.add_edge(i, a + j, inf), src[i], dst[j]});
      }
    }
  }

  out.mass = flow.run(s, t);
  for (const auto& r : refs) {
    const double f = flow.flow_on(r.id);
    if (f > tol) out.plan.entries.push_back({r.src_pt, r.dst_pt, f});
  }
  out.plan.total_mass = out.mass;
  return out;
}

TransportPlan transpose(const TransportPlan& plan) {
  TransportPlan out;
  out.total_mass = plan.total_mass;
  out.entries.reserve(plan.entries.size());
  for (const auto& e : plan.entries) out.entries.push_back({e.dst, e.src, e.mass});
  return out;
}

std::vector<double> plan_row_masses(const TransportPlan& plan, int n) {
  std::vector<double> row(n, 0.0);
  for (const auto& e : plan.entries) row.at(e.src) += e.mass;
  return row;
}

std::vector<double> plan_col_masses(const TransportPlan& plan, int n) {
  std::vector<double> col(n, 0.0);
  for (const auto& e : plan.entries) col.at(e.dst) += e.mass;
  return col;
}

}  // namespace mms

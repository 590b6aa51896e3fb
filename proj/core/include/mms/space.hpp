#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace mms {

/// Sorted set of point indices.
using PointSet = std::vector<int>;

/// Cell layout of a grid-built space.
struct GridInfo {
  int dim = 0;
  std::vector<int> extents;
  double delta = 0.0;
};

/// A finite metric measure space: points 0..n-1, a symmetric distance matrix
/// and a strictly positive weight per point. Immutable after construction and
/// safe to share across threads; always handled through shared_ptr.
///
/// Construction verifies the metric axioms eagerly. The triangle inequality is
/// checked exhaustively up to 64 points and on 10*n^2 sampled triples above
/// that (tolerance 1e-12 absolute).
class MetricSpace {
 public:
  /// Build from an explicit distance matrix and weights.
  static std::shared_ptr<const MetricSpace> from_matrix(
      const std::vector<std::vector<double>>& dist, std::vector<double> weight,
      std::vector<std::vector<double>> coords = {});

  /// Regular grid of cell centers in 1..3 dimensions. Point k sits at
  /// coords[k] = cell_index * delta per axis, the metric is Euclidean and the
  /// default weight is delta^dim (cell mass). weight_fn, when given, scales a
  /// point's weight to weight_fn(coords) * delta^dim.
  static std::shared_ptr<const MetricSpace> grid(
      int dim, const std::vector<int>& extents, double delta,
      const std::function<double(const std::vector<double>&)>& weight_fn = {});

  /// Deserialization/testing escape hatch: no invariant checks.
  static std::shared_ptr<const MetricSpace> from_parts_unchecked(
      std::vector<double> dist_flat, std::vector<double> weight,
      std::vector<double> coords_flat, int coord_dim,
      std::optional<GridInfo> grid = std::nullopt);

  int size() const { return n_; }
  double dist(int i, int j) const { return dist_[static_cast<std::size_t>(i) * n_ + j]; }
  double weight(int i) const { return weight_[i]; }
  const std::vector<double>& weights() const { return weight_; }
  double total_weight() const { return total_weight_; }

  bool has_coords() const { return coord_dim_ > 0; }
  int coord_dim() const { return coord_dim_; }
  double coord(int i, int axis) const { return coords_[static_cast<std::size_t>(i) * coord_dim_ + axis]; }

  const std::optional<GridInfo>& grid_info() const { return grid_; }

  /// Row-major index of a grid cell; cell coordinates of a point index.
  int grid_index(const std::vector<int>& cell) const;
  std::vector<int> grid_cell(int index) const;

 private:
  MetricSpace() = default;

  int n_ = 0;
  std::vector<double> dist_;    // n*n, symmetric, zero diagonal
  std::vector<double> weight_;  // n, strictly positive
  std::vector<double> coords_;  // n*coord_dim_, optional
  int coord_dim_ = 0;
  double total_weight_ = 0.0;
  std::optional<GridInfo> grid_;
};

using SpacePtr = std::shared_ptr<const MetricSpace>;

/// Max pairwise distance within a nonempty set; 0 for a singleton.
double diameter(const MetricSpace& space, const PointSet& set);

/// Closed ball {j : dist(center, j) <= radius}.
PointSet ball(const MetricSpace& space, int center, double radius);

/// Points within `radius` of any member of `set` (closed enlargement).
PointSet enlarge(const MetricSpace& space, const PointSet& set, double radius);

bool is_subset(const PointSet& a, const PointSet& b);

}  // namespace mms

#include "mms/space.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "mms/rng.hpp"

namespace mms {

namespace {

constexpr double kMetricTol = 1e-12;

void check_invariants(const std::vector<double>& d, const std::vector<double>& w, int n) {
  for (int i = 0; i < n; ++i) {
    if (!(w[i] > 0.0)) {
      throw std::invalid_argument("metric space: weight[" + std::to_string(i) + "] must be > 0");
    }
  }
  auto at = [&](int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    if (std::abs(at(i, i)) > kMetricTol) {
      throw std::invalid_argument("metric space: nonzero diagonal at " + std::to_string(i));
    }
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(at(i, j) - at(j, i)) > kMetricTol) {
        throw std::invalid_argument("metric space: asymmetric distance at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");
      }
      if (!(at(i, j) > 0.0)) {
        throw std::invalid_argument("metric space: distance between distinct points " +
                                    std::to_string(i) + "," + std::to_string(j) +
                                    " must be > 0");
      }
      if (!std::isfinite(at(i, j))) {
        throw std::invalid_argument("metric space: non-finite distance");
      }
    }
  }
  auto check_triple = [&](int i, int j, int k) {
    if (at(i, j) > at(i, k) + at(k, j) + kMetricTol) {
      throw std::invalid_argument("metric space: triangle inequality violated on (" +
                                  std::to_string(i) + "," + std::to_string(j) + "," +
                                  std::to_string(k) + ")");
    }
  };
  if (n <= 64) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) check_triple(i, j, k);
  } else {
    // Sampled check on 10*n^2 random triples; seed fixed for reproducibility.
    Rng rng(0xA11CE5EEDULL);
    const std::int64_t samples = 10LL * n * n;
    for (std::int64_t s = 0; s < samples; ++s) {
      const int i = rng.uniform_int(0, n - 1);
      const int j = rng.uniform_int(0, n - 1);
      const int k = rng.uniform_int(0, n - 1);
      check_triple(i, j, k);
    }
  }
}

}  // namespace

std::shared_ptr<const MetricSpace> MetricSpace::from_matrix(
    const std::vector<std::vector<double>>& dist, std::vector<double> weight,
    std::vector<std::vector<double>> coords) {
  const int n = static_cast<int>(dist.size());
  if (n == 0) throw std::invalid_argument("metric space: empty distance matrix");
  for (const auto& row : dist) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("metric space: distance matrix must be square");
    }
  }
  if (static_cast<int>(weight.size()) != n) {
    throw std::invalid_argument("metric space: weight length must match point count");
  }
  std::vector<double> flat(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) flat[static_cast<std::size_t>(i) * n + j] = dist[i][j];
  check_invariants(flat, weight, n);
  // Symmetrize exactly so dist(i,j) and dist(j,i) are bitwise equal.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = flat[static_cast<std::size_t>(i) * n + j];
      flat[static_cast<std::size_t>(j) * n + i] = v;
    }
  for (int i = 0; i < n; ++i) flat[static_cast<std::size_t>(i) * n + i] = 0.0;

  int cdim = 0;
  std::vector<double> cflat;
  if (!coords.empty()) {
    if (static_cast<int>(coords.size()) != n) {
      throw std::invalid_argument("metric space: coords length must match point count");
    }
    cdim = static_cast<int>(coords[0].size());
    cflat.reserve(static_cast<std::size_t>(n) * cdim);
    for (const auto& row : coords) {
      if (static_cast<int>(row.size()) != cdim) {
        throw std::invalid_argument("metric space: ragged coords");
      }
      cflat.insert(cflat.end(), row.begin(), row.end());
    }
  }
  return from_parts_unchecked(std::move(flat), std::move(weight), std::move(cflat), cdim);
}

std::shared_ptr<const MetricSpace> MetricSpace::grid(
    int dim, const std::vector<int>& extents, double delta,
    const std::function<double(const std::vector<double>&)>& weight_fn) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("grid: dim must be 1, 2 or 3");
  if (static_cast<int>(extents.size()) != dim) {
    throw std::invalid_argument("grid: need one extent per axis");
  }
  if (!(delta > 0.0)) throw std::invalid_argument("grid: spacing must be > 0");
  std::int64_t n64 = 1;
  for (int e : extents) {
    if (e < 2) throw std::invalid_argument("grid: extents must be >= 2");
    n64 *= e;
  }
  if (n64 > 20000) throw std::invalid_argument("grid: too many points (limit 20000)");
  const int n = static_cast<int>(n64);

  std::vector<double> coords(static_cast<std::size_t>(n) * dim);
  std::vector<int> cell(dim, 0);
  for (int idx = 0; idx < n; ++idx) {
    for (int a = 0; a < dim; ++a) coords[static_cast<std::size_t>(idx) * dim + a] = cell[a] * delta;
    for (int a = dim - 1; a >= 0; --a) {
      if (++cell[a] < extents[a]) break;
      cell[a] = 0;
    }
  }

  std::vector<double> dist(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      double s = 0.0;
      for (int a = 0; a < dim; ++a) {
        const double d = coords[static_cast<std::size_t>(i) * dim + a] -
                         coords[static_cast<std::size_t>(j) * dim + a];
        s += d * d;
      }
      const double v = std::sqrt(s);
      dist[static_cast<std::size_t>(i) * n + j] = v;
      dist[static_cast<std::size_t>(j) * n + i] = v;
    }
  }

  const double cell_mass = std::pow(delta, dim);
  std::vector<double> weight(n, cell_mass);
  if (weight_fn) {
    std::vector<double> x(dim);
    for (int i = 0; i < n; ++i) {
      for (int a = 0; a < dim; ++a) x[a] = coords[static_cast<std::size_t>(i) * dim + a];
      weight[i] = weight_fn(x) * cell_mass;
    }
  }
  check_invariants(dist, weight, n);

  GridInfo info{dim, extents, delta};
  return from_parts_unchecked(std::move(dist), std::move(weight), std::move(coords), dim,
                              std::move(info));
}

std::shared_ptr<const MetricSpace> MetricSpace::from_parts_unchecked(
    std::vector<double> dist_flat, std::vector<double> weight,
    std::vector<double> coords_flat, int coord_dim, std::optional<GridInfo> grid) {
  auto sp = std::shared_ptr<MetricSpace>(new MetricSpace());
  sp->n_ = static_cast<int>(weight.size());
  sp->dist_ = std::move(dist_flat);
  sp->weight_ = std::move(weight);
  sp->coords_ = std::move(coords_flat);
  sp->coord_dim_ = coord_dim;
  sp->total_weight_ = std::accumulate(sp->weight_.begin(), sp->weight_.end(), 0.0);
  sp->grid_ = std::move(grid);
  return sp;
}

int MetricSpace::grid_index(const std::vector<int>& cell) const {
  if (!grid_) throw std::logic_error("grid_index: not a grid space");
  const auto& g = *grid_;
  int idx = 0;
  for (int a = 0; a < g.dim; ++a) {
    if (cell[a] < 0 || cell[a] >= g.extents[a]) return -1;
    idx = idx * g.extents[a] + cell[a];
  }
  return idx;
}

std::vector<int> MetricSpace::grid_cell(int index) const {
  if (!grid_) throw std::logic_error("grid_cell: not a grid space");
  const auto& g = *grid_;
  std::vector<int> cell(g.dim);
  for (int a = g.dim - 1; a >= 0; --a) {
    cell[a] = index % g.extents[a];
    index /= g.extents[a];
  }
  return cell;
}

double diameter(const MetricSpace& space, const PointSet& set) {
  if (set.empty()) throw std::invalid_argument("diameter: empty set");
  double d = 0.0;
  for (std::size_t a = 0; a < set.size(); ++a)
    for (std::size_t b = a + 1; b < set.size(); ++b)
      d = std::max(d, space.dist(set[a], set[b]));
  return d;
}

PointSet ball(const MetricSpace& space, int center, double radius) {
  if (radius < 0.0) throw std::invalid_argument("ball: radius must be >= 0");
  PointSet out;
  for (int j = 0; j < space.size(); ++j) {
    if (space.dist(center, j) <= radius) out.push_back(j);
  }
  return out;
}

PointSet enlarge(const MetricSpace& space, const PointSet& set, double radius) {
  PointSet out;
  for (int j = 0; j < space.size(); ++j) {
    for (int p : set) {
      if (space.dist(p, j) <= radius) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

bool is_subset(const PointSet& a, const PointSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace mms

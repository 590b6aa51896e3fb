#pragma once

#include <memory>
#include <vector>

#include "mms/space.hpp"

namespace mms {

/// A measure dominated by the reference weights: density phi in [0,1] per
/// point, so the mass at point i is phi[i] * weight[i]. The zero measure is a
/// valid value. Immutable; all operations return new values.
class Measure {
 public:
  /// Entries must lie in [-1e-12, 1+1e-12] and are clamped to [0,1].
  Measure(SpacePtr space, std::vector<double> density);

  static Measure zero(SpacePtr space);
  /// Full density on `set`, zero elsewhere.
  static Measure indicator(SpacePtr space, const PointSet& set);

  const MetricSpace& space() const { return *space_; }
  const SpacePtr& space_ptr() const { return space_; }

  double density(int i) const { return phi_[i]; }
  const std::vector<double>& densities() const { return phi_; }
  /// Mass carried at point i.
  double mass_at(int i) const { return phi_[i] * space_->weight(i); }

  double total_mass() const { return mass_; }
  bool is_zero() const { return mass_ == 0.0; }
  PointSet support() const;

 private:
  SpacePtr space_;
  std::vector<double> phi_;
  double mass_ = 0.0;
};

bool same_space(const Measure& a, const Measure& b);
/// Elementwise density comparison, tolerance 1e-12 (densities live in [0,1]).
bool approx_equal(const Measure& a, const Measure& b, double tol = 1e-12);

/// Pointwise min / max of densities.
Measure meet(const Measure& a, const Measure& b);
Measure join(const Measure& a, const Measure& b);

/// Density zeroed outside `set`.
Measure restrict(const Measure& m, const PointSet& set);

/// t in [0,1].
Measure scale(const Measure& m, double t);

/// Sum, rejecting results that would exceed density 1 (tolerance 1e-12).
Measure add_checked(const Measure& a, const Measure& b);

}  // namespace mms

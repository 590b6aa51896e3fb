#include "mms/measure.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mms/errors.hpp"

namespace mms {

namespace {
constexpr double kDensityTol = 1e-12;

void require_same_space(const Measure& a, const Measure& b, const char* op) {
  if (!same_space(a, b)) {
    throw MismatchError(std::string(op) + ": measures live on different spaces");
  }
}
}  // namespace

Measure::Measure(SpacePtr space, std::vector<double> density) : space_(std::move(space)) {
  if (!space_) throw std::invalid_argument("measure: null space");
  if (static_cast<int>(density.size()) != space_->size()) {
    throw MismatchError("measure: density length does not match point count");
  }
  for (std::size_t i = 0; i < density.size(); ++i) {
    const double v = density[i];
    if (!(v >= -kDensityTol && v <= 1.0 + kDensityTol)) {
      throw std::invalid_argument("measure: density[" + std::to_string(i) +
                                  "] = " + std::to_string(v) + " outside [0,1]");
    }
    density[i] = std::clamp(v, 0.0, 1.0);
  }
  phi_ = std::move(density);
  mass_ = 0.0;
  for (int i = 0; i < space_->size(); ++i) mass_ += phi_[i] * space_->weight(i);
}

Measure Measure::zero(SpacePtr space) {
  const int n = space->size();
  return Measure(std::move(space), std::vector<double>(n, 0.0));
}

Measure Measure::indicator(SpacePtr space, const PointSet& set) {
  std::vector<double> phi(space->size(), 0.0);
  for (int i : set) phi.at(i) = 1.0;
  return Measure(std::move(space), std::move(phi));
}

PointSet Measure::support() const {
  PointSet s;
  for (int i = 0; i < space_->size(); ++i) {
    if (phi_[i] > 0.0) s.push_back(i);
  }
  return s;
}

bool same_space(const Measure& a, const Measure& b) {
  if (a.space_ptr() == b.space_ptr()) return true;
  const auto& sa = a.space();
  const auto& sb = b.space();
  if (sa.size() != sb.size()) return false;
  const int n = sa.size();
  for (int i = 0; i < n; ++i) {
    if (sa.weight(i) != sb.weight(i)) return false;
    for (int j = 0; j < n; ++j) {
      if (sa.dist(i, j) != sb.dist(i, j)) return false;
    }
  }
  return true;
}

bool approx_equal(const Measure& a, const Measure& b, double tol) {
  if (!same_space(a, b)) return false;
  for (int i = 0; i < a.space().size(); ++i) {
    if (std::abs(a.density(i) - b.density(i)) > tol) return false;
  }
  return true;
}

Measure meet(const Measure& a, const Measure& b) {
  require_same_space(a, b, "meet");
  std::vector<double> phi(a.space().size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    phi[i] = std::min(a.density(static_cast<int>(i)), b.density(static_cast<int>(i)));
  }
  return Measure(a.space_ptr(), std::move(phi));
}

Measure join(const Measure& a, const Measure& b) {
  require_same_space(a, b, "join");
  std::vector<double> phi(a.space().size());
  for (std::size_t i = 0; i < phi.size(); ++i) {
    phi[i] = std::max(a.density(static_cast<int>(i)), b.density(static_cast<int>(i)));
  }
  return Measure(a.space_ptr(), std::move(phi));
}

Measure restrict(const Measure& m, const PointSet& set) {
  std::vector<double> phi(m.space().size(), 0.0);
  for (int i : set) phi.at(i) = m.density(i);
  return Measure(m.space_ptr(), std::move(phi));
}

Measure scale(const Measure& m, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("scale: t must be in [0,1]");
  std::vector<double> phi(m.densities());
  for (double& v : phi) v *= t;
  return Measure(m.space_ptr(), std::move(phi));
}

Measure add_checked(const Measure& a, const Measure& b) {
  require_same_space(a, b, "add_checked");
  std::vector<double> phi(a.space().size());
  for (int i = 0; i < a.space().size(); ++i) {
    const double v = a.density(i) + b.density(i);
    if (v > 1.0 + kDensityTol) {
      throw std::invalid_argument("add_checked: sum exceeds density 1 at point " +
                                  std::to_string(i));
    }
    phi[i] = std::min(v, 1.0);
  }
  return Measure(a.space_ptr(), std::move(phi));
}

}  // namespace mms

#pragma once

#include <cstdint>
#include <random>

namespace mms {

/// Seeded generator with platform-independent draws. std::mt19937_64 itself is
/// fully specified; the helpers below avoid std::uniform_*_distribution, whose
/// output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t bits() { return gen_(); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi] inclusive.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(bits() % span);
  }

  /// Derive an independent stream, e.g. one per parallel branch.
  Rng split(std::uint64_t tag) {
    return Rng(bits() ^ (tag * 0x9e3779b97f4a7c15ULL));
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace mms

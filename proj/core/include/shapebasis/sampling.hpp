#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "shapebasis/geometry.hpp"

namespace shapebasis {

struct SamplingOptions {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  /// Worker threads; 0 means hardware concurrency. Results never depend on it.
  unsigned workers = 1;
};

/// Monte Carlo area estimate with a 95% half-width from the binomial variance
/// of the hit fraction, scaled by the window area.
struct MeasureEstimate {
  double value = 0.0;
  double half_width95 = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Uniform double in [0, 1) that depends only on (seed, counter).
double counter_uniform(std::uint64_t seed, std::uint64_t counter);

/// Derives an independent seed for a sub-stream (e.g. one rectangle of a family).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform sampling of a (possibly rotated) rectangle, stratified on a G x G
/// grid of its local frame: G = 64 once there are at least 4096 samples,
/// floor(sqrt(n)) below that. Sample j lands in stratum j mod G^2 and draws
/// its offsets from counters 2j and 2j+1, so every sample is a pure function
/// of (window, seed, j).
class StratifiedSampler {
 public:
  StratifiedSampler(const Rectangle& window, std::uint64_t samples, std::uint64_t seed);

  const Rectangle& window() const { return window_; }
  std::uint64_t samples() const { return samples_; }
  std::uint64_t seed() const { return seed_; }
  std::size_t grid() const { return grid_; }
  std::size_t stratum_count() const { return grid_ * grid_; }

  std::size_t stratum(std::uint64_t j) const { return static_cast<std::size_t>(j % stratum_count()); }
  std::uint64_t stratum_samples(std::size_t s) const;
  Point2 point(std::uint64_t j) const;

 private:
  Rectangle window_;
  std::uint64_t samples_;
  std::uint64_t seed_;
  std::size_t grid_;
};

/// Per-stratum counts of samples satisfying `hit`. Work is split across
/// `workers` threads; counts are integers, so the result is identical for
/// every partition.
std::vector<std::uint64_t> count_hits(const StratifiedSampler& sampler, unsigned workers,
                                      const std::function<bool(Point2)>& hit);

/// Stratified estimate of the area of {x in window : inside(x)}.
/// Throws InvalidArgument for zero samples.
MeasureEstimate estimate_area(const Rectangle& window,
                              const std::function<bool(Point2)>& inside,
                              const SamplingOptions& options);

}  // namespace shapebasis

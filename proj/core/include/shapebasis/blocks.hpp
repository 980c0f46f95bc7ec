#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "shapebasis/basis.hpp"
#include "shapebasis/geometry.hpp"
#include "shapebasis/maximal.hpp"
#include "shapebasis/orlicz.hpp"
#include "shapebasis/sampling.hpp"

namespace shapebasis {

/// Block k of a block configuration, materialized: the rectangles
/// [-sigma_k, sigma_k] x [-1, 1] rotated about the origin to every block angle,
/// and the test square [0,1]^2 rotated by theta_{k+1}.
struct BlockFamily {
  std::size_t k = 0;
  int count = 0;
  double sigma = 1.0;
  std::vector<double> angles;
  std::vector<Rectangle> rects;
  ConvexPolygon theta_set;
  bool angle_condition_ok = false;

  /// sigma_k times the indicator of theta_set.
  SimpleFunction test_function() const;
  RectFamily as_family() const;
  /// Bounding box of all rectangles; contains their union.
  Rectangle window() const;
};

/// Does not fail when the angle condition is violated; the flag
/// `angle_condition_ok` records it so the violating regime can be explored.
BlockFamily build_family(const BlockConfig& cfg, std::size_t k);

/// Every corner of theta_set lies in every rectangle of the family.
bool containment_check(const BlockFamily& family);

/// For each rectangle, Monte Carlo points whose long-axis coordinate exceeds
/// sigma_k / 2 in absolute value must avoid every other rectangle.
bool uncovered_strip_check(const BlockFamily& family, std::uint64_t samples_per_rect,
                           std::uint64_t seed, unsigned workers = 1);

/// Monte Carlo area of the union of the family over its bounding box.
/// Throws InvalidArgument below 10^4 samples.
MeasureEstimate union_area(const BlockFamily& family, const SamplingOptions& options);

struct HalfAreaResult {
  bool passed;
  /// |union| / (N_k 4 sigma_k).
  double ratio;
  MeasureEstimate estimate;
};

/// ratio >= 1/2 - half_width / (N_k 4 sigma_k).
HalfAreaResult half_area_check(const BlockFamily& family, const SamplingOptions& options);

/// Every sample of the union sees a maximal average of sigma_k chi_Theta of at
/// least 1/4 (minus 1e-12). Throws ContainmentFailed if containment_check fails.
bool quarter_bound_check(const BlockFamily& family, const SamplingOptions& options);

struct DivergenceRow {
  std::size_t k;
  int count;
  double sigma;
  double ratio;
  bool angle_condition_ok;
};

struct DivergenceReport {
  std::vector<DivergenceRow> rows;
  /// Last ratio divided by the first.
  double growth;
};

/// Necessity ratios N_k sigma_k / Phi(sigma_k) for k = 0..k_max.
/// Throws IndexOutOfRange if k_max is not a block of cfg.
DivergenceReport divergence_report(const BlockConfig& cfg, const YoungFunction& phi,
                                   std::size_t k_max);

}  // namespace shapebasis

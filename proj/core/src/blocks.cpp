#include "shapebasis/blocks.hpp"

#include <cmath>
#include <string>

#include "shapebasis/errors.hpp"

namespace shapebasis {

namespace {

constexpr double kContainmentSlack = 1e-12;
constexpr std::uint64_t kMinUnionSamples = 10000;

std::uint64_t total(const std::vector<std::uint64_t>& counts) {
  std::uint64_t sum = 0;
  for (std::uint64_t c : counts) sum += c;
  return sum;
}

}  // namespace

SimpleFunction BlockFamily::test_function() const {
  return SimpleFunction::indicator(theta_set, sigma);
}

RectFamily BlockFamily::as_family() const {
  return {rects, "block " + std::to_string(k)};
}

Rectangle BlockFamily::window() const { return bounding_box(rects); }

BlockFamily build_family(const BlockConfig& cfg, std::size_t k) {
  BlockFamily family;
  family.k = k;
  family.count = cfg.count(k);
  family.sigma = cfg.sigma(k);
  family.angles = block_angles(cfg, k);
  family.angle_condition_ok = check_angle_condition(cfg, k);
  family.rects.reserve(family.angles.size());
  for (double angle : family.angles) {
    family.rects.emplace_back(Point2{0.0, 0.0}, angle, 2.0 * family.sigma, 2.0);
  }
  const double base = cfg.theta(k + 1);
  family.theta_set = rect_polygon(Rectangle(rotate({0.5, 0.5}, base), base, 1.0, 1.0));
  return family;
}

bool containment_check(const BlockFamily& family) {
  for (const Rectangle& r : family.rects) {
    for (const Point2& v : family.theta_set.vertices()) {
      if (!r.contains(v, kContainmentSlack)) return false;
    }
  }
  return true;
}

bool uncovered_strip_check(const BlockFamily& family, std::uint64_t samples_per_rect,
                           std::uint64_t seed, unsigned workers) {
  const std::size_t n = family.rects.size();
  if (n <= 1) return true;
  const double strip = 0.5 * family.sigma;
  for (std::size_t i = 0; i < n; ++i) {
    const Rectangle& own = family.rects[i];
    const StratifiedSampler sampler(own, samples_per_rect, derive_seed(seed, i));
    const auto violations = count_hits(sampler, workers, [&](Point2 x) {
      if (std::abs(own.to_local(x).x) <= strip) return false;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && family.rects[j].contains(x)) return true;
      }
      return false;
    });
    if (total(violations) != 0) return false;
  }
  return true;
}

MeasureEstimate union_area(const BlockFamily& family, const SamplingOptions& options) {
  if (options.samples < kMinUnionSamples) {
    throw Error(ErrorCode::InvalidArgument, "union area needs >= 10^4 samples");
  }
  return estimate_area(
      family.window(),
      [&](Point2 x) {
        for (const Rectangle& r : family.rects) {
          if (r.contains(x)) return true;
        }
        return false;
      },
      options);
}

HalfAreaResult half_area_check(const BlockFamily& family, const SamplingOptions& options) {
  const MeasureEstimate est = union_area(family, options);
  const double full = family.count * 4.0 * family.sigma;
  const double ratio = est.value / full;
  return {ratio >= 0.5 - est.half_width95 / full, ratio, est};
}

bool quarter_bound_check(const BlockFamily& family, const SamplingOptions& options) {
  if (!containment_check(family)) {
    throw Error(ErrorCode::ContainmentFailed,
                "test square escapes a rectangle of block " + std::to_string(family.k));
  }
  const MaximalEvaluator eval(family.as_family(), family.test_function());
  const StratifiedSampler sampler(family.window(), options.samples, options.seed);
  const auto violations = count_hits(sampler, options.workers, [&](Point2 x) {
    const auto m = eval.at(x);
    return m && *m < 0.25 - 1e-12;
  });
  return total(violations) == 0;
}

DivergenceReport divergence_report(const BlockConfig& cfg, const YoungFunction& phi,
                                   std::size_t k_max) {
  if (k_max >= cfg.block_count()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "k_max " + std::to_string(k_max) + " beyond " +
                    std::to_string(cfg.block_count()) + " blocks");
  }
  DivergenceReport report;
  for (std::size_t k = 0; k <= k_max; ++k) {
    report.rows.push_back({k, cfg.count(k), cfg.sigma(k), necessity_ratio(cfg, phi, k),
                           check_angle_condition(cfg, k)});
  }
  report.growth = report.rows.back().ratio / report.rows.front().ratio;
  return report;
}

}  // namespace shapebasis

#include "shapebasis/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "shapebasis/errors.hpp"

namespace shapebasis {

namespace {

constexpr std::size_t kMaxGrid = 64;
constexpr double kZ95 = 1.959963984540054;

unsigned resolve_workers(unsigned workers) {
  if (workers != 0) return workers;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double counter_uniform(std::uint64_t seed, std::uint64_t counter) {
  const std::uint64_t bits = mix64(mix64(seed) ^ mix64(counter ^ 0xD1B54A32D192ED03ULL));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return mix64(seed ^ mix64(stream + 0x632BE59BD9B4E019ULL));
}

// ---------------------------------------------------------------------------

StratifiedSampler::StratifiedSampler(const Rectangle& window, std::uint64_t samples,
                                     std::uint64_t seed)
    : window_(window), samples_(samples), seed_(seed), grid_(1) {
  if (samples == 0) {
    throw Error(ErrorCode::InvalidArgument, "sampling needs at least one sample");
  }
  if (samples >= kMaxGrid * kMaxGrid) {
    grid_ = kMaxGrid;
  } else {
    grid_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(samples))));
    while (grid_ * grid_ > samples) --grid_;
  }
}

std::uint64_t StratifiedSampler::stratum_samples(std::size_t s) const {
  const std::uint64_t strata = stratum_count();
  return samples_ / strata + (s < samples_ % strata ? 1 : 0);
}

Point2 StratifiedSampler::point(std::uint64_t j) const {
  const std::size_t s = stratum(j);
  const double g = static_cast<double>(grid_);
  const double a = (static_cast<double>(s % grid_) + counter_uniform(seed_, 2 * j)) / g;
  const double b = (static_cast<double>(s / grid_) + counter_uniform(seed_, 2 * j + 1)) / g;
  return window_.from_local({(a - 0.5) * window_.long_side(), (b - 0.5) * window_.short_side()});
}

std::vector<std::uint64_t> count_hits(const StratifiedSampler& sampler, unsigned workers,
                                      const std::function<bool(Point2)>& hit) {
  const std::uint64_t n = sampler.samples();
  const std::size_t strata = sampler.stratum_count();
  const unsigned threads =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_workers(workers), n));

  std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(strata, 0));
  auto run = [&](unsigned w) {
    const std::uint64_t begin = n * w / threads;
    const std::uint64_t end = n * (w + 1) / threads;
    auto& counts = partial[w];
    for (std::uint64_t j = begin; j < end; ++j) {
      if (hit(sampler.point(j))) ++counts[sampler.stratum(j)];
    }
  };

  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(run, w);
  }

  std::vector<std::uint64_t> total(strata, 0);
  for (const auto& counts : partial) {
    for (std::size_t s = 0; s < strata; ++s) total[s] += counts[s];
  }
  return total;
}

MeasureEstimate estimate_area(const Rectangle& window,
                              const std::function<bool(Point2)>& inside,
                              const SamplingOptions& options) {
  const StratifiedSampler sampler(window, options.samples, options.seed);
  const std::vector<std::uint64_t> hits = count_hits(sampler, options.workers, inside);

  const double area = window.area();
  const double cell_area = area / static_cast<double>(sampler.stratum_count());
  double value = 0.0;
  for (std::size_t s = 0; s < hits.size(); ++s) {
    const std::uint64_t ns = sampler.stratum_samples(s);
    if (ns == 0) continue;
    value += cell_area * static_cast<double>(hits[s]) / static_cast<double>(ns);
  }
  const double p = std::clamp(value / area, 0.0, 1.0);
  const double half_width =
      kZ95 * area * std::sqrt(p * (1.0 - p) / static_cast<double>(options.samples));
  return {value, half_width, options.samples, options.seed};
}

}  // namespace shapebasis

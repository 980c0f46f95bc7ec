#include "shapebasis/maximal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shapebasis/errors.hpp"
#include "shapebasis/shape_law.hpp"

namespace shapebasis {

namespace {

constexpr std::uint64_t kMinSuperlevelSamples = 1000;
constexpr double kSlack = 1e-12;

void require_window(const RectFamily& family, const Rectangle& window) {
  const double tol = 1e-12 * std::max(window.long_side(), 1.0);
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    for (const Point2& c : family.members[i].corners()) {
      if (!window.contains(c, tol)) {
        throw Error(ErrorCode::WindowTooSmall,
                    "member " + std::to_string(i) + " leaves the sampling window");
      }
    }
  }
}

}  // namespace

double average_over(const Rectangle& r, const SimpleFunction& f) {
  const ConvexPolygon box = rect_polygon(r);
  double integral = 0.0;
  for (const SimpleTerm& term : f.terms()) {
    integral += term.coefficient * clip_convex(term.support, box).area();
  }
  return integral / r.area();
}

std::optional<double> maximal_at(Point2 x, const RectFamily& family, const SimpleFunction& f) {
  std::optional<double> best;
  for (const Rectangle& r : family.members) {
    if (!r.contains(x)) continue;
    const double avg = average_over(r, f);
    if (!best || avg > *best) best = avg;
  }
  return best;
}

MaximalEvaluator::MaximalEvaluator(const RectFamily& family, const SimpleFunction& f)
    : members_(family.members) {
  averages_.reserve(members_.size());
  for (const Rectangle& r : members_) averages_.push_back(average_over(r, f));
}

std::optional<double> MaximalEvaluator::at(Point2 x) const {
  std::optional<double> best;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (best && averages_[i] <= *best) continue;
    if (members_[i].contains(x)) best = averages_[i];
  }
  return best;
}

MeasureEstimate superlevel_measure(const RectFamily& family, const SimpleFunction& f,
                                   double lambda, const Rectangle& window,
                                   const SamplingOptions& options) {
  if (family.members.empty()) {
    throw Error(ErrorCode::EmptyInput, "maximal function over an empty family");
  }
  if (options.samples < kMinSuperlevelSamples) {
    throw Error(ErrorCode::InvalidArgument, "superlevel measure needs >= 1000 samples");
  }
  require_window(family, window);
  const MaximalEvaluator eval(family, f);
  return estimate_area(
      window,
      [&](Point2 x) {
        const auto m = eval.at(x);
        return m && *m > lambda;
      },
      options);
}

SandwichResult sandwich_check(const Rectangle& r, double t, double rho0, const SimpleFunction& f) {
  const double theta = std::min(r.theta(), kPi - r.theta());
  const Rectangle inner = check_rect(r, t);
  const Rectangle outer = hat_rect(r);

  const AreaMultipliers m = area_multipliers(t, theta, r.shape());
  const double ratio = m.hat / m.check;
  if (ratio > rho0 * (1.0 + kSlack)) {
    throw Error(ErrorCode::PreconditionViolated,
                "rectangle ratio " + std::to_string(ratio) + " exceeds rho0 " +
                    std::to_string(rho0));
  }

  const double avg_r = average_over(r, f);
  const double avg_inner = average_over(inner, f);
  const double avg_outer = average_over(outer, f);

  const double lhs_scale = std::max({1.0, std::abs(avg_inner), std::abs(rho0 * avg_r)});
  const double rhs_scale = std::max({1.0, std::abs(avg_r), std::abs(rho0 * avg_outer)});
  return {avg_inner <= rho0 * avg_r + kSlack * lhs_scale,
          avg_r <= rho0 * avg_outer + kSlack * rhs_scale};
}

std::vector<WeakTypeReport> weak_type_probe(const RectFamily& family, const SimpleFunction& f,
                                            const YoungFunction& phi,
                                            std::span<const double> lambdas,
                                            const Rectangle& window,
                                            const SamplingOptions& options) {
  if (f.is_zero()) {
    throw Error(ErrorCode::PhiMassZero, "weak-type probe of the zero function");
  }
  std::vector<WeakTypeReport> out;
  out.reserve(lambdas.size());
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "lambda must be > 0");
    }
    const double mass = phi_integral(phi, f, lambda);
    if (!(mass > 0.0)) {
      throw Error(ErrorCode::PhiMassZero,
                  "Phi-mass vanishes at lambda " + std::to_string(lambda));
    }
    const MeasureEstimate level = superlevel_measure(family, f, lambda, window, options);
    out.push_back({lambda, level, mass, level.value / mass});
  }
  return out;
}

}  // namespace shapebasis

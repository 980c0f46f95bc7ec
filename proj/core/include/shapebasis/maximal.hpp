#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "shapebasis/geometry.hpp"
#include "shapebasis/orlicz.hpp"
#include "shapebasis/sampling.hpp"

namespace shapebasis {

/// Finite materialization of a differentiation basis.
struct RectFamily {
  std::vector<Rectangle> members;
  std::string label;
};

/// (1/|r|) integral over r of f, computed exactly by polygon clipping.
double average_over(const Rectangle& r, const SimpleFunction& f);

/// Max of average_over(r, f) over the members r containing x, or nullopt when
/// no member contains x. Over a finite family this is a lower bound for the
/// supremum over the full basis.
std::optional<double> maximal_at(Point2 x, const RectFamily& family, const SimpleFunction& f);

/// Caches each member's average so repeated point queries only test
/// containment. Keeps references to nothing; safe to share across threads.
class MaximalEvaluator {
 public:
  MaximalEvaluator(const RectFamily& family, const SimpleFunction& f);

  std::optional<double> at(Point2 x) const;
  std::span<const double> averages() const { return averages_; }

 private:
  std::vector<Rectangle> members_;
  std::vector<double> averages_;
};

/// Monte Carlo area of {x in window : maximal_at(x) > lambda}.
/// Throws EmptyInput for an empty family, InvalidArgument for fewer than 1000
/// samples and WindowTooSmall when a member leaves the window.
MeasureEstimate superlevel_measure(const RectFamily& family, const SimpleFunction& f,
                                   double lambda, const Rectangle& window,
                                   const SamplingOptions& options);

struct SandwichResult {
  bool lhs_ok;
  bool rhs_ok;
};

/// Per-rectangle form of the two-sided comparison between the rotated basis
/// and its inscribed / circumscribed axis-parallel bases:
///   lhs: avg(check_rect(r, t)) <= rho0 avg(r)
///   rhs: avg(r) <= rho0 avg(hat_rect(r))
/// each with slack 1e-12 max(1, |values|). Throws PreconditionViolated when
/// rho_t(theta, shape(r)) > rho0, NonPositiveCheck when check_rect degenerates.
SandwichResult sandwich_check(const Rectangle& r, double t, double rho0, const SimpleFunction& f);

struct WeakTypeReport {
  double lambda;
  MeasureEstimate superlevel;
  double phi_mass;
  /// superlevel.value / phi_mass: any constant C in the weak-type estimate is
  /// at least this (up to Monte Carlo error).
  double c_lower;
};

/// One report per lambda. All lambdas share the same sample points, so the
/// superlevel column is exactly nonincreasing in lambda. Throws PhiMassZero
/// when the Phi-mass of f vanishes.
std::vector<WeakTypeReport> weak_type_probe(const RectFamily& family, const SimpleFunction& f,
                                            const YoungFunction& phi,
                                            std::span<const double> lambdas,
                                            const Rectangle& window,
                                            const SamplingOptions& options);

}  // namespace shapebasis

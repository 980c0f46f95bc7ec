#pragma once

#include <span>

namespace shapebasis {

/// Smallest admissible target ratio for a given t: 4 ((1-t)/(1-2t))^2.
double min_rho0(double t);

/// The pair (t, rho0) that drives the shape-function construction.
class ShapeLawParams {
 public:
  /// Throws InvalidArgument unless 0 < t < 1/2 and min_rho0(t) <= rho0 < inf.
  ShapeLawParams(double t, double rho0);

  double t() const { return t_; }
  double rho0() const { return rho0_; }

 private:
  double t_;
  double rho0_;
};

/// Areas of the circumscribed and inscribed axis-parallel rectangles as
/// multiples of |R|.
struct AreaMultipliers {
  double hat;
  double check;
};

// theta is in radians throughout; sigma is the shape L / l >= 1.

/// Closed forms
///   hat   = 1 + (sigma + 1/sigma) sin(2 theta) / 2
///   check = (1-2t) cos(2 theta) + (1/sigma - (1-2t)^2 sigma) sin(2 theta) / 2.
/// `check` may be <= 0; the caller interprets it.
AreaMultipliers area_multipliers(double t, double theta, double sigma);

/// Critical shape at which the inscribed rectangle degenerates:
/// (cot 2theta + sqrt(1 + cot^2 2theta)) / (1-2t). Needs 0 < theta < pi/2.
double sigma_star(double t, double theta);

/// hat / check. Throws DegenerateShape once sigma >= sigma_star(t, theta).
double rho(double t, double theta, double sigma);

struct RhoPartials {
  double d_sigma;
  double d_theta;
};

/// Partial derivatives of rho from the closed-form numerators divided by
/// check^2. Same domain as rho.
RhoPartials rho_partials(double t, double theta, double sigma);

/// The shape sigma in [1/(1-2t), sigma_star) with rho(t, theta, sigma) = rho0,
/// found by bisection on the increasing map sigma -> rho. The root is approached
/// from below: rho(result) <= rho0 with rho0 - rho(result) <= 1e-10 rho0.
/// theta must lie in (0, pi/6]. Throws Infeasible if rho at the lower end
/// already exceeds rho0.
double solve_sigma(const ShapeLawParams& params, double theta);

/// Explicit lower bound for solve_sigma:
/// ((1-2t) rho0 - 1/cos 2theta) / ((1-2t)^2 rho0 + 1) * cot 2theta.
double sigma_lower_bound(double t, double rho0, double theta);

struct AngleShape {
  double theta;
  double sigma;
};

/// Bounds c1 <= theta * sigma(theta) <= c2 over the samples.
struct GrowthFit {
  double c1;
  double c2;
};

/// Throws EmptyInput for no samples and InvalidArgument for theta <= 0.
GrowthFit growth_fit(std::span<const AngleShape> samples);

}  // namespace shapebasis

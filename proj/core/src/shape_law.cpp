#include "shapebasis/shape_law.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "shapebasis/errors.hpp"
#include "shapebasis/geometry.hpp"

namespace shapebasis {

namespace {

constexpr int kMaxBisections = 200;
constexpr double kResidualTolerance = 1e-10;

void require_t(double t) {
  if (!(t > 0.0 && t < 0.5)) {
    throw Error(ErrorCode::InvalidArgument,
                "t must lie in (0, 1/2), got " + std::to_string(t));
  }
}

void require_sigma(double sigma) {
  if (!(sigma >= 1.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::InvalidArgument,
                "shape must be finite and >= 1, got " + std::to_string(sigma));
  }
}

void require_open_angle(double theta) {
  if (!(theta > 0.0 && theta < kHalfPi)) {
    throw Error(ErrorCode::InvalidArgument,
                "angle must lie in (0, pi/2), got " + std::to_string(theta));
  }
}

void require_construction_angle(double theta) {
  if (!(theta > 0.0 && theta <= kPi / 6)) {
    throw Error(ErrorCode::InvalidArgument,
                "angle must lie in (0, pi/6], got " + std::to_string(theta));
  }
}

// rho without domain checks; +inf once the inscribed rectangle is gone.
double rho_or_inf(double t, double theta, double sigma) {
  const AreaMultipliers a = area_multipliers(t, theta, sigma);
  if (!(a.check > 0.0)) return std::numeric_limits<double>::infinity();
  return a.hat / a.check;
}

void require_nondegenerate(double t, double theta, double sigma) {
  require_t(t);
  require_open_angle(theta);
  require_sigma(sigma);
  if (sigma >= sigma_star(t, theta) || !(area_multipliers(t, theta, sigma).check > 0.0)) {
    throw Error(ErrorCode::DegenerateShape,
                "shape " + std::to_string(sigma) + " reaches the critical shape " +
                    std::to_string(sigma_star(t, theta)));
  }
}

}  // namespace

double min_rho0(double t) {
  const double q = (1.0 - t) / (1.0 - 2.0 * t);
  return 4.0 * q * q;
}

ShapeLawParams::ShapeLawParams(double t, double rho0) : t_(t), rho0_(rho0) {
  require_t(t);
  if (!std::isfinite(rho0) || rho0 < min_rho0(t)) {
    throw Error(ErrorCode::InvalidArgument,
                "rho0 must be finite and >= " + std::to_string(min_rho0(t)) +
                    ", got " + std::to_string(rho0));
  }
}

AreaMultipliers area_multipliers(double t, double theta, double sigma) {
  const double a = 1.0 - 2.0 * t;
  const double s = std::sin(2.0 * theta);
  const double c = std::cos(2.0 * theta);
  return {1.0 + 0.5 * (sigma + 1.0 / sigma) * s,
          a * c + 0.5 * (1.0 / sigma - a * a * sigma) * s};
}

double sigma_star(double t, double theta) {
  require_t(t);
  require_open_angle(theta);
  const double cot2 = std::cos(2.0 * theta) / std::sin(2.0 * theta);
  const double root = std::sqrt(1.0 + cot2 * cot2);
  // Same quantity; the reciprocal form avoids cancellation once cot 2theta < 0.
  const double sum = cot2 >= 0.0 ? cot2 + root : 1.0 / (root - cot2);
  return sum / (1.0 - 2.0 * t);
}

double rho(double t, double theta, double sigma) {
  require_nondegenerate(t, theta, sigma);
  const AreaMultipliers m = area_multipliers(t, theta, sigma);
  return m.hat / m.check;
}

RhoPartials rho_partials(double t, double theta, double sigma) {
  require_nondegenerate(t, theta, sigma);
  const double a = 1.0 - 2.0 * t;
  const double s = std::sin(2.0 * theta);
  const double c = std::cos(2.0 * theta);
  const double inv = 1.0 / sigma;
  const double check = area_multipliers(t, theta, sigma).check;
  const double check_sq = check * check;

  const double num_sigma = 0.5 * inv * s * s * (1.0 + a * a) +
                           0.25 * a * std::sin(4.0 * theta) * (1.0 - inv * inv) +
                           0.5 * s * (inv * inv + a * a);
  const double num_theta =
      a * (sigma + inv) + 2.0 * a * s + (a * a * sigma - inv) * c;
  return {num_sigma / check_sq, num_theta / check_sq};
}

double solve_sigma(const ShapeLawParams& params, double theta) {
  require_construction_angle(theta);
  const double t = params.t();
  const double target = params.rho0();
  double lo = 1.0 / (1.0 - 2.0 * t);
  double hi = sigma_star(t, theta);

  const double rho_lo = rho_or_inf(t, theta, lo);
  if (rho_lo > target) {
    throw Error(ErrorCode::Infeasible,
                "rho at shape 1/(1-2t) is " + std::to_string(rho_lo) +
                    " > rho0 = " + std::to_string(target));
  }
  if (rho_lo == target) return lo;

  // Keep lo on the feasible side so the returned shape never overshoots rho0.
  double rho_at_lo = rho_lo;
  for (int i = 0; i < kMaxBisections; ++i) {
    if (target - rho_at_lo <= kResidualTolerance * target) break;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double r = rho_or_inf(t, theta, mid);
    if (r > target) {
      hi = mid;
    } else {
      lo = mid;
      rho_at_lo = r;
    }
  }
  return lo;
}

double sigma_lower_bound(double t, double rho0, double theta) {
  require_t(t);
  require_construction_angle(theta);
  const double a = 1.0 - 2.0 * t;
  const double numerator = a * rho0 - 1.0 / std::cos(2.0 * theta);
  const double denominator = a * a * rho0 + 1.0;
  return numerator / denominator / std::tan(2.0 * theta);
}

GrowthFit growth_fit(std::span<const AngleShape> samples) {
  if (samples.empty()) {
    throw Error(ErrorCode::EmptyInput, "growth fit of no samples");
  }
  GrowthFit fit{std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity()};
  for (const AngleShape& s : samples) {
    if (!(s.theta > 0.0)) {
      throw Error(ErrorCode::InvalidArgument, "growth fit needs theta > 0");
    }
    const double product = s.theta * s.sigma;
    fit.c1 = std::min(fit.c1, product);
    fit.c2 = std::max(fit.c2, product);
  }
  return fit;
}

}  // namespace shapebasis

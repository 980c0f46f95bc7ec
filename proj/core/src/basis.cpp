#include "shapebasis/basis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "shapebasis/errors.hpp"

namespace shapebasis {

std::vector<double> geometric_angles(int max_exponent) {
  if (max_exponent < 0) {
    throw Error(ErrorCode::InvalidArgument, "geometric angle depth must be >= 0");
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(max_exponent) + 1);
  for (int k = 0; k <= max_exponent; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

// ---------------------------------------------------------------------------
// BlockConfig

BlockConfig::BlockConfig(std::vector<double> thetas, std::vector<int> counts,
                         std::vector<double> sigmas)
    : thetas_(std::move(thetas)),
      counts_(std::move(counts)),
      sigmas_(std::move(sigmas)) {
  if (counts_.empty() || counts_.size() != sigmas_.size() ||
      thetas_.size() != counts_.size() + 1) {
    throw Error(ErrorCode::InvalidArgument,
                "block config needs k+1 angles for k counts and k shapes");
  }
  for (std::size_t i = 0; i < thetas_.size(); ++i) {
    if (!(thetas_[i] > 0.0) || !std::isfinite(thetas_[i]) ||
        (i > 0 && !(thetas_[i] < thetas_[i - 1]))) {
      throw Error(ErrorCode::InvalidArgument,
                  "block angles must be positive and strictly decreasing");
    }
  }
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (counts_[k] < 1) {
      throw Error(ErrorCode::InvalidArgument, "block counts must be >= 1");
    }
    if (!(sigmas_[k] >= 1.0) || !std::isfinite(sigmas_[k])) {
      throw Error(ErrorCode::InvalidArgument, "block shapes must be finite and >= 1");
    }
  }
}

void BlockConfig::require_block(std::size_t k) const {
  if (k >= counts_.size()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "block " + std::to_string(k) + " of " + std::to_string(counts_.size()));
  }
}

double BlockConfig::theta(std::size_t k) const {
  if (k >= thetas_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "angle index " + std::to_string(k));
  }
  return thetas_[k];
}

int BlockConfig::count(std::size_t k) const {
  require_block(k);
  return counts_[k];
}

double BlockConfig::sigma(std::size_t k) const {
  require_block(k);
  return sigmas_[k];
}

std::vector<double> block_angles(const BlockConfig& cfg, std::size_t k) {
  const int n = cfg.count(k);
  const double upper = cfg.theta(k);
  const double lower = cfg.theta(k + 1);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.push_back(lower + (static_cast<double>(i) / n) * (upper - lower));
  }
  return out;
}

bool check_angle_condition(const BlockConfig& cfg, std::size_t k) {
  const double gap = (cfg.theta(k) - cfg.theta(k + 1)) / cfg.count(k);
  const double lhs = std::sin(gap);
  const double rhs = 4.0 / cfg.sigma(k);
  return lhs >= rhs * (1.0 - 1e-12);
}

BlockConfig corollary_config(std::span<const int> counts) {
  if (counts.empty()) {
    throw Error(ErrorCode::InvalidArgument, "corollary config needs at least one block");
  }
  std::vector<double> thetas;
  std::vector<double> sigmas;
  for (std::size_t k = 0; k <= counts.size(); ++k) {
    thetas.push_back(std::ldexp(1.0, -static_cast<int>(k)));
  }
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] < 1) {
      throw Error(ErrorCode::InvalidArgument, "block counts must be >= 1");
    }
    const double gap = std::ldexp(1.0, -static_cast<int>(k) - 1) / counts[k];
    sigmas.push_back(4.0 / std::sin(gap));
  }
  return BlockConfig(std::move(thetas), std::vector<int>(counts.begin(), counts.end()),
                     std::move(sigmas));
}

// ---------------------------------------------------------------------------
// ShapeFunction

ShapeFunction::ShapeFunction(std::map<double, double> entries,
                             ShapeProvenance provenance)
    : entries_(std::move(entries)), provenance_(provenance) {
  double previous = 0.0;
  bool first = true;
  for (const auto& [theta, sigma] : entries_) {
    if (!(sigma >= 1.0)) {
      throw Error(ErrorCode::InvalidArgument,
                  "shape below 1 at angle " + std::to_string(theta));
    }
    // Map iterates theta ascending, so shapes must strictly decrease.
    if (provenance_ == ShapeProvenance::SolverBuilt && !first && !(sigma < previous)) {
      throw Error(ErrorCode::InvalidArgument,
                  "solver-built shapes must strictly decrease in theta");
    }
    previous = sigma;
    first = false;
  }
}

double ShapeFunction::at(double theta) const {
  const auto it = entries_.find(theta);
  if (it == entries_.end()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "no shape for angle " + std::to_string(theta));
  }
  return it->second;
}

ShapeFunction shape_from_solver(std::span<const double> angles,
                                const ShapeLawParams& params) {
  std::map<double, double> entries;
  for (double theta : angles) entries[theta] = solve_sigma(params, theta);
  return ShapeFunction(std::move(entries), ShapeProvenance::SolverBuilt);
}

ShapeFunction shape_from_blocks(const BlockConfig& cfg) {
  std::map<double, double> entries;
  for (std::size_t k = 0; k < cfg.block_count(); ++k) {
    for (double theta : block_angles(cfg, k)) entries[theta] = cfg.sigma(k);
  }
  return ShapeFunction(std::move(entries), ShapeProvenance::BlockConstant);
}

// ---------------------------------------------------------------------------

Witness moriyon_witness(double theta, double sigma) {
  if (!(sigma >= 1.0) || !std::isfinite(sigma)) {
    throw Error(ErrorCode::InvalidArgument, "witness shape must be finite and >= 1");
  }
  const double root = std::sqrt(sigma);
  Rectangle rect({0.0, 0.0}, theta, root, 1.0 / root);
  double far = 0.0;
  for (const Point2& c : rect.corners()) far = std::max(far, norm(c));
  return {rect, far};
}

std::vector<Rectangle> stokolos_intervals(double sigma0,
                                          std::span<const double> sigmas,
                                          std::size_t n) {
  if (!(sigma0 >= 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "sigma0 must be >= 1");
  }
  if (n + 1 > sigmas.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "need " + std::to_string(n + 1) + " shapes, got " +
                    std::to_string(sigmas.size()));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    const double prev_scaled = std::ldexp(sigmas[k - 1], -static_cast<int>(k - 1));
    const double scaled = std::ldexp(sigmas[k], -static_cast<int>(k));
    if (!(sigmas[k] > sigmas[k - 1]) || !(scaled > prev_scaled)) {
      throw Error(ErrorCode::PreconditionViolated,
                  "sigma_k and sigma_k 2^-k must both increase strictly (k=" +
                      std::to_string(k) + ")");
    }
  }
  std::vector<Rectangle> out;
  out.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const double x_side = std::ldexp(sigma0, static_cast<int>(k));
    const double y_side = x_side / sigmas[k];
    out.push_back(Rectangle::axis_parallel({0.5 * x_side, 0.5 * y_side}, x_side, y_side));
  }
  return out;
}

}  // namespace shapebasis

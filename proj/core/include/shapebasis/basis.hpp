#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "shapebasis/geometry.hpp"
#include "shapebasis/shape_law.hpp"

namespace shapebasis {

/// {2^-k : 0 <= k <= K} in decreasing order.
std::vector<double> geometric_angles(int max_exponent);

/// Block angle set: between each consecutive pair theta_{k+1} < theta_k,
/// N_k uniformly spaced angles carry the constant shape sigma_k.
///
/// There is one (N_k, sigma_k) pair per block, so thetas has one more entry
/// than counts and sigmas.
class BlockConfig {
 public:
  /// Throws InvalidArgument unless thetas is strictly decreasing and positive,
  /// every count >= 1, every sigma >= 1 and the lengths agree.
  BlockConfig(std::vector<double> thetas, std::vector<int> counts,
              std::vector<double> sigmas);

  std::size_t block_count() const { return counts_.size(); }

  /// theta_k for 0 <= k <= block_count().
  double theta(std::size_t k) const;
  int count(std::size_t k) const;
  double sigma(std::size_t k) const;

  std::span<const double> thetas() const { return thetas_; }
  std::span<const int> counts() const { return counts_; }
  std::span<const double> sigmas() const { return sigmas_; }

 private:
  void require_block(std::size_t k) const;

  std::vector<double> thetas_;
  std::vector<int> counts_;
  std::vector<double> sigmas_;
};

/// theta_{k+1} + (i-1)(theta_k - theta_{k+1}) / N_k for i = 1..N_k.
/// Throws IndexOutOfRange for k >= block_count().
std::vector<double> block_angles(const BlockConfig& cfg, std::size_t k);

/// sin((theta_k - theta_{k+1}) / N_k) >= 4 / sigma_k, accepting equality up to
/// 1e-12 relative rounding.
bool check_angle_condition(const BlockConfig& cfg, std::size_t k);

/// theta_k = 2^-k and sigma_k = 4 / sin(2^-(k+1) / N_k) for k = 0..counts.size()-1.
BlockConfig corollary_config(std::span<const int> counts);

enum class ShapeProvenance { SolverBuilt, BlockConstant, Explicit };

/// Finite shape function theta -> sigma(theta) >= 1.
class ShapeFunction {
 public:
  /// Throws InvalidArgument for a shape below 1, or for solver-built entries
  /// that are not strictly decreasing in theta.
  ShapeFunction(std::map<double, double> entries, ShapeProvenance provenance);

  const std::map<double, double>& entries() const { return entries_; }
  ShapeProvenance provenance() const { return provenance_; }
  std::size_t size() const { return entries_.size(); }
  double at(double theta) const;

 private:
  std::map<double, double> entries_;
  ShapeProvenance provenance_;
};

ShapeFunction shape_from_solver(std::span<const double> angles,
                                const ShapeLawParams& params);

/// Every block angle mapped to its block's sigma_k.
ShapeFunction shape_from_blocks(const BlockConfig& cfg);

/// Unit-area rectangle centered at the origin with the given angle and shape,
/// together with the distance from the origin to its farthest corner.
struct Witness {
  Rectangle rect;
  double far_distance;
};

Witness moriyon_witness(double theta, double sigma);

/// Q_k = [0, 2^k sigma0] x [0, 2^k sigma0 / sigma_k] for k = 0..n. Throws
/// PreconditionViolated unless sigma_k and sigma_k 2^-k are strictly
/// increasing over the used prefix, and InvalidArgument if n + 1 exceeds the
/// number of shapes.
std::vector<Rectangle> stokolos_intervals(double sigma0,
                                          std::span<const double> sigmas,
                                          std::size_t n);

}  // namespace shapebasis

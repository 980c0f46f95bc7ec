#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "shapebasis/basis.hpp"
#include "shapebasis/geometry.hpp"

namespace shapebasis {

/// Young function Phi: [0, inf) -> [0, inf) with Phi(0) = 0, nondecreasing
/// and convex. The evaluator is trusted to satisfy those properties.
class YoungFunction {
 public:
  YoungFunction(std::string label, std::function<double(double)> evaluator);

  double operator()(double x) const { return evaluator_(x); }
  const std::string& label() const { return label_; }

 private:
  std::string label_;
  std::function<double(double)> evaluator_;
};

/// Phi(x) = x (1 + log_+^alpha x) with the natural logarithm.
/// Nondecreasing for every alpha > 0, convex only for alpha >= 1.
YoungFunction llogl(double alpha);

/// Phi(x) = x.
YoungFunction identity_young();

struct SimpleTerm {
  double coefficient;
  ConvexPolygon support;
};

/// Nonnegative simple function sum c_i chi_{S_i} with disjoint convex supports.
class SimpleFunction {
 public:
  SimpleFunction() = default;

  /// Throws InvalidArgument for a negative coefficient and OverlappingSupports
  /// when two supports share more than 1e-9 of the smaller area. Empty supports
  /// and zero coefficients are dropped.
  explicit SimpleFunction(std::vector<SimpleTerm> terms);

  static SimpleFunction indicator(const ConvexPolygon& support, double coefficient = 1.0);

  const std::vector<SimpleTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  double max_coefficient() const;

  /// Multiplies every coefficient by `factor` >= 0.
  SimpleFunction scaled(double factor) const;

 private:
  std::vector<SimpleTerm> terms_;
};

/// sum_i Phi(c_i / lambda) |S_i|.
double phi_integral(const YoungFunction& phi, const SimpleFunction& f, double lambda);

/// N_k sigma_k / Phi(sigma_k).
double necessity_ratio(const BlockConfig& cfg, const YoungFunction& phi, std::size_t k);

}  // namespace shapebasis

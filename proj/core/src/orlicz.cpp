#include "shapebasis/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "shapebasis/errors.hpp"

namespace shapebasis {

YoungFunction::YoungFunction(std::string label, std::function<double(double)> evaluator)
    : label_(std::move(label)), evaluator_(std::move(evaluator)) {
  if (!evaluator_) {
    throw Error(ErrorCode::InvalidArgument, "Young function without evaluator");
  }
}

YoungFunction llogl(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::InvalidArgument, "alpha must be finite and > 0");
  }
  std::ostringstream label;
  label << "LlogL^" << alpha;
  return YoungFunction(label.str(), [alpha](double x) {
    if (x <= 1.0) return x;
    return x * (1.0 + std::pow(std::log(x), alpha));
  });
}

YoungFunction identity_young() {
  return YoungFunction("L1", [](double x) { return x; });
}

// ---------------------------------------------------------------------------

SimpleFunction::SimpleFunction(std::vector<SimpleTerm> terms) {
  for (SimpleTerm& term : terms) {
    if (!(term.coefficient >= 0.0) || !std::isfinite(term.coefficient)) {
      throw Error(ErrorCode::InvalidArgument,
                  "simple function coefficients must be finite and >= 0");
    }
    if (term.coefficient == 0.0 || term.support.is_empty()) continue;
    terms_.push_back(std::move(term));
  }
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    for (std::size_t j = i + 1; j < terms_.size(); ++j) {
      const double overlap = clip_convex(terms_[i].support, terms_[j].support).area();
      const double smaller =
          std::min(terms_[i].support.area(), terms_[j].support.area());
      if (overlap > 1e-9 * smaller) {
        throw Error(ErrorCode::OverlappingSupports,
                    "supports " + std::to_string(i) + " and " + std::to_string(j) +
                        " overlap");
      }
    }
  }
}

SimpleFunction SimpleFunction::indicator(const ConvexPolygon& support, double coefficient) {
  return SimpleFunction({SimpleTerm{coefficient, support}});
}

double SimpleFunction::max_coefficient() const {
  double best = 0.0;
  for (const SimpleTerm& t : terms_) best = std::max(best, t.coefficient);
  return best;
}

SimpleFunction SimpleFunction::scaled(double factor) const {
  if (!(factor >= 0.0) || !std::isfinite(factor)) {
    throw Error(ErrorCode::InvalidArgument, "scale factor must be finite and >= 0");
  }
  SimpleFunction out;
  if (factor == 0.0) return out;
  out.terms_ = terms_;
  for (SimpleTerm& t : out.terms_) t.coefficient *= factor;
  return out;
}

double phi_integral(const YoungFunction& phi, const SimpleFunction& f, double lambda) {
  if (!(lambda > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "lambda must be > 0");
  }
  double total = 0.0;
  for (const SimpleTerm& t : f.terms()) {
    total += phi(t.coefficient / lambda) * t.support.area();
  }
  return total;
}

double necessity_ratio(const BlockConfig& cfg, const YoungFunction& phi, std::size_t k) {
  const double sigma = cfg.sigma(k);
  return cfg.count(k) * sigma / phi(sigma);
}

}  // namespace shapebasis

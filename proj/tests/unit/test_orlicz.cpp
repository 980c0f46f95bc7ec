#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "shapebasis/errors.hpp"
#include "shapebasis/orlicz.hpp"

namespace shapebasis {
namespace {

using testing::rel_err;

constexpr double kRatioK20 = 17.44146775324125156;
constexpr double kRatioK40 = 41.903368678078173537;

ConvexPolygon square(double x0, double y0, double side) {
  return ConvexPolygon({{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}});
}

BlockConfig power_config(int max_k, double power) {
  std::vector<int> counts;
  for (int k = 0; k <= max_k; ++k) {
    counts.push_back(k == 0 ? 1 : static_cast<int>(std::ceil(std::pow(k, power))));
  }
  return corollary_config(counts);
}

TEST(Llogl, Examples) {
  const YoungFunction phi = llogl(1.0);
  EXPECT_EQ(phi(1.0), 1.0);
  EXPECT_NEAR(phi(std::exp(1.0)), 2 * std::exp(1.0), 1e-14);
  EXPECT_NEAR(2 * std::exp(1.0), 5.43656, 1e-5);
  for (double alpha : {0.5, 1.0, 2.0, 3.5}) {
    EXPECT_EQ(llogl(alpha)(0.5), 0.5);
    EXPECT_EQ(llogl(alpha)(0.0), 0.0);
  }
  EXPECT_NEAR(llogl(2.0)(std::exp(3.0)), std::exp(3.0) * 10, 1e-10);
  EXPECT_THROW(llogl(0.0), Error);
  EXPECT_EQ(identity_young()(3.25), 3.25);
  EXPECT_FALSE(phi.label().empty());
}

TEST(Llogl, ConvexAndNondecreasing) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> log_x(-5.0, 30.0);
  for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
    const YoungFunction phi = llogl(alpha);
    for (int trial = 0; trial < 1000; ++trial) {
      double a = std::exp(log_x(rng)), b = std::exp(log_x(rng));
      if (a > b) std::swap(a, b);
      const double pa = phi(a), pb = phi(b);
      EXPECT_LE(phi(0.5 * (a + b)), 0.5 * (pa + pb) + 1e-12 * (pa + pb));
      EXPECT_LE(pa, pb);
    }
  }
}

TEST(Llogl, NotConvexJustAboveOneForSmallAlpha) {
  // For alpha < 1 the second derivative is negative while log x < 1 - alpha.
  const YoungFunction phi = llogl(0.5);
  const double a = 1.0, b = 1.2;
  EXPECT_GT(phi(0.5 * (a + b)), 0.5 * (phi(a) + phi(b)));
  EXPECT_LT(phi(1.1), phi(1.2));
}

TEST(SimpleFunction, Validation) {
  EXPECT_THROW(SimpleFunction({{-1.0, square(0, 0, 1)}}), Error);
  try {
    SimpleFunction({{1.0, square(0, 0, 1)}, {2.0, square(0.5, 0, 1)}});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OverlappingSupports);
  }
  const SimpleFunction touching({{1.0, square(0, 0, 1)}, {2.0, square(1, 0, 1)}});
  EXPECT_EQ(touching.terms().size(), 2u);
  const SimpleFunction dropped({{0.0, square(0, 0, 1)}, {2.0, ConvexPolygon::empty()}});
  EXPECT_TRUE(dropped.is_zero());
  EXPECT_EQ(touching.max_coefficient(), 2.0);
  EXPECT_EQ(touching.scaled(0.5).max_coefficient(), 1.0);
}

TEST(PhiIntegral, Examples) {
  const YoungFunction phi = llogl(1.0);
  for (double sigma : {1.0, 7.5, 1234.0}) {
    const auto f = SimpleFunction::indicator(square(-3, 2, 1), sigma);
    EXPECT_NEAR(phi_integral(phi, f, 1.0), phi(sigma), 1e-12 * phi(sigma));
  }
  EXPECT_EQ(phi_integral(phi, SimpleFunction(), 1.0), 0.0);

  const SimpleFunction f({{3.0, square(0, 0, 2)}, {10.0, square(5, 5, 1)}});
  EXPECT_NEAR(phi_integral(phi, f, 1.0), 4 * phi(3.0) + phi(10.0), 1e-12);
  double prev = INFINITY;
  for (double lambda = 0.01; lambda < 1e6; lambda *= 3) {
    const double value = phi_integral(phi, f, lambda);
    EXPECT_LT(value, prev);
    prev = value;
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(PhiIntegral, ScalingConsistency) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> coef(0.0, 100.0), lam(0.01, 50.0);
  const YoungFunction phi = llogl(1.5);
  for (int trial = 0; trial < 200; ++trial) {
    const SimpleFunction f({{coef(rng), square(0, 0, 1.5)}, {coef(rng), square(3, 0, 0.25)}});
    const double lambda = lam(rng);
    EXPECT_LE(rel_err(phi_integral(phi, f, lambda), phi_integral(phi, f.scaled(1 / lambda), 1.0)),
              1e-12);
  }
}

TEST(NecessityRatio, IdentityYoungGivesCounts) {
  const BlockConfig cfg = power_config(12, 2.0);
  for (std::size_t k = 0; k < cfg.block_count(); ++k) {
    EXPECT_NEAR(necessity_ratio(cfg, identity_young(), k), cfg.count(k), 1e-12 * cfg.count(k));
  }
  EXPECT_THROW(necessity_ratio(cfg, identity_young(), 13), Error);
}

TEST(NecessityRatio, ReferenceValues) {
  const BlockConfig cfg = power_config(40, 2.0);
  const YoungFunction phi = llogl(1.0);
  EXPECT_LE(rel_err(necessity_ratio(cfg, phi, 20), kRatioK20), 1e-12);
  EXPECT_LE(rel_err(necessity_ratio(cfg, phi, 40), kRatioK40), 1e-12);
  EXPECT_NEAR(necessity_ratio(cfg, phi, 20), 17.4, 0.01 * 17.4);
  EXPECT_NEAR(necessity_ratio(cfg, phi, 40), 41.9, 0.01 * 41.9);
  // sin x ~ x sanity: sigma_20 ~ 4 * 400 * 2^21.
  EXPECT_LE(rel_err(cfg.sigma(20), 4.0 * 400 * std::ldexp(1.0, 21)), 1e-6);
}

TEST(NecessityRatio, EventuallyIncreasingWhenCountsOutgrowLogPower) {
  for (double alpha : {1.0, 2.0}) {
    const BlockConfig cfg = power_config(40, alpha + 1);
    const YoungFunction phi = llogl(alpha);
    for (std::size_t k = 6; k <= 40; ++k) {
      EXPECT_GT(necessity_ratio(cfg, phi, k), necessity_ratio(cfg, phi, k - 1)) << alpha << " " << k;
    }
  }
}

TEST(NecessityRatio, ConstantCountsTendToZero) {
  const std::vector<int> counts(41, 1);
  const BlockConfig cfg = corollary_config(counts);
  const YoungFunction phi = llogl(1.0);
  for (std::size_t k = 1; k <= 40; ++k) {
    EXPECT_LT(necessity_ratio(cfg, phi, k), necessity_ratio(cfg, phi, k - 1));
  }
  EXPECT_LT(necessity_ratio(cfg, phi, 40), 0.05);
}

}  // namespace
}  // namespace shapebasis

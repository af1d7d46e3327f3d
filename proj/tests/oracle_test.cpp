#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "numrad/eigen.hpp"
#include "numrad/numrange.hpp"
#include "numrad/oracle.hpp"
#include "support/reference.hpp"

namespace numrad {
namespace {

using testing::Rng;

const CMatrix kNilpotent{{0.0, 1.0}, {0.0, 0.0}};
const CMatrix kReflection = CMatrix::diagonal({1.0, -1.0});

bool same_report(const OracleReport& a, const OracleReport& b) {
  return a.best_value == b.best_value && a.best_vector == b.best_vector &&
         a.samples_used == b.samples_used && a.seed == b.seed &&
         a.refinement_steps == b.refinement_steps;
}

GTEST_TEST(NormalSourceTest, UniformIsInUnitIntervalWith53Bits) {
  NormalSource src(1);
  for (int k = 0; k < 1000; ++k) {
    const double u = src.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_EQ(std::ldexp(u, 53), std::floor(std::ldexp(u, 53)));
  }
}

GTEST_TEST(NormalSourceTest, FollowsDocumentedConstruction) {
  // Rebuild the first normal pair from the raw engine.
  std::mt19937_64 engine(2024);
  const double u1 = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  const cplx expected(r * std::cos(2.0 * std::numbers::pi * u2),
                      r * std::sin(2.0 * std::numbers::pi * u2));
  NormalSource src(2024);
  EXPECT_EQ(src.complex_normal(), expected);
}

GTEST_TEST(NormalSourceTest, MomentsAreStandard) {
  NormalSource src(3);
  double sum = 0.0, sum_sq = 0.0;
  const int n = 20000;
  for (int k = 0; k < n; ++k) {
    const cplx z = src.complex_normal();
    sum += z.real() + z.imag();
    sum_sq += std::norm(z);
  }
  EXPECT_NEAR(sum / (2 * n), 0.0, 0.02);
  EXPECT_NEAR(sum_sq / (2 * n), 1.0, 0.03);
}

GTEST_TEST(SphereSampleTest, DimensionOneGivesPhases) {
  const auto pts = sphere_sample(1, 25, 5);
  ASSERT_EQ(pts.size(), 25u);
  for (const CVector& p : pts) {
    ASSERT_EQ(p.size(), 1u);
    EXPECT_NEAR(std::abs(p[0]), 1.0, 1e-15);
  }
}

GTEST_TEST(SphereSampleTest, UnitVectors) {
  const auto pts = sphere_sample(2, 1000, 42);
  ASSERT_EQ(pts.size(), 1000u);
  for (const CVector& p : pts) EXPECT_LE(std::abs(p.norm() - 1.0), 1e-12);
}

GTEST_TEST(SphereSampleTest, Deterministic) {
  EXPECT_EQ(sphere_sample(3, 10, 7), sphere_sample(3, 10, 7));
  EXPECT_NE(sphere_sample(3, 10, 7), sphere_sample(3, 10, 8));
}

GTEST_TEST(SphereSampleTest, ComponentsAreUnbiased) {
  // Mean of |x_k|^2 is 1/n for a uniform point on the sphere.
  const auto pts = sphere_sample(3, 20000, 11);
  double mass[3] = {0.0, 0.0, 0.0};
  for (const CVector& p : pts) {
    for (std::size_t k = 0; k < 3; ++k) mass[k] += std::norm(p[k]);
  }
  for (double m : mass) EXPECT_NEAR(m / 20000.0, 1.0 / 3.0, 0.01);
}

GTEST_TEST(BruteRadiusTest, Examples) {
  EXPECT_NEAR(brute_radius(CMatrix::identity(2), 10, 1).best_value, 1.0, 1e-15);
  EXPECT_NEAR(brute_radius(kNilpotent, 5000, 42).best_value, 0.5, 1e-4);
  EXPECT_NEAR(brute_radius(kReflection, 5000, 42).best_value, 1.0, 1e-6);
}

GTEST_TEST(BruteRadiusTest, ReportFields) {
  const OracleReport r = brute_radius(kNilpotent, 300, 77);
  EXPECT_EQ(r.samples_used, 300u);
  EXPECT_EQ(r.seed, 77u);
  EXPECT_TRUE(r.best_vector.is_unit());
  EXPECT_EQ(r.best_value, std::abs(quadratic_form(kNilpotent, r.best_vector)));
}

GTEST_TEST(BrutePairMaxTest, Examples) {
  const CMatrix id = CMatrix::identity(2);
  EXPECT_NEAR(brute_pair_max(kReflection, id).best_value, 1.0, 1e-6);
  // max |<Sx,x><Rx,x>| = max (p - q) sqrt(pq) over p + q = 1, which is 1/4.
  const double sr = brute_pair_max(kReflection, kNilpotent).best_value;
  EXPECT_LT(sr, 0.5 - 0.01);
  EXPECT_NEAR(sr, 0.25, 1e-6);
  Rng rng(60);
  const CMatrix a = rng.matrix(3);
  const double w = numerical_radius(a).omega;
  EXPECT_NEAR(brute_pair_max(a, a).best_value, w * w, 1e-3);
}

GTEST_TEST(BruteOperatorNormTest, Examples) {
  EXPECT_NEAR(brute_operator_norm(CMatrix::identity(3)).best_value, 1.0, 1e-15);
  EXPECT_NEAR(brute_operator_norm(CMatrix{{1.0, 1.0}, {0.0, 1.0}}, 5000, 42).best_value,
              (1.0 + std::sqrt(5.0)) / 2.0, 1e-4);
  EXPECT_EQ(brute_operator_norm(CMatrix(2)).best_value, 0.0);
}

GTEST_TEST(OracleTest, InnerApproximation) {
  Rng rng(61);
  for (int trial = 0; trial < 30; ++trial) {
    const CMatrix a = rng.matrix(rng.index(1, 5));
    EXPECT_LE(brute_radius(a, 500, trial).best_value, numerical_radius(a).omega + 1e-9);
    EXPECT_LE(brute_operator_norm(a, 500, trial).best_value, operator_norm(a).value + 1e-9);
  }
}

GTEST_TEST(OracleTest, ConvergesOnSmallMatrices) {
  Rng rng(62);
  for (int trial = 0; trial < 100; ++trial) {
    const CMatrix a = rng.matrix(2, 0.0, 1.0);
    EXPECT_GE(brute_radius(a, 5000, 42).best_value, numerical_radius(a).omega - 1e-3);
  }
}

GTEST_TEST(OracleTest, Reproducible) {
  Rng rng(63);
  const CMatrix a = rng.matrix(3);
  const CMatrix b = rng.matrix(3);
  EXPECT_TRUE(same_report(brute_radius(a, 700, 5), brute_radius(a, 700, 5)));
  EXPECT_TRUE(same_report(brute_pair_max(a, b, 700, 5), brute_pair_max(a, b, 700, 5)));
  EXPECT_TRUE(same_report(brute_operator_norm(a, 700, 5), brute_operator_norm(a, 700, 5)));
}

GTEST_TEST(OracleTest, RefinementImprovesOnBestSample) {
  const auto objective = [](const CVector& x) { return std::abs(quadratic_form(kNilpotent, x)); };
  const auto pts = sphere_sample(2, 50, 3);
  double best_sample = 0.0;
  for (const CVector& p : pts) best_sample = std::max(best_sample, objective(p));
  const OracleReport r = sphere_maximize(objective, 2, 50, 3);
  EXPECT_GE(r.best_value, best_sample);
  EXPECT_GT(r.refinement_steps, 0u);
  EXPECT_NEAR(r.best_value, 0.5, 1e-6);
}

GTEST_TEST(OracleTest, RejectsBadArguments) {
  EXPECT_THROW(brute_radius(kNilpotent, 0, 1), InvalidArgument);
  EXPECT_THROW(brute_pair_max(kNilpotent, CMatrix::identity(3), 10, 1), InvalidArgument);
}

}  // namespace
}  // namespace numrad

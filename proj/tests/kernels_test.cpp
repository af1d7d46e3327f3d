#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#if defined(NUMRAD_HAVE_OPENMP)
#include <omp.h>
#endif

#include "numrad/eigen.hpp"
#include "numrad/kernels.hpp"
#include "numrad/numrange.hpp"
#include "numrad/optimize.hpp"
#include "numrad/oracle.hpp"
#include "numrad/parallel.hpp"
#include "support/reference.hpp"

namespace numrad {
namespace {

using testing::Rng;
constexpr double kPi = std::numbers::pi;

// The parallel loops are only interesting with several threads, even on a
// single-core machine.
class KernelTest : public ::testing::Test {
 protected:
  void SetUp() override {
#if defined(NUMRAD_HAVE_OPENMP)
    saved_ = omp_get_max_threads();
    omp_set_num_threads(4);
#endif
  }
  void TearDown() override {
#if defined(NUMRAD_HAVE_OPENMP)
    omp_set_num_threads(saved_);
#endif
  }

 private:
  int saved_ = 1;
};

TEST_F(KernelTest, SupportSweepIsScheduleIndependent) {
  Rng rng(50);
  for (int trial = 0; trial < 10; ++trial) {
    const HermitianPencil pencil(rng.matrix(rng.index(1, 6)));
    std::vector<double> serial(333), parallel(333);
    support_sweep(Exec::serial, pencil, serial);
    support_sweep(Exec::parallel, pencil, parallel);
    EXPECT_EQ(serial, parallel);
    for (std::size_t k = 0; k < serial.size(); k += 37) {
      EXPECT_NEAR(serial[k], testing::reference_max_eig(pencil.at(grid_angle(k, 333))), 1e-12);
    }
  }
}

TEST_F(KernelTest, PhaseSweepsAreScheduleIndependent) {
  Rng rng(51);
  const CMatrix a = rng.matrix(3);
  const CMatrix b = rng.matrix(3);
  std::vector<double> s1(128), p1(128), s2(64), p2(64);
  norm_phase_sweep(Exec::serial, a, b, s1);
  norm_phase_sweep(Exec::parallel, a, b, p1);
  radius_phase_sweep(Exec::serial, a, b, 64, s2);
  radius_phase_sweep(Exec::parallel, a, b, 64, p2);
  EXPECT_EQ(s1, p1);
  EXPECT_EQ(s2, p2);
  for (std::size_t j = 0; j < s2.size(); j += 9) {
    const CMatrix sum = a + std::polar(1.0, grid_angle(j, 64)) * b;
    EXPECT_NEAR(s1[2 * j], operator_norm(sum).value, 1e-12);
    EXPECT_NEAR(s2[j], numerical_radius(sum).omega, 1e-9);
  }
}

TEST_F(KernelTest, EndToEndResultsAreScheduleIndependent) {
  Rng rng(52);
  const CMatrix a = rng.matrix(4);
  const CMatrix b = rng.matrix(4);

  RadiusOptions rs;
  rs.exec = Exec::serial;
  RadiusOptions rp;
  rp.exec = Exec::parallel;
  const RadiusResult r1 = numerical_radius(a, kRadiusTol, rs);
  const RadiusResult r2 = numerical_radius(a, kRadiusTol, rp);
  EXPECT_EQ(r1.omega, r2.omega);
  EXPECT_EQ(r1.theta_star, r2.theta_star);
  EXPECT_EQ(r1.witness, r2.witness);

  ParallelOptions ps;
  ps.exec = Exec::serial;
  ParallelOptions pp;
  pp.exec = Exec::parallel;
  const Decision d1 = omega_parallel(a, b, ps);
  const Decision d2 = omega_parallel(a, b, pp);
  EXPECT_EQ(d1.value, d2.value);
  EXPECT_EQ(d1.certificate.lambda_phase, d2.certificate.lambda_phase);
  EXPECT_EQ(d1.certificate.achieved, d2.certificate.achieved);
  EXPECT_EQ(d1.certificate.witness, d2.certificate.witness);

  const auto objective = [&](const CVector& x) { return std::abs(quadratic_form(a, x)); };
  const OracleReport o1 = sphere_maximize(objective, 4, 800, 9, Exec::serial);
  const OracleReport o2 = sphere_maximize(objective, 4, 800, 9, Exec::parallel);
  EXPECT_EQ(o1.best_value, o2.best_value);
  EXPECT_EQ(o1.best_vector, o2.best_vector);
  EXPECT_EQ(o1.refinement_steps, o2.refinement_steps);
}

TEST_F(KernelTest, ParallelLoopReportsLowestFailingIndex) {
  std::vector<double> out(100);
  const auto f = [](std::size_t k) -> double {
    if (k == 17 || k == 80) throw std::runtime_error("index " + std::to_string(k));
    return static_cast<double>(k);
  };
  for (Exec exec : {Exec::serial, Exec::parallel}) {
    try {
      evaluate_grid<double>(exec, f, std::span<double>(out));
      FAIL() << "expected an exception";
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "index 17");
    }
  }
}

GTEST_TEST(GoldenMaximizeTest, FindsInteriorMaximum) {
  const Maximum m = golden_maximize([](double x) { return -(x - 0.3) * (x - 0.3); }, -1.0, 2.0, 1e-12);
  EXPECT_NEAR(m.x, 0.3, 1e-6);
  EXPECT_GT(m.evaluations, 10u);
}

GTEST_TEST(GoldenMaximizeTest, FlatFunctionPrefersLeftEnd) {
  const Maximum m = golden_maximize([](double) { return 1.0; }, 0.0, 1.0, 1e-10);
  EXPECT_LT(m.x, 1e-9);
}

GTEST_TEST(GoldenMaximizeTest, IterationCapThrows) {
  EXPECT_THROW(golden_maximize([](double x) { return -x * x; }, -1.0, 1.0, 1e-12, 5),
               ConvergenceError);
}

GTEST_TEST(PeriodicLocalMaximaTest, CircularNeighboursAndOrdering) {
  const std::vector<double> v{5.0, 1.0, 3.0, 2.0, 4.0, 0.0, 6.0};
  // v[0] is compared with v[6] = 6, so it is not a local maximum.
  EXPECT_EQ(periodic_local_maxima(v, 10), (std::vector<std::size_t>{6, 4, 2}));
  EXPECT_EQ(periodic_local_maxima(v, 2), (std::vector<std::size_t>{6, 4}));
  const std::vector<double> flat(4, 1.0);
  EXPECT_EQ(periodic_local_maxima(flat, 2), (std::vector<std::size_t>{0, 1}));
}

GTEST_TEST(WrapAngleTest, IntoHalfOpenPeriod) {
  EXPECT_NEAR(wrap_angle(-0.5), 2.0 * kPi - 0.5, 1e-15);
  EXPECT_NEAR(wrap_angle(2.0 * kPi + 0.25), 0.25, 1e-15);
  EXPECT_EQ(wrap_angle(2.0 * kPi), 0.0);
  EXPECT_EQ(wrap_angle(0.0), 0.0);
}

GTEST_TEST(PeriodicMaximizeTest, RefinesBetweenGridPoints) {
  const auto f = [](double x) { return std::cos(x - 1.0) + 0.5 * std::cos(2.0 * (x + 2.0)); };
  std::vector<double> grid(64);
  for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = f(grid_angle(k, grid.size()));
  const Maximum m = periodic_maximize(
      std::span<const double>(grid), f, PeriodicSearch{}, [](double, double) { return false; },
      1e-14);
  const double reference = testing::reference_periodic_max(f);
  EXPECT_NEAR(m.value, reference, 1e-13);
  EXPECT_NEAR(f(m.x), m.value, 0.0);
}

GTEST_TEST(PeriodicMaximizeTest, EqualPeaksGoToSmallestAngle) {
  const auto f = [](double x) { return std::cos(2.0 * (x - 1.0)); };
  std::vector<double> grid(100);
  for (std::size_t k = 0; k < grid.size(); ++k) grid[k] = f(grid_angle(k, grid.size()));
  const Maximum m = periodic_maximize(
      std::span<const double>(grid), f, PeriodicSearch{}, [](double, double) { return false; },
      1e-12);
  EXPECT_NEAR(m.x, 1.0, 1e-6);
}

}  // namespace
}  // namespace numrad

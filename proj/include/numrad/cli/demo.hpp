#pragma once

#include <ostream>

#include "numrad/parallel.hpp"

namespace numrad::cli {

/// Reference values for the nontransitivity example
/// S = diag(1, -1), I, R = [[0, 1], [0, 0]].
struct DemoExpectations {
  double omega_s_plus_i = 2.0;
  double omega_i_plus_r = 1.5;
  double max_omega_s_lambda_r = 1.118033988749894848;  // sqrt(5)/2
  double gap_s_r = 0.381966011250105152;               // 3/2 - sqrt(5)/2
  double omega_t_plus_i = 1.5;                         // T = R
  Verdict s_i = Verdict::parallel;
  Verdict i_r = Verdict::parallel;
  Verdict s_r = Verdict::not_parallel;
  Verdict t_i = Verdict::parallel;
  double tolerance = 1e-8;
};

/// Recomputes the example, prints a table and returns true when every value
/// matches `expected` within its tolerance. Output is deterministic.
bool run_reference_demo(std::ostream& out, const DemoExpectations& expected = {});

}  // namespace numrad::cli

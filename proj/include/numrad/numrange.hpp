#pragma once

#include <cstddef>
#include <vector>

#include "numrad/kernels.hpp"
#include "numrad/matrix.hpp"

namespace numrad {

/// Default bound on | |<Aw, w>| - omega | for a returned radius witness.
inline constexpr double kRadiusTol = 1e-10;

struct RangeSample {
  double theta = 0.0;
  cplx point;             // <A x, x> for x the top eigenvector of H(theta)
  double support = 0.0;   // lambda_max(H(theta))
};

/// Samples of the boundary of W(A); the convex hull of the points is an
/// inner approximation of the numerical range.
struct RangeBoundary {
  std::vector<RangeSample> samples;
};

struct RadiusResult {
  double omega = 0.0;
  double theta_star = 0.0;
  CVector witness;
  cplx witness_value;
  double residual = 0.0;
};

struct RadiusOptions {
  std::size_t grid = 512;        // initial theta samples
  std::size_t max_brackets = 5;  // local maxima refined by golden section
  double theta_tol = 1e-12;      // final bracket width
  Exec exec = default_exec();
};

/// Boundary points of W(A) at theta_k = 2 pi k / m. Requires m >= 4.
RangeBoundary range_boundary(const CMatrix& a, std::size_t m, Exec exec = default_exec());

/// omega(A) = max_theta lambda_max(H(theta)), with a maximizing angle and a
/// unit witness w whose |<Aw, w>| is within tol of omega. Ties between equal
/// maxima go to the smallest angle. The zero matrix gives omega = 0,
/// theta_star = 0 and w = e_1.
RadiusResult numerical_radius(const CMatrix& a, double tol = kRadiusTol);
RadiusResult numerical_radius(const CMatrix& a, double tol, const RadiusOptions& opts);

struct RadiusValue {
  double omega = 0.0;
  double theta = 0.0;
};

/// The maximization behind numerical_radius without the witness extraction.
RadiusValue numerical_radius_value(const CMatrix& a, const RadiusOptions& opts = {});

/// omega(x (x) y) = (|<x, y>| + ||x|| ||y||) / 2 in closed form.
double rank_one_radius(const CVector& x, const CVector& y);

}  // namespace numrad

#include "numrad/numrange.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "numrad/eigen.hpp"
#include "numrad/optimize.hpp"

namespace numrad {

RangeBoundary range_boundary(const CMatrix& a, std::size_t m, Exec exec) {
  if (m < 4) throw InvalidArgument("range_boundary: need at least 4 samples");
  if (!a.is_finite()) throw InvalidArgument("range_boundary: non-finite entries");
  const HermitianPencil pencil(a);
  RangeBoundary out;
  out.samples.resize(m);
  evaluate_grid<RangeSample>(
      exec,
      [&](std::size_t k) {
        const double theta = grid_angle(k, m);
        const EigResult top = max_eig_hermitian(pencil.at(theta));
        return RangeSample{theta, quadratic_form(a, top.vector), top.value};
      },
      std::span<RangeSample>(out.samples));
  return out;
}

RadiusValue numerical_radius_value(const CMatrix& a, const RadiusOptions& opts) {
  if (!a.is_finite()) throw InvalidArgument("numerical_radius: non-finite entries");
  if (opts.grid < 3) throw InvalidArgument("numerical_radius: grid needs at least 3 points");
  if (a.is_zero()) return {0.0, 0.0};

  const HermitianPencil pencil(a);
  std::vector<double> grid(opts.grid);
  support_sweep(opts.exec, pencil, grid);

  CMatrix work(a.dim());
  auto support = [&](double theta) {
    pencil.at(theta, work);
    return max_eigenvalue_unchecked(work);
  };

  // The support value at the grid angle nearest arg(mu*) is at least
  // omega cos(h/2), so a bracket whose grid value falls below
  // best * cos(h/2) cannot hold the maximizer.
  const double h = 2.0 * std::numbers::pi / static_cast<double>(opts.grid);
  const double shrink = std::cos(0.5 * h);
  auto can_skip = [shrink](double grid_value, double best) {
    return best > 0.0 && grid_value < best * shrink * (1.0 - 1e-15);
  };
  const double scale = std::max(1.0, *std::max_element(grid.begin(), grid.end()));
  const Maximum best = periodic_maximize(std::span<const double>(grid), support,
                                         PeriodicSearch{opts.max_brackets, opts.theta_tol},
                                         can_skip, 1e-14 * scale);
  return {best.value, best.x};
}

RadiusResult numerical_radius(const CMatrix& a, double tol) {
  return numerical_radius(a, tol, RadiusOptions{});
}

RadiusResult numerical_radius(const CMatrix& a, double tol, const RadiusOptions& opts) {
  if (!(tol > 0.0)) throw InvalidArgument("numerical_radius: tol must be positive");
  RadiusResult out;
  if (a.is_zero()) {
    if (a.dim() == 0) throw InvalidArgument("numerical_radius: empty matrix");
    out.witness = CVector::basis(a.dim(), 0);
    return out;
  }
  const RadiusValue value = numerical_radius_value(a, opts);
  const EigResult top = max_eig_hermitian(hermitian_part(a, value.theta));

  out.omega = top.value;
  out.theta_star = value.theta;
  out.witness = top.vector;
  out.witness_value = quadratic_form(a, top.vector);
  out.residual = std::abs(std::abs(out.witness_value) - out.omega);
  if (!(out.residual <= tol)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "numerical_radius: witness residual " << out.residual << " exceeds " << tol
        << " (omega " << out.omega << ", theta* " << out.theta_star << ", |<Aw,w>| "
        << std::abs(out.witness_value) << ")";
    throw ConvergenceError(msg.str(), 0);
  }
  return out;
}

double rank_one_radius(const CVector& x, const CVector& y) {
  if (x.size() != y.size()) throw InvalidArgument("rank_one_radius: dimension mismatch");
  return 0.5 * (std::abs(inner(x, y)) + x.norm() * y.norm());
}

}  // namespace numrad

#include "numrad/kernels.hpp"

#include <cmath>

#if defined(NUMRAD_HAVE_OPENMP)
#include <omp.h>
#endif

#include "numrad/eigen.hpp"
#include "numrad/numrange.hpp"

namespace numrad {

Exec default_exec() noexcept {
#if defined(NUMRAD_HAVE_OPENMP)
  return Exec::parallel;
#else
  return Exec::serial;
#endif
}

int kernel_threads() noexcept {
#if defined(NUMRAD_HAVE_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace {

CMatrix& scratch(std::size_t n) {
  thread_local CMatrix work;
  if (work.dim() != n) work = CMatrix(n);
  return work;
}

}  // namespace

void support_sweep(Exec exec, const HermitianPencil& pencil, std::span<double> out) {
  const std::size_t n = pencil.re.dim();
  const std::size_t count = out.size();
  evaluate_grid<double>(
      exec,
      [&](std::size_t k) {
        CMatrix& work = scratch(n);
        pencil.at(grid_angle(k, count), work);
        return max_eigenvalue_unchecked(work);
      },
      out);
}

void norm_phase_sweep(Exec exec, const CMatrix& a, const CMatrix& b, std::span<double> out) {
  if (a.dim() != b.dim()) throw InvalidArgument("norm_phase_sweep: dimension mismatch");
  const std::size_t count = out.size();
  evaluate_grid<double>(
      exec,
      [&](std::size_t j) {
        const double phi = grid_angle(j, count);
        return operator_norm_value(a + cplx(std::cos(phi), std::sin(phi)) * b);
      },
      out);
}

void radius_phase_sweep(Exec exec, const CMatrix& a, const CMatrix& b, std::size_t inner_grid,
                        std::span<double> out) {
  if (a.dim() != b.dim()) throw InvalidArgument("radius_phase_sweep: dimension mismatch");
  const std::size_t count = out.size();
  RadiusOptions inner;
  inner.grid = inner_grid;
  inner.exec = Exec::serial;
  evaluate_grid<double>(
      exec,
      [&](std::size_t j) {
        const double phi = grid_angle(j, count);
        return numerical_radius_value(a + cplx(std::cos(phi), std::sin(phi)) * b, inner).omega;
      },
      out);
}

}  // namespace numrad

#pragma once

// Grid-evaluation kernels. Every kernel has a serial reference loop and an
// OpenMP loop; both write out[k] = f(k) for each index independently, so the
// two produce bit-identical arrays and any reduction over them is done
// afterwards, serially, in index order.

#include <cstddef>
#include <exception>
#include <numbers>
#include <span>

#include "numrad/matrix.hpp"

namespace numrad {

enum class Exec { serial, parallel };

/// Exec::parallel when the library was built with OpenMP, otherwise serial.
Exec default_exec() noexcept;

/// Number of OpenMP threads the parallel kernels will use (1 without OpenMP).
int kernel_threads() noexcept;

/// 2 pi k / count
inline double grid_angle(std::size_t k, std::size_t count) {
  return 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(count);
}

template <class T, class F>
void evaluate_grid_serial(F&& f, std::span<T> out) {
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = f(k);
}

template <class T, class F>
void evaluate_grid_omp(F&& f, std::span<T> out) {
#if defined(NUMRAD_HAVE_OPENMP)
  const auto count = static_cast<std::ptrdiff_t>(out.size());
  std::exception_ptr error;
  std::ptrdiff_t error_index = count;
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      out[static_cast<std::size_t>(k)] = f(static_cast<std::size_t>(k));
    } catch (...) {
#pragma omp critical(numrad_kernel_error)
      {
        // Report the failure at the lowest index, as the serial loop would.
        if (k < error_index) {
          error_index = k;
          error = std::current_exception();
        }
      }
    }
  }
  if (error) std::rethrow_exception(error);
#else
  evaluate_grid_serial<T>(f, out);
#endif
}

template <class T, class F>
void evaluate_grid(Exec exec, F&& f, std::span<T> out) {
  if (exec == Exec::parallel) {
    evaluate_grid_omp<T>(f, out);
  } else {
    evaluate_grid_serial<T>(f, out);
  }
}

/// out[k] = lambda_max(H(2 pi k / out.size())) for the pencil of A.
void support_sweep(Exec exec, const HermitianPencil& pencil, std::span<double> out);

/// out[j] = ||A + e^{i phi_j} B||, phi_j = 2 pi j / out.size().
void norm_phase_sweep(Exec exec, const CMatrix& a, const CMatrix& b, std::span<double> out);

/// out[j] = omega(A + e^{i phi_j} B) evaluated with an inner theta grid of
/// inner_grid points (value only, no witness).
void radius_phase_sweep(Exec exec, const CMatrix& a, const CMatrix& b, std::size_t inner_grid,
                        std::span<double> out);

}  // namespace numrad

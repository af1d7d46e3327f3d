#pragma once

// Test-only reference computations. None of these call into the library's
// spectral code: eigenvalues come from cyclic Jacobi on the real symmetric
// embedding of a Hermitian matrix, and the 2x2 cases use closed forms.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "numrad/matrix.hpp"

namespace numrad::testing {

using RealMatrix = std::vector<std::vector<double>>;

/// All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
inline std::vector<double> jacobi_eigenvalues(RealMatrix a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    }
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double tau = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p];
          const double akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k];
          const double aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i][i];
  std::sort(out.begin(), out.end());
  return out;
}

/// Largest eigenvalue of a Hermitian matrix through [[Re H, -Im H], [Im H, Re H]].
inline double reference_max_eig(const CMatrix& h) {
  const std::size_t n = h.dim();
  RealMatrix m(2 * n, std::vector<double>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const cplx z = 0.5 * (h(i, j) + std::conj(h(j, i)));
      m[i][j] = z.real();
      m[i + n][j + n] = z.real();
      m[i][j + n] = -z.imag();
      m[i + n][j] = z.imag();
    }
  }
  return jacobi_eigenvalues(std::move(m)).back();
}

/// Largest eigenvalue of (e^{-it} A + e^{it} A*) / 2, built entrywise.
inline double reference_support(const CMatrix& a, double t) {
  const std::size_t n = a.dim();
  CMatrix h(n);
  const cplx e = std::polar(1.0, -t);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(i, j) = 0.5 * (e * a(i, j) + std::conj(e * a(j, i)));
  }
  return reference_max_eig(h);
}

/// Dense scan of a periodic function followed by ternary refinement around
/// each of the best few samples.
template <class F>
double reference_periodic_max(F&& f, int grid = 2048) {
  const double h = 2.0 * std::numbers::pi / grid;
  std::vector<double> v(grid);
  for (int k = 0; k < grid; ++k) v[k] = f(k * h);
  std::vector<int> order(grid);
  for (int k = 0; k < grid; ++k) order[k] = k;
  std::partial_sort(order.begin(), order.begin() + 4, order.end(),
                    [&](int x, int y) { return v[x] > v[y]; });
  double best = v[order[0]];
  for (int r = 0; r < 4; ++r) {
    double lo = (order[r] - 1) * h;
    double hi = (order[r] + 1) * h;
    for (int it = 0; it < 120; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (f(m1) < f(m2)) {
        lo = m1;
      } else {
        hi = m2;
      }
    }
    best = std::max(best, f(0.5 * (lo + hi)));
  }
  return best;
}

inline double reference_radius(const CMatrix& a) {
  return reference_periodic_max([&](double t) { return reference_support(a, t); });
}

inline double reference_norm(const CMatrix& a) {
  const std::size_t n = a.dim();
  CMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
      g(i, j) = s;
    }
  }
  return std::sqrt(std::max(0.0, reference_max_eig(g)));
}

/// sigma_max of a 2x2 matrix: sqrt((F + sqrt(F^2 - 4 |det|^2)) / 2) with F
/// the squared Frobenius norm.
inline double sigma_max_2x2(const CMatrix& a) {
  double f = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) f += std::norm(a(i, j));
  }
  const double det = std::abs(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0));
  return std::sqrt(0.5 * (f + std::sqrt(std::max(0.0, f * f - 4.0 * det * det))));
}

/// Radius of a 2x2 matrix from its elliptical numerical range: foci at the
/// eigenvalues, minor axis sqrt(||A||_F^2 - |l1|^2 - |l2|^2).
inline double ellipse_radius_2x2(const CMatrix& a) {
  const cplx tr = a(0, 0) + a(1, 1);
  const cplx det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  const cplx disc = std::sqrt(tr * tr - 4.0 * det);
  const cplx l1 = 0.5 * (tr + disc);
  const cplx l2 = 0.5 * (tr - disc);
  double f = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) f += std::norm(a(i, j));
  }
  const double minor = std::sqrt(std::max(0.0, f - std::norm(l1) - std::norm(l2)));
  const double semi_minor = 0.5 * minor;
  const double semi_major = 0.5 * std::sqrt(std::norm(l1 - l2) + minor * minor);
  const cplx center = 0.5 * (l1 + l2);
  const cplx u = std::abs(l1 - l2) > 0 ? (l1 - l2) / std::abs(l1 - l2) : cplx(1.0);
  return reference_periodic_max([&](double t) {
    return std::abs(center + semi_major * std::cos(t) * u + semi_minor * std::sin(t) * cplx(0, 1) * u);
  });
}

/// max over unimodular lambda of f(lambda) by a dense phase scan plus
/// ternary refinement.
template <class F>
double reference_phase_max(F&& f, int grid = 720) {
  return reference_periodic_max([&](double phi) { return f(std::polar(1.0, phi)); }, grid);
}

/// Test-side random data; std distributions are fine here because tests only
/// assert tolerances, never bit patterns.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  std::size_t index(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
  }
  cplx complex(double lo = -1.0, double hi = 1.0) { return {uniform(lo, hi), uniform(lo, hi)}; }

  CMatrix matrix(std::size_t n, double lo = -1.0, double hi = 1.0) {
    CMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = complex(lo, hi);
    }
    return m;
  }

  CMatrix hermitian(std::size_t n) {
    const CMatrix m = matrix(n);
    return 0.5 * (m + m.adjoint());
  }

  CVector vector(std::size_t n) {
    CVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = complex();
    return v;
  }

  CVector unit_vector(std::size_t n) { return vector(n).normalized(); }

  /// Q with orthonormal columns from Gram-Schmidt on a random matrix.
  CMatrix unitary(std::size_t n) {
    std::vector<CVector> cols;
    while (cols.size() < n) {
      CVector v = vector(n);
      for (int pass = 0; pass < 2; ++pass) {
        for (const CVector& q : cols) v -= inner(v, q) * q;
      }
      if (v.norm() > 1e-6) cols.push_back(v.normalized());
    }
    CMatrix q(n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) q(i, j) = cols[j][i];
    }
    return q;
  }

  /// U diag(d) U* for a random unitary U.
  CMatrix normal_with(const std::vector<cplx>& d) {
    const CMatrix u = unitary(d.size());
    return u * CMatrix::diagonal(std::span<const cplx>(d)) * u.adjoint();
  }

  CMatrix normal(std::size_t n) {
    std::vector<cplx> d(n);
    for (cplx& z : d) z = complex();
    return normal_with(d);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace numrad::testing

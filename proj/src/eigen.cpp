#include "numrad/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace numrad {

namespace {

// Hermitian matrix reduced to A = Q D S D* Q* with S real symmetric
// tridiagonal, Q a product of Householder reflectors and D a diagonal of phases.
struct Tridiagonal {
  std::size_t n = 0;
  std::vector<double> diag;
  std::vector<double> off;        // off[k] = S(k+1, k), k < n-1
  std::vector<cplx> phase;        // D
  std::vector<cplx> reflectors;   // reflector k stored at [k*n, k*n + n-k-1)
  std::vector<bool> has_reflector;
  // scratch
  std::vector<cplx> work, v, p;
};

// sqrt(a^2 + b^2) without the overflow protection of std::hypot, which is
// several times slower and unnecessary at the magnitudes handled here.
inline double pythag(double a, double b) { return std::sqrt(a * a + b * b); }

void tridiagonalize(const CMatrix& h, Tridiagonal& t, bool keep_reflectors) {
  const std::size_t n = h.dim();
  t.n = n;
  t.work.assign(h.values().begin(), h.values().end());
  std::vector<cplx>& a = t.work;
  auto at = [&](std::size_t i, std::size_t j) -> cplx& { return a[i * n + j]; };

  if (keep_reflectors) {
    t.reflectors.assign(n * n, cplx(0.0));
    t.has_reflector.assign(n, false);
  }
  t.v.resize(n);
  t.p.resize(n);
  std::vector<cplx>& v = t.v;
  std::vector<cplx>& p = t.p;

  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // length of the column below the diagonal
    double xnorm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) xnorm2 += std::norm(at(k + 1 + i, k));
    const double xnorm = std::sqrt(xnorm2);
    // Nothing to annihilate when the tail of the column is already zero.
    bool tail_zero = true;
    for (std::size_t i = 1; i < m; ++i) tail_zero = tail_zero && at(k + 1 + i, k) == cplx(0.0);
    if (xnorm == 0.0 || tail_zero) continue;

    const cplx x0 = at(k + 1, k);
    const double x0_abs = std::sqrt(std::norm(x0));
    const cplx ph = x0_abs == 0.0 ? cplx(1.0) : x0 / x0_abs;
    const cplx alpha = -ph * xnorm;
    for (std::size_t i = 0; i < m; ++i) v[i] = at(k + 1 + i, k);
    v[0] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) vnorm2 += std::norm(v[i]);
    const double vnorm = std::sqrt(vnorm2);
    for (std::size_t i = 0; i < m; ++i) v[i] /= vnorm;

    // Trailing block B <- H B H with H = I - 2vv*: B -= 2(v w* + w v*), w = Bv - (v*Bv) v.
    for (std::size_t i = 0; i < m; ++i) {
      cplx s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += at(k + 1 + i, k + 1 + j) * v[j];
      p[i] = s;
    }
    cplx beta = 0.0;
    for (std::size_t i = 0; i < m; ++i) beta += std::conj(v[i]) * p[i];
    for (std::size_t i = 0; i < m; ++i) p[i] -= beta.real() * v[i];
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        cplx& bij = at(k + 1 + i, k + 1 + j);
        bij -= 2.0 * (v[i] * std::conj(p[j]) + p[i] * std::conj(v[j]));
        if (j != i) {
          at(k + 1 + j, k + 1 + i) = std::conj(bij);
        }
      }
      at(k + 1 + i, k + 1 + i) = at(k + 1 + i, k + 1 + i).real();
    }
    at(k + 1, k) = alpha;
    at(k, k + 1) = std::conj(alpha);
    for (std::size_t i = 1; i < m; ++i) {
      at(k + 1 + i, k) = 0.0;
      at(k, k + 1 + i) = 0.0;
    }
    if (keep_reflectors) {
      std::copy(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m),
                t.reflectors.begin() + static_cast<std::ptrdiff_t>(k * n));
      t.has_reflector[k] = true;
    }
  }

  t.diag.resize(n);
  t.off.assign(n, 0.0);
  t.phase.assign(n, cplx(1.0));
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = at(i, i).real();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const cplx e = at(k + 1, k);
    const double mag = std::sqrt(std::norm(e));
    t.off[k] = mag;
    t.phase[k + 1] = mag == 0.0 ? t.phase[k] : t.phase[k] * (e / mag);
  }
}

// Implicit QL on a real symmetric tridiagonal matrix (diag d, off-diagonal e
// with e[k] = S(k+1,k), e[n-1] = 0). Eigenvalues overwrite d; when z is
// non-null it accumulates the eigenvectors column-wise (n x n row-major).
void tql(std::vector<double>& d, std::vector<double>& e, std::vector<double>* z) {
  const std::size_t n = d.size();
  constexpr int kMaxIter = 60;
  const double eps = std::numeric_limits<double>::epsilon();
  double f = 0.0;
  double tst1 = 0.0;
  e[n - 1] = 0.0;
  for (std::size_t l = 0; l < n; ++l) {
    tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
    std::size_t m = l;
    while (m < n) {
      if (std::abs(e[m]) <= eps * tst1) break;
      ++m;
    }
    if (m > l) {
      int iter = 0;
      do {
        if (++iter > kMaxIter) {
          throw ConvergenceError("max_eig_hermitian: QL iteration did not converge",
                                 static_cast<std::size_t>(iter));
        }
        double g = d[l];
        double p = (d[l + 1] - g) / (2.0 * e[l]);
        double r = pythag(p, 1.0);
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const double dl1 = d[l + 1];
        double hh = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= hh;
        f += hh;

        p = d[m];
        double c = 1.0, c2 = 1.0, c3 = 1.0;
        const double el1 = e[l + 1];
        double s = 0.0, s2 = 0.0;
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          hh = c * p;
          r = pythag(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = hh + s * (c * g + s * d[ii]);
          if (z) {
            auto& zz = *z;
            for (std::size_t k = 0; k < n; ++k) {
              hh = zz[k * n + ii + 1];
              zz[k * n + ii + 1] = s * zz[k * n + ii] + c * hh;
              zz[k * n + ii] = c * zz[k * n + ii] - s * hh;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (std::abs(e[l]) > eps * tst1);
    }
    d[l] += f;
    e[l] = 0.0;
  }
}

double max_eigenvalue_2x2(const CMatrix& h) {
  const double a = h(0, 0).real();
  const double c = h(1, 1).real();
  const double mid = 0.5 * (a + c);
  const double half = 0.5 * (a - c);
  return mid + std::sqrt(half * half + std::norm(h(0, 1)));
}

void fix_phase(CVector& x) {
  std::size_t best = 0;
  double best_abs = -1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]);
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  if (best_abs > 0.0) x *= std::conj(x[best]) / best_abs;
}

double residual_norm(const CMatrix& h, const CVector& x, double lambda) {
  CVector r = h.apply(x);
  for (std::size_t i = 0; i < x.size(); ++i) r[i] -= lambda * x[i];
  return r.norm();
}

}  // namespace

double max_eigenvalue_unchecked(const CMatrix& h) {
  const std::size_t n = h.dim();
  if (n == 1) return h(0, 0).real();
  if (n == 2) return max_eigenvalue_2x2(h);
  thread_local Tridiagonal t;
  tridiagonalize(h, t, false);
  std::vector<double>& d = t.diag;
  std::vector<double>& e = t.off;
  tql(d, e, nullptr);
  return *std::max_element(d.begin(), d.end());
}

EigResult max_eig_hermitian(const CMatrix& h) {
  if (!h.is_finite()) throw InvalidArgument("max_eig_hermitian: non-finite entries");
  if (!is_hermitian(h, 1e-12)) throw InvalidArgument("max_eig_hermitian: matrix is not Hermitian");
  const std::size_t n = h.dim();
  EigResult out;
  if (n == 1) {
    out.value = h(0, 0).real();
    out.vector = CVector::basis(1, 0);
    out.residual = 0.0;
    return out;
  }

  Tridiagonal t;
  tridiagonalize(h, t, true);
  std::vector<double> d = t.diag;
  std::vector<double> e = t.off;
  std::vector<double> z(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) z[i * n + i] = 1.0;
  tql(d, e, &z);

  // Largest eigenvalue; the first column wins ties so the sweep order decides.
  std::size_t top = 0;
  for (std::size_t j = 1; j < n; ++j)
    if (d[j] > d[top]) top = j;

  CVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = t.phase[i] * z[i * n + top];
  for (std::size_t k = n - 2; k-- > 0;) {
    if (!t.has_reflector[k]) continue;
    const std::size_t m = n - k - 1;
    const cplx* v = t.reflectors.data() + k * n;
    cplx dot = 0.0;
    for (std::size_t i = 0; i < m; ++i) dot += std::conj(v[i]) * x[k + 1 + i];
    for (std::size_t i = 0; i < m; ++i) x[k + 1 + i] -= 2.0 * dot * v[i];
  }
  x = x.normalized();
  fix_phase(x);

  out.value = d[top];
  out.vector = std::move(x);
  out.residual = residual_norm(h, out.vector, out.value);
  if (!(out.residual <= kEigTol)) {
    throw ConvergenceError("max_eig_hermitian: residual " + std::to_string(out.residual) +
                               " exceeds tolerance",
                           0);
  }
  return out;
}

CMatrix gram(const CMatrix& a) {
  const std::size_t n = a.dim();
  CMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += std::conj(a(k, i)) * a(k, j);
      g(i, j) = s;
      g(j, i) = std::conj(s);
    }
    g(i, i) = g(i, i).real();
  }
  return g;
}

double operator_norm_value(const CMatrix& a) {
  if (a.is_zero()) return 0.0;
  return std::sqrt(std::max(0.0, max_eigenvalue_unchecked(gram(a))));
}

NormResult operator_norm(const CMatrix& a) {
  if (!a.is_finite()) throw InvalidArgument("operator_norm: non-finite entries");
  if (a.is_zero()) return {0.0, CVector::basis(a.dim(), 0)};
  const EigResult top = max_eig_hermitian(gram(a));
  NormResult out;
  out.right_singular = top.vector;
  out.value = std::sqrt(std::max(0.0, top.value));
  return out;
}

}  // namespace numrad

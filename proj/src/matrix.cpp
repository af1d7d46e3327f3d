#include "numrad/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace numrad {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                          " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// CVector

CVector CVector::basis(std::size_t n, std::size_t k) {
  if (k >= n) throw InvalidArgument("basis: index out of range");
  CVector e(n);
  e[k] = 1.0;
  return e;
}

double CVector::norm() const {
  // Scaled accumulation; plain sum of squares is fine at the magnitudes used
  // here but this keeps tiny vectors from underflowing.
  double scale = 0.0;
  for (const auto& v : data_) scale = std::max({scale, std::abs(v.real()), std::abs(v.imag())});
  if (scale == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& v : data_) {
    const double re = v.real() / scale;
    const double im = v.imag() / scale;
    sum += re * re + im * im;
  }
  return scale * std::sqrt(sum);
}

CVector CVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw InvalidArgument("normalized: zero vector");
  CVector out(*this);
  for (auto& v : out.data_) v /= nrm;
  return out;
}

bool CVector::is_unit(double tol) const { return std::abs(norm() - 1.0) <= tol; }

bool CVector::is_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

CVector& CVector::operator+=(const CVector& other) {
  require_same_size(size(), other.size(), "vector add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CVector& CVector::operator-=(const CVector& other) {
  require_same_size(size(), other.size(), "vector subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CVector& CVector::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

CVector operator+(CVector a, const CVector& b) { return a += b; }
CVector operator-(CVector a, const CVector& b) { return a -= b; }
CVector operator*(cplx s, CVector a) { return a *= s; }

cplx inner(const CVector& x, const CVector& y) {
  require_same_size(x.size(), y.size(), "inner");
  cplx sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * std::conj(y[i]);
  return sum;
}

// ---------------------------------------------------------------------------
// CMatrix

CMatrix::CMatrix(std::size_t n) : n_(n), data_(n * n) {
  if (n == 0) throw InvalidArgument("CMatrix: dimension must be positive");
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : CMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw InvalidArgument("CMatrix: rows must form a square matrix");
    std::copy(row.begin(), row.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * n_));
    ++i;
  }
  if (!is_finite()) throw InvalidArgument("CMatrix: entries must be finite");
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const cplx> diag) {
  CMatrix m(diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

CMatrix CMatrix::diagonal(std::initializer_list<cplx> diag) {
  return diagonal(std::span<const cplx>(diag.begin(), diag.size()));
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CVector CMatrix::apply(const CVector& x) const {
  require_same_size(n_, x.size(), "apply");
  CVector y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    cplx sum = 0.0;
    for (std::size_t j = 0; j < n_; ++j) sum += (*this)(i, j) * x[j];
    y[i] = sum;
  }
  return y;
}

cplx CMatrix::trace() const {
  cplx t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

bool CMatrix::is_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  });
}

bool CMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const cplx& v) { return v == cplx(0.0); });
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& other) {
  require_same_size(n_, other.n_, "matrix add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& other) {
  require_same_size(n_, other.n_, "matrix subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
CMatrix operator*(cplx s, CMatrix a) { return a *= s; }

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  require_same_size(a.dim(), b.dim(), "matrix multiply");
  const std::size_t n = a.dim();
  CMatrix c(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_size(a.dim(), b.dim(), "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.values().size(); ++i) m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  return m;
}

bool is_normal(const CMatrix& a, double tol) {
  const CMatrix ah = a.adjoint();
  return max_abs_diff(ah * a, a * ah) <= tol;
}

bool is_hermitian(const CMatrix& a, double tol) { return max_abs_diff(a, a.adjoint()) <= tol; }

cplx quadratic_form(const CMatrix& a, const CVector& x) {
  require_same_size(a.dim(), x.size(), "quadratic_form");
  const std::size_t n = a.dim();
  cplx sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cplx row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += a(i, j) * x[j];
    sum += std::conj(x[i]) * row;
  }
  return sum;
}

CMatrix hermitian_part(const CMatrix& a, double theta) {
  if (!std::isfinite(theta)) throw InvalidArgument("hermitian_part: theta must be finite");
  return HermitianPencil(a).at(theta);
}

CMatrix rank_one(const CVector& x, const CVector& y) {
  require_same_size(x.size(), y.size(), "rank_one");
  const std::size_t n = x.size();
  CMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = x[i] * std::conj(y[j]);
  return m;
}

// ---------------------------------------------------------------------------
// HermitianPencil

HermitianPencil::HermitianPencil(const CMatrix& a) : re(a.dim()), im(a.dim()) {
  const std::size_t n = a.dim();
  const cplx half_i(0.0, 0.5);
  for (std::size_t i = 0; i < n; ++i) {
    re(i, i) = a(i, i).real();
    im(i, i) = a(i, i).imag();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx aij = a(i, j);
      const cplx aji_c = std::conj(a(j, i));
      re(i, j) = 0.5 * (aij + aji_c);
      // (a_ij - conj(a_ji)) / (2i)
      im(i, j) = -half_i * (aij - aji_c);
      re(j, i) = std::conj(re(i, j));
      im(j, i) = std::conj(im(i, j));
    }
  }
}

CMatrix HermitianPencil::at(double theta) const {
  CMatrix out(re.dim());
  at(theta, out);
  return out;
}

void HermitianPencil::at(double theta, CMatrix& out) const {
  const std::size_t n = re.dim();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = c * re(i, i).real() + s * im(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx v = c * re(i, j) + s * im(i, j);
      out(i, j) = v;
      out(j, i) = std::conj(v);
    }
  }
}

}  // namespace numrad

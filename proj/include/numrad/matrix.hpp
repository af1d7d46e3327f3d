#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace numrad {

using cplx = std::complex<double>;

/// Raised when operand shapes do not agree or a precondition on the
/// input values is violated.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an iterative numerical kernel fails to meet its contract.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::size_t iterations)
      : std::runtime_error(what), iterations_(iterations) {}
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::size_t iterations_;
};

/// Dense complex column vector.
class CVector {
 public:
  CVector() = default;
  explicit CVector(std::size_t n) : data_(n) {}
  CVector(std::initializer_list<cplx> values) : data_(values) {}
  explicit CVector(std::vector<cplx> values) : data_(std::move(values)) {}

  static CVector basis(std::size_t n, std::size_t k);

  std::size_t size() const noexcept { return data_.size(); }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }
  std::span<cplx> values() noexcept { return data_; }
  std::span<const cplx> values() const noexcept { return data_; }

  double norm() const;
  CVector normalized() const;
  bool is_unit(double tol = 1e-12) const;
  bool is_finite() const;

  CVector& operator+=(const CVector& other);
  CVector& operator-=(const CVector& other);
  CVector& operator*=(cplx s);

  friend bool operator==(const CVector&, const CVector&) = default;

 private:
  std::vector<cplx> data_;
};

CVector operator+(CVector a, const CVector& b);
CVector operator-(CVector a, const CVector& b);
CVector operator*(cplx s, CVector a);

/// <x, y>, linear in x and conjugate-linear in y.
cplx inner(const CVector& x, const CVector& y);

/// Dense square complex matrix stored row-major.
class CMatrix {
 public:
  CMatrix() = default;
  /// Zero matrix of dimension n (n >= 1).
  explicit CMatrix(std::size_t n);
  CMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const cplx> diag);
  static CMatrix diagonal(std::initializer_list<cplx> diag);

  std::size_t dim() const noexcept { return n_; }
  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<cplx> values() noexcept { return data_; }
  std::span<const cplx> values() const noexcept { return data_; }

  CMatrix adjoint() const;
  CVector apply(const CVector& x) const;
  cplx trace() const;
  bool is_finite() const;
  bool is_zero() const;
  double max_abs() const;

  CMatrix& operator+=(const CMatrix& other);
  CMatrix& operator-=(const CMatrix& other);
  CMatrix& operator*=(cplx s);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<cplx> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(cplx s, CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);

/// max_ij |a_ij - b_ij|
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// ||A*A - AA*||_max <= tol
bool is_normal(const CMatrix& a, double tol = 1e-10);

/// ||A - A*||_max <= tol
bool is_hermitian(const CMatrix& a, double tol = 1e-12);

/// <Ax, x> = x* A x.
cplx quadratic_form(const CMatrix& a, const CVector& x);

/// (e^{-i theta} A + e^{i theta} A*) / 2, exactly Hermitian.
CMatrix hermitian_part(const CMatrix& a, double theta);

/// x (x) y, the operator z -> <z, y> x; entries x_i conj(y_j).
CMatrix rank_one(const CVector& x, const CVector& y);

/// The pair (Re A, Im A) with Re A = (A + A*)/2 and Im A = (A - A*)/(2i), both
/// symmetrized to be exactly Hermitian, so that
/// H(theta) = cos(theta) Re A + sin(theta) Im A.
struct HermitianPencil {
  CMatrix re;
  CMatrix im;

  explicit HermitianPencil(const CMatrix& a);
  CMatrix at(double theta) const;
  /// Writes H(theta) into out (which must already have the right dimension).
  void at(double theta, CMatrix& out) const;
};

}  // namespace numrad

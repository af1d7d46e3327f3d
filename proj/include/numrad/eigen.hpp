#pragma once

#include "numrad/matrix.hpp"

namespace numrad {

/// Absolute residual bound ||Hx - lambda x|| every returned eigenpair meets.
inline constexpr double kEigTol = 1e-10;

struct EigResult {
  double value = 0.0;
  CVector vector;
  double residual = 0.0;
};

/// Largest eigenvalue of a Hermitian matrix with a unit eigenvector.
///
/// The matrix is reduced to real symmetric tridiagonal form by Householder
/// reflections and a diagonal phase scaling, then diagonalized by implicit QL.
/// The returned eigenvector has its largest-modulus component (first on ties)
/// real and positive, so the output is deterministic even when the top
/// eigenvalue is multiple. Throws InvalidArgument when H is not Hermitian
/// within 1e-12 and ConvergenceError when QL stalls or the residual exceeds
/// kEigTol.
EigResult max_eig_hermitian(const CMatrix& h);

/// Largest eigenvalue only. Skips the Hermitian check and the eigenvector
/// accumulation; callers guarantee H is exactly Hermitian.
double max_eigenvalue_unchecked(const CMatrix& h);

struct NormResult {
  double value = 0.0;
  CVector right_singular;
};

/// sigma_max(A) = sqrt(lambda_max(A*A)) with a unit x attaining ||Ax|| = sigma_max.
/// The zero matrix yields 0 with x = e_1.
NormResult operator_norm(const CMatrix& a);

/// sigma_max(A) without the singular vector.
double operator_norm_value(const CMatrix& a);

/// A*A symmetrized to be exactly Hermitian.
CMatrix gram(const CMatrix& a);

}  // namespace numrad

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>

#include "numrad/kernels.hpp"
#include "numrad/matrix.hpp"

namespace numrad {

/// Relative decision tolerance: Parallel iff target - achieved <= tol * max(1, target).
inline constexpr double kDecideTol = 1e-8;
inline constexpr double kWitnessTol = 1e-6;

enum class ParallelKind { omega, norm };
enum class Verdict { parallel, not_parallel };

const char* to_string(ParallelKind kind);
const char* to_string(Verdict verdict);

/// Residuals of a witness x for a pair (A, B).
///
/// For omega parallelism: product = | |<Ax,x><Bx,x>| - omega(A) omega(B) |,
/// a = | |<Ax,x>| - omega(A) |, b = | |<Bx,x>| - omega(B) |.
/// For norm parallelism: product = | |<Ax,Bx>| - ||A|| ||B|| |,
/// a = | ||Ax|| - ||A|| |, b = | ||Bx|| - ||B|| |.
struct WitnessCheck {
  bool ok = false;
  double product_residual = 0.0;
  double a_residual = 0.0;
  double b_residual = 0.0;
};

struct ParallelCertificate {
  ParallelKind kind = ParallelKind::omega;
  double lambda_phase = 0.0;  // lambda* = e^{i phase}, phase in [0, 2 pi)
  double achieved = 0.0;      // omega(A + lambda* B) or ||A + lambda* B||
  double target = 0.0;        // omega(A) + omega(B) or ||A|| + ||B||
  double gap = 0.0;           // target - achieved
  double a_value = 0.0;       // omega(A) or ||A||
  double b_value = 0.0;       // omega(B) or ||B||
  double decide_tol = 0.0;    // absolute threshold the gap was compared with
  double wit_tol = kWitnessTol;
  Verdict decision = Verdict::not_parallel;
  CVector witness;
  WitnessCheck witness_residuals;

  cplx lambda() const;
};

struct Decision {
  Verdict value = Verdict::not_parallel;
  ParallelCertificate certificate;

  bool parallel() const noexcept { return value == Verdict::parallel; }
};

struct ParallelOptions {
  double decide_tol = kDecideTol;  // relative
  double wit_tol = kWitnessTol;
  std::size_t phase_grid = 512;
  std::size_t max_brackets = 5;
  double phase_tol = 1e-12;
  /// Theta samples used for each omega(A + e^{i phi} B) during the phase
  /// search; the final certificate is always recomputed with the full
  /// 512-point radius search.
  std::size_t inner_grid = 64;
  Exec exec = default_exec();
};

/// Decides A ||_omega B: whether omega(A + lambda B) = omega(A) + omega(B)
/// for some unimodular lambda. The certificate's witness is the radius
/// witness of A + lambda* B. Either operand zero gives Parallel with
/// lambda* = 1 and zero gap.
Decision omega_parallel(const CMatrix& a, const CMatrix& b, double decide_tol = kDecideTol);
Decision omega_parallel(const CMatrix& a, const CMatrix& b, const ParallelOptions& opts);

/// Decides A || B in operator norm. The witness is the top right-singular
/// vector of A + lambda* B.
Decision norm_parallel(const CMatrix& a, const CMatrix& b, double decide_tol = kDecideTol);
Decision norm_parallel(const CMatrix& a, const CMatrix& b, const ParallelOptions& opts);

/// Checks | |<Ax,x><Bx,x>| - omega(A) omega(B) | <= wit_tol * max(1, omega(A) omega(B)).
/// x must be a unit vector.
WitnessCheck witness_check(const CMatrix& a, const CMatrix& b, const CVector& x,
                           double wit_tol = kWitnessTol);
/// Same check with omega(A), omega(B) already known.
WitnessCheck witness_check(const CMatrix& a, const CMatrix& b, const CVector& x, double omega_a,
                           double omega_b, double wit_tol);

/// Checks | |<Ax,Bx>| - ||A|| ||B|| | <= wit_tol * max(1, ||A|| ||B||).
WitnessCheck norm_witness_check(const CMatrix& a, const CMatrix& b, const CVector& x,
                                double norm_a, double norm_b, double wit_tol);

struct NormalBridge {
  bool is_applicable = false;
  std::optional<Decision> omega_decision;
  std::optional<Decision> norm_decision;
};

/// For a pair of normal matrices omega = norm, so omega parallelism implies
/// norm parallelism; runs both deciders when both inputs are normal.
NormalBridge normal_bridge(const CMatrix& a, const CMatrix& b, double decide_tol = kDecideTol);

/// [[0, e^{i theta} A], [e^{-i theta} B*, 0]], of dimension 2n.
CMatrix block_operator(const CMatrix& a, const CMatrix& b, double theta);

struct AdjointPair {};
struct ScaleGamma {
  cplx gamma;
};
struct ScaleReal {
  double alpha;
  double beta;
};
using PairTransform = std::variant<AdjointPair, ScaleGamma, ScaleReal>;

struct MatrixPair {
  CMatrix a;
  CMatrix b;
};

/// (A*, B*), (gamma A, gamma B) or (alpha A, beta B).
MatrixPair pair_transform(const CMatrix& a, const CMatrix& b, const PairTransform& mode);

struct RankOneParallel {
  Decision decision;
  bool dependent = false;
};

/// Decides x(x)x ||_omega y(x)y and tests x, y for linear dependence; the two
/// must agree.
RankOneParallel rank_one_self_parallel(const CVector& x, const CVector& y,
                                       double decide_tol = kDecideTol);

/// Smallest singular value of the n x 2 matrix [x y] relative to its largest.
double dependence_ratio(const CVector& x, const CVector& y);

enum class ScalarVerdict { scalar, non_scalar, inconclusive };
const char* to_string(ScalarVerdict verdict);

struct RankOneCounterexample {
  CVector x;
  CVector y;  // S = x (x) y
  Decision decision;
};

struct ScalarProbe {
  ScalarVerdict verdict = ScalarVerdict::inconclusive;
  std::size_t trials_run = 0;
  std::optional<RankOneCounterexample> counterexample;
};

/// Samples rank-one S = x (x) y with unit x and unit y orthogonal to x and
/// checks T ||_omega S. A single NotParallel S shows T is not scalar; if
/// every sample is Parallel the verdict is scalar only when T is within
/// 1e-8 of (tr T / n) I, and inconclusive otherwise. Requires dim T >= 3.
ScalarProbe scalar_identity_probe(const CMatrix& t, std::size_t trials, std::uint64_t seed,
                                  double decide_tol = kDecideTol);

/// Sampled check of <Tx, y> = 0 for y orthogonal to x: for each sampled unit
/// x, Tx must lie in span{x} within tol.
bool orthogonality_hypothesis_holds(const CMatrix& t, std::size_t samples, std::uint64_t seed,
                                    double tol = 1e-10);

}  // namespace numrad

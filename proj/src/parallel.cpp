#include "numrad/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "numrad/eigen.hpp"
#include "numrad/numrange.hpp"
#include "numrad/optimize.hpp"
#include "numrad/oracle.hpp"

namespace numrad {

const char* to_string(ParallelKind kind) { return kind == ParallelKind::omega ? "omega" : "norm"; }

const char* to_string(Verdict verdict) {
  return verdict == Verdict::parallel ? "Parallel" : "NotParallel";
}

const char* to_string(ScalarVerdict verdict) {
  switch (verdict) {
    case ScalarVerdict::scalar:
      return "scalar";
    case ScalarVerdict::non_scalar:
      return "non_scalar";
    case ScalarVerdict::inconclusive:
      break;
  }
  return "inconclusive";
}

cplx ParallelCertificate::lambda() const { return std::polar(1.0, lambda_phase); }

namespace {

void require_pair(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw InvalidArgument(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()) + ")");
  }
  if (!a.is_finite() || !b.is_finite()) throw InvalidArgument(std::string(what) + ": non-finite entries");
}

CMatrix rotate_sum(const CMatrix& a, const CMatrix& b, double phi) {
  return a + std::polar(1.0, phi) * b;
}

void require_unit(const CVector& x, const char* what) {
  if (!x.is_finite() || !x.is_unit(1e-12)) throw InvalidArgument(std::string(what) + ": x must be a unit vector");
}

// Lower bound on how far the phase objective can drop between the grid point
// nearest the maximizer and the maximizer itself: |e^{i phi} - e^{i psi}| <= 2 sin(h/4)
// when |phi - psi| <= h/2, and the objective is Lipschitz in lambda with
// constant omega(B) (or ||B||).
double phase_slack(double b_value, std::size_t grid) {
  const double h = 2.0 * std::numbers::pi / static_cast<double>(grid);
  return b_value * 2.0 * std::sin(0.25 * h);
}

void finish(ParallelCertificate& cert, double rel_tol) {
  cert.gap = cert.target - cert.achieved;
  cert.decide_tol = rel_tol * std::max(1.0, cert.target);
  cert.decision = cert.gap <= cert.decide_tol ? Verdict::parallel : Verdict::not_parallel;
}

}  // namespace

WitnessCheck witness_check(const CMatrix& a, const CMatrix& b, const CVector& x, double omega_a,
                           double omega_b, double wit_tol) {
  require_pair(a, b, "witness_check");
  require_unit(x, "witness_check");
  const double ax = std::abs(quadratic_form(a, x));
  const double bx = std::abs(quadratic_form(b, x));
  const double target = omega_a * omega_b;
  WitnessCheck out;
  out.product_residual = std::abs(ax * bx - target);
  out.a_residual = std::abs(ax - omega_a);
  out.b_residual = std::abs(bx - omega_b);
  out.ok = out.product_residual <= wit_tol * std::max(1.0, target);
  return out;
}

WitnessCheck witness_check(const CMatrix& a, const CMatrix& b, const CVector& x, double wit_tol) {
  require_pair(a, b, "witness_check");
  require_unit(x, "witness_check");
  return witness_check(a, b, x, numerical_radius(a).omega, numerical_radius(b).omega, wit_tol);
}

WitnessCheck norm_witness_check(const CMatrix& a, const CMatrix& b, const CVector& x,
                                double norm_a, double norm_b, double wit_tol) {
  require_pair(a, b, "norm_witness_check");
  require_unit(x, "norm_witness_check");
  const CVector ax = a.apply(x);
  const CVector bx = b.apply(x);
  const double target = norm_a * norm_b;
  WitnessCheck out;
  out.product_residual = std::abs(std::abs(inner(ax, bx)) - target);
  out.a_residual = std::abs(ax.norm() - norm_a);
  out.b_residual = std::abs(bx.norm() - norm_b);
  out.ok = out.product_residual <= wit_tol * std::max(1.0, target);
  return out;
}

Decision omega_parallel(const CMatrix& a, const CMatrix& b, double decide_tol) {
  ParallelOptions opts;
  opts.decide_tol = decide_tol;
  return omega_parallel(a, b, opts);
}

Decision omega_parallel(const CMatrix& a, const CMatrix& b, const ParallelOptions& opts) {
  require_pair(a, b, "omega_parallel");
  if (!(opts.decide_tol > 0.0)) throw InvalidArgument("omega_parallel: decide_tol must be positive");

  const RadiusResult ra = numerical_radius(a);
  const RadiusResult rb = numerical_radius(b);
  ParallelCertificate cert;
  cert.kind = ParallelKind::omega;
  cert.a_value = ra.omega;
  cert.b_value = rb.omega;
  cert.target = ra.omega + rb.omega;
  cert.wit_tol = opts.wit_tol;

  if (a.is_zero() || b.is_zero()) {
    // omega(A + B) = omega(A) + omega(B) holds exactly with lambda = 1.
    cert.lambda_phase = 0.0;
    cert.achieved = cert.target;
    cert.witness = a.is_zero() ? rb.witness : ra.witness;
  } else {
    std::vector<double> grid(opts.phase_grid);
    radius_phase_sweep(opts.exec, a, b, opts.inner_grid, grid);

    RadiusOptions inner;
    inner.grid = opts.inner_grid;
    inner.exec = opts.exec;
    auto objective = [&](double phi) { return numerical_radius_value(rotate_sum(a, b, phi), inner).omega; };
    const double slack = phase_slack(cert.b_value, opts.phase_grid);
    auto can_skip = [slack](double grid_value, double best) {
      return grid_value < best - slack - 1e-15 * best;
    };
    const Maximum best = periodic_maximize(std::span<const double>(grid), objective,
                                           PeriodicSearch{opts.max_brackets, opts.phase_tol},
                                           can_skip, 1e-14 * std::max(1.0, cert.target));

    const RadiusResult full = numerical_radius(rotate_sum(a, b, best.x));
    cert.lambda_phase = best.x;
    cert.achieved = full.omega;
    cert.witness = full.witness;
  }
  finish(cert, opts.decide_tol);
  cert.witness_residuals = witness_check(a, b, cert.witness, cert.a_value, cert.b_value, opts.wit_tol);
  return {cert.decision, cert};
}

Decision norm_parallel(const CMatrix& a, const CMatrix& b, double decide_tol) {
  ParallelOptions opts;
  opts.decide_tol = decide_tol;
  return norm_parallel(a, b, opts);
}

Decision norm_parallel(const CMatrix& a, const CMatrix& b, const ParallelOptions& opts) {
  require_pair(a, b, "norm_parallel");
  if (!(opts.decide_tol > 0.0)) throw InvalidArgument("norm_parallel: decide_tol must be positive");

  const NormResult na = operator_norm(a);
  const NormResult nb = operator_norm(b);
  ParallelCertificate cert;
  cert.kind = ParallelKind::norm;
  cert.a_value = na.value;
  cert.b_value = nb.value;
  cert.target = na.value + nb.value;
  cert.wit_tol = opts.wit_tol;

  if (a.is_zero() || b.is_zero()) {
    cert.lambda_phase = 0.0;
    cert.achieved = cert.target;
    cert.witness = a.is_zero() ? nb.right_singular : na.right_singular;
  } else {
    std::vector<double> grid(opts.phase_grid);
    norm_phase_sweep(opts.exec, a, b, grid);
    auto objective = [&](double phi) { return operator_norm_value(rotate_sum(a, b, phi)); };
    const double slack = phase_slack(cert.b_value, opts.phase_grid);
    auto can_skip = [slack](double grid_value, double best) {
      return grid_value < best - slack - 1e-15 * best;
    };
    const Maximum best = periodic_maximize(std::span<const double>(grid), objective,
                                           PeriodicSearch{opts.max_brackets, opts.phase_tol},
                                           can_skip, 1e-14 * std::max(1.0, cert.target));
    const NormResult full = operator_norm(rotate_sum(a, b, best.x));
    cert.lambda_phase = best.x;
    cert.achieved = full.value;
    cert.witness = full.right_singular;
  }
  finish(cert, opts.decide_tol);
  cert.witness_residuals =
      norm_witness_check(a, b, cert.witness, cert.a_value, cert.b_value, opts.wit_tol);
  return {cert.decision, cert};
}

NormalBridge normal_bridge(const CMatrix& a, const CMatrix& b, double decide_tol) {
  NormalBridge out;
  if (a.dim() != b.dim() || !is_normal(a) || !is_normal(b)) return out;
  out.is_applicable = true;
  out.omega_decision = omega_parallel(a, b, decide_tol);
  out.norm_decision = norm_parallel(a, b, decide_tol);
  return out;
}

CMatrix block_operator(const CMatrix& a, const CMatrix& b, double theta) {
  if (a.dim() != b.dim()) throw InvalidArgument("block_operator: dimension mismatch");
  const std::size_t n = a.dim();
  const cplx up = std::polar(1.0, theta);
  const cplx down = std::polar(1.0, -theta);
  CMatrix m(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, n + j) = up * a(i, j);
      m(n + i, j) = down * std::conj(b(j, i));
    }
  }
  return m;
}

MatrixPair pair_transform(const CMatrix& a, const CMatrix& b, const PairTransform& mode) {
  if (a.dim() != b.dim()) throw InvalidArgument("pair_transform: dimension mismatch");
  if (const auto* g = std::get_if<ScaleGamma>(&mode)) {
    if (g->gamma == cplx(0.0)) throw InvalidArgument("pair_transform: gamma must be nonzero");
    return {g->gamma * a, g->gamma * b};
  }
  if (const auto* s = std::get_if<ScaleReal>(&mode)) {
    if (s->alpha == 0.0 || s->beta == 0.0) {
      throw InvalidArgument("pair_transform: alpha and beta must be nonzero");
    }
    return {cplx(s->alpha) * a, cplx(s->beta) * b};
  }
  return {a.adjoint(), b.adjoint()};
}

double dependence_ratio(const CVector& x, const CVector& y) {
  if (x.size() != y.size()) throw InvalidArgument("dependence_ratio: dimension mismatch");
  const double r11 = x.norm();
  if (r11 == 0.0 || y.norm() == 0.0) throw InvalidArgument("dependence_ratio: zero vector");
  // QR of [x y] by modified Gram-Schmidt with one reorthogonalization.
  const CVector q = x.normalized();
  cplx r12 = inner(y, q);
  CVector r = y - r12 * q;
  const cplx fix = inner(r, q);
  r -= fix * q;
  r12 += fix;
  const double r22 = r.norm();
  const double fro2 = r11 * r11 + std::norm(r12) + r22 * r22;
  const double det = r11 * r22;
  const double smax = std::sqrt(0.5 * (fro2 + std::sqrt(std::max(0.0, fro2 * fro2 - 4.0 * det * det))));
  return det / smax / smax;
}

RankOneParallel rank_one_self_parallel(const CVector& x, const CVector& y, double decide_tol) {
  if (x.size() != y.size()) throw InvalidArgument("rank_one_self_parallel: dimension mismatch");
  if (x.norm() == 0.0 || y.norm() == 0.0) throw InvalidArgument("rank_one_self_parallel: zero vector");
  RankOneParallel out;
  out.decision = omega_parallel(rank_one(x, x), rank_one(y, y), decide_tol);
  out.dependent = dependence_ratio(x, y) <= 1e-10;
  return out;
}

ScalarProbe scalar_identity_probe(const CMatrix& t, std::size_t trials, std::uint64_t seed,
                                  double decide_tol) {
  const std::size_t n = t.dim();
  if (n < 3) throw InvalidArgument("scalar_identity_probe: dimension must be at least 3");
  if (trials == 0) throw InvalidArgument("scalar_identity_probe: need at least one trial");
  if (!t.is_finite()) throw InvalidArgument("scalar_identity_probe: non-finite entries");

  NormalSource rng(seed);
  auto draw = [&] {
    CVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = rng.complex_normal();
    return v;
  };

  ScalarProbe out;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const CVector x = draw().normalized();
    CVector y = draw();
    for (int pass = 0; pass < 2; ++pass) y -= inner(y, x) * x;
    y = y.normalized();

    ++out.trials_run;
    Decision d = omega_parallel(t, rank_one(x, y), decide_tol);
    if (!d.parallel()) {
      out.verdict = ScalarVerdict::non_scalar;
      out.counterexample = RankOneCounterexample{x, y, std::move(d)};
      return out;
    }
  }
  const cplx mu = t.trace() / static_cast<double>(n);
  out.verdict = max_abs_diff(t, mu * CMatrix::identity(n)) <= 1e-8 ? ScalarVerdict::scalar
                                                                   : ScalarVerdict::inconclusive;
  return out;
}

bool orthogonality_hypothesis_holds(const CMatrix& t, std::size_t samples, std::uint64_t seed,
                                    double tol) {
  for (const CVector& x : sphere_sample(t.dim(), samples, seed)) {
    const CVector tx = t.apply(x);
    if ((tx - inner(tx, x) * x).norm() > tol) return false;
  }
  return true;
}

}  // namespace numrad

#include "numrad/oracle.hpp"

#include <cmath>
#include <numbers>

namespace numrad {

double NormalSource::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

cplx NormalSource::complex_normal() {
  const double u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  const double t = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(t), r * std::sin(t)};
}

std::vector<CVector> sphere_sample(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n == 0) throw InvalidArgument("sphere_sample: dimension must be positive");
  NormalSource rng(seed);
  std::vector<CVector> out;
  out.reserve(count);
  while (out.size() < count) {
    CVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rng.complex_normal();
    // A zero draw has probability zero but would not normalize; redraw.
    if (x.norm() == 0.0) continue;
    out.push_back(x.normalized());
  }
  return out;
}

namespace {

constexpr double kStartStep = 0.1;
constexpr double kMinStep = 1e-7;
constexpr std::size_t kMaxPassesPerStep = 1000;

std::size_t hill_climb(const SphereObjective& objective, CVector& x, double& value) {
  std::size_t accepted = 0;
  const std::size_t n = x.size();
  for (double step = kStartStep; step >= kMinStep; step *= 0.5) {
    for (std::size_t pass = 0; pass < kMaxPassesPerStep; ++pass) {
      bool improved = false;
      for (std::size_t c = 0; c < 2 * n; ++c) {
        for (const double sign : {1.0, -1.0}) {
          CVector trial = x;
          const cplx delta = (c % 2 == 0) ? cplx(sign * step, 0.0) : cplx(0.0, sign * step);
          trial[c / 2] += delta;
          trial = trial.normalized();
          const double v = objective(trial);
          if (v > value) {
            x = std::move(trial);
            value = v;
            improved = true;
            ++accepted;
          }
        }
      }
      if (!improved) break;
    }
  }
  return accepted;
}

}  // namespace

OracleReport sphere_maximize(const SphereObjective& objective, std::size_t n, std::size_t count,
                             std::uint64_t seed, Exec exec) {
  if (count == 0) throw InvalidArgument("sphere_maximize: need at least one sample");
  const std::vector<CVector> samples = sphere_sample(n, count, seed);
  std::vector<double> values(count);
  evaluate_grid<double>(exec, [&](std::size_t k) { return objective(samples[k]); },
                        std::span<double>(values));

  std::size_t best = 0;
  for (std::size_t k = 1; k < count; ++k)
    if (values[k] > values[best]) best = k;

  OracleReport report;
  report.seed = seed;
  report.samples_used = count;
  report.best_vector = samples[best];
  report.best_value = values[best];
  report.refinement_steps = hill_climb(objective, report.best_vector, report.best_value);
  return report;
}

OracleReport brute_radius(const CMatrix& a, std::size_t count, std::uint64_t seed) {
  return sphere_maximize([&](const CVector& x) { return std::abs(quadratic_form(a, x)); },
                         a.dim(), count, seed);
}

OracleReport brute_pair_max(const CMatrix& a, const CMatrix& b, std::size_t count,
                            std::uint64_t seed) {
  if (a.dim() != b.dim()) throw InvalidArgument("brute_pair_max: dimension mismatch");
  return sphere_maximize(
      [&](const CVector& x) { return std::abs(quadratic_form(a, x) * quadratic_form(b, x)); },
      a.dim(), count, seed);
}

OracleReport brute_operator_norm(const CMatrix& a, std::size_t count, std::uint64_t seed) {
  return sphere_maximize([&](const CVector& x) { return a.apply(x).norm(); }, a.dim(), count,
                         seed);
}

}  // namespace numrad

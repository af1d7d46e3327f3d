#pragma once

// Brute-force reference maximizers over the unit sphere of C^n. They share
// nothing with the spectral path beyond the matrix type, so they can be used
// to check it.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "numrad/kernels.hpp"
#include "numrad/matrix.hpp"

namespace numrad {

/// Seeded source of standard normals.
///
/// Algorithm (fixed, so sampled values are reproducible across platforms):
/// std::mt19937_64 seeded with the 64-bit seed; a uniform double in [0, 1)
/// is (draw >> 11) * 2^-53; normals come in pairs from Box-Muller,
/// r = sqrt(-2 ln(1 - u1)), (r cos(2 pi u2), r sin(2 pi u2)).
/// The standard library's normal_distribution is not used because its
/// algorithm is implementation-defined.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed) : engine_(seed) {}

  double uniform();
  /// One complex standard normal: real and imaginary parts from one Box-Muller pair.
  cplx complex_normal();

 private:
  std::mt19937_64 engine_;
};

/// count unit vectors of C^n: each draws n complex normals (2n real normals)
/// and is normalized. Same seed, same list.
std::vector<CVector> sphere_sample(std::size_t n, std::size_t count, std::uint64_t seed);

struct OracleReport {
  double best_value = 0.0;
  CVector best_vector;
  std::size_t samples_used = 0;
  std::uint64_t seed = 0;
  std::size_t refinement_steps = 0;
};

using SphereObjective = std::function<double(const CVector&)>;

/// Best sample (lowest index on ties), then coordinate hill climbing on the
/// 2n real coordinates with renormalization after every move; the step
/// halves from 0.1 down to 1e-7. The result is always an evaluated point, so
/// best_value is an inner approximation of the true maximum.
OracleReport sphere_maximize(const SphereObjective& objective, std::size_t n, std::size_t count,
                             std::uint64_t seed, Exec exec = default_exec());

/// max |<Ax, x>| over the sphere, an inner approximation of omega(A).
OracleReport brute_radius(const CMatrix& a, std::size_t count = 5000, std::uint64_t seed = 42);

/// max |<Ax, x><Bx, x>| over the sphere.
OracleReport brute_pair_max(const CMatrix& a, const CMatrix& b, std::size_t count = 5000,
                            std::uint64_t seed = 42);

/// max ||Ax|| over the sphere, an inner approximation of ||A||.
OracleReport brute_operator_norm(const CMatrix& a, std::size_t count = 5000,
                                 std::uint64_t seed = 42);

}  // namespace numrad

#include "numrad/optimize.hpp"

namespace numrad {

std::vector<std::size_t> periodic_local_maxima(std::span<const double> v, std::size_t max_count) {
  const std::size_t n = v.size();
  std::vector<std::size_t> peaks;
  for (std::size_t k = 0; k < n; ++k) {
    const double prev = v[(k + n - 1) % n];
    const double next = v[(k + 1) % n];
    if (v[k] >= prev && v[k] >= next) peaks.push_back(k);
  }
  std::stable_sort(peaks.begin(), peaks.end(),
                   [&](std::size_t i, std::size_t j) { return v[i] > v[j]; });
  if (peaks.size() > max_count) peaks.resize(max_count);
  return peaks;
}

double wrap_angle(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;
  return r;
}

}  // namespace numrad

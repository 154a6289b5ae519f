#include "infogeo/quadrature.hpp"

#include <cstddef>
#include <vector>

namespace infogeo {

namespace {

constexpr std::size_t kPairwiseBlock = 32;

double pairwise(const double* v, std::size_t n) {
  if (n <= kPairwiseBlock) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += v[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise(v, half) + pairwise(v + half, n - half);
}

double simpson_even(std::span<const double> f, double h) {
  // f has an even number of intervals (odd number of points >= 3).
  const std::size_t n = f.size() - 1;
  std::vector<double> weighted(f.size());
  for (std::size_t i = 0; i <= n; ++i) {
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    weighted[i] = w * f[i];
  }
  return h / 3.0 * pairwise_sum(weighted);
}

}  // namespace

double pairwise_sum(std::span<const double> values) {
  return pairwise(values.data(), values.size());
}

double composite_simpson(std::span<const double> f, double h) {
  const std::size_t points = f.size();
  if (points < 2) return 0.0;
  const std::size_t n = points - 1;
  if (n == 1) return 0.5 * h * (f[0] + f[1]);
  if (n % 2 == 0) return simpson_even(f, h);
  // Odd interval count: Simpson on the first n - 3, 3/8 rule on the last 3.
  const double tail = 3.0 * h / 8.0 *
                      (f[n - 3] + 3.0 * f[n - 2] + 3.0 * f[n - 1] + f[n]);
  if (n == 3) return tail;
  return simpson_even(f.first(n - 2), h) + tail;
}

}  // namespace infogeo

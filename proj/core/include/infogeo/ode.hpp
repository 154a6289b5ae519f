#pragma once

#include <array>
#include <cstddef>

namespace infogeo {

/// One classical fourth-order Runge-Kutta step for y' = f(t, y) on a fixed
/// size state. The state element type only needs +, and * by double.
template <typename T, std::size_t N, typename Rhs>
std::array<T, N> rk4_step(const Rhs& f, double t, const std::array<T, N>& y,
                          double h) {
  auto axpy = [](const std::array<T, N>& a, double s,
                 const std::array<T, N>& b) {
    std::array<T, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = a[i] + s * b[i];
    return out;
  };
  const std::array<T, N> k1 = f(t, y);
  const std::array<T, N> k2 = f(t + 0.5 * h, axpy(y, 0.5 * h, k1));
  const std::array<T, N> k3 = f(t + 0.5 * h, axpy(y, 0.5 * h, k2));
  const std::array<T, N> k4 = f(t + h, axpy(y, h, k3));
  std::array<T, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

}  // namespace infogeo

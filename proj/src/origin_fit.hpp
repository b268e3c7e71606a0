#pragma once

#include <array>
#include <cmath>
#include <vector>

namespace dunkl::detail {

// Number of innermost nodes used to resolve the behaviour at the origin.
inline constexpr int kOriginNodes = 4;

using OriginMatrix = std::array<std::array<double, kOriginNodes>, kOriginNodes>;

// fit[j][k]: coefficient of t^{2j} in the even polynomial (degree 2 kOriginNodes - 2)
// interpolating samples at t_k = (k + 1/2) h.
inline OriginMatrix even_fit(double h) {
  std::array<double, kOriginNodes> u{};
  for (int k = 0; k < kOriginNodes; ++k) u[static_cast<std::size_t>(k)] = (k + 0.5) * (k + 0.5) * h * h;
  OriginMatrix fit{};
  for (std::size_t k = 0; k < u.size(); ++k) {
    std::vector<double> poly{1.0};  // coefficients in u, ascending
    double denom = 1.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (i == k) continue;
      std::vector<double> next(poly.size() + 1, 0.0);
      for (std::size_t d = 0; d < poly.size(); ++d) {
        next[d] -= u[i] * poly[d];
        next[d + 1] += poly[d];
      }
      poly = std::move(next);
      denom *= u[k] - u[i];
    }
    for (std::size_t j = 0; j < u.size(); ++j) fit[j][k] = poly[j] / denom;
  }
  return fit;
}

}  // namespace dunkl::detail

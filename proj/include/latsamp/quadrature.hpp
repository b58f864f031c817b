#pragma once

#include <array>
#include <functional>

namespace latsamp {

// 32-point Gauss-Legendre rule on [-1, 1]. Exact for polynomials up to degree 63;
// the table is frozen from an independent generator and checked by moment tests.
inline constexpr std::array<double, 32> kGl32Nodes = {
    -0.99726386184948157, -0.98561151154526838, -0.96476225558750639, -0.93490607593773967,
    -0.8963211557660522,  -0.84936761373256997, -0.79448379596794239, -0.73218211874028971,
    -0.66304426693021523, -0.5877157572407623,  -0.50689990893222936, -0.42135127613063533,
    -0.33186860228212767, -0.23928736225213706, -0.14447196158279649, -0.04830766568773831,
    0.04830766568773831,  0.14447196158279649,  0.23928736225213706,  0.33186860228212767,
    0.42135127613063533,  0.50689990893222936,  0.5877157572407623,   0.66304426693021523,
    0.73218211874028971,  0.79448379596794239,  0.84936761373256997,  0.8963211557660522,
    0.93490607593773967,  0.96476225558750639,  0.98561151154526838,  0.99726386184948157,
};

inline constexpr std::array<double, 32> kGl32Weights = {
    0.0070186100094692984, 0.016274394730905965, 0.025392065309262427, 0.034273862913021626,
    0.042835898022226426,  0.050998059262376244, 0.058684093478535704, 0.065822222776361752,
    0.072345794108848449,  0.078193895787070311, 0.083311924226946846, 0.087652093004403908,
    0.091173878695763863,  0.093844399080804566, 0.095638720079274833, 0.096540088514727812,
    0.096540088514727812,  0.095638720079274833, 0.093844399080804566, 0.091173878695763863,
    0.087652093004403908,  0.083311924226946846, 0.078193895787070311, 0.072345794108848449,
    0.065822222776361752,  0.058684093478535704, 0.050998059262376244, 0.042835898022226426,
    0.034273862913021626,  0.025392065309262427, 0.016274394730905965, 0.0070186100094692984,
};

// Integrates f over [a, b] with the 32-point rule.
inline double gl32_integrate(const std::function<double(double)>& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (int i = 0; i < 32; ++i) sum += kGl32Weights[static_cast<std::size_t>(i)] * f(mid + half * kGl32Nodes[static_cast<std::size_t>(i)]);
  return half * sum;
}

// Tensor rule over the square [ax, bx] x [ay, by].
inline double gl32_integrate_2d(const std::function<double(double, double)>& f,
                                double ax, double bx, double ay, double by) {
  const double hx = 0.5 * (bx - ax), mx = 0.5 * (ax + bx);
  const double hy = 0.5 * (by - ay), my = 0.5 * (ay + by);
  double sum = 0.0;
  for (int i = 0; i < 32; ++i) {
    const double x = mx + hx * kGl32Nodes[static_cast<std::size_t>(i)];
    double inner = 0.0;
    for (int j = 0; j < 32; ++j) {
      const double y = my + hy * kGl32Nodes[static_cast<std::size_t>(j)];
      inner += kGl32Weights[static_cast<std::size_t>(j)] * f(x, y);
    }
    sum += kGl32Weights[static_cast<std::size_t>(i)] * inner;
  }
  return hx * hy * sum;
}

}  // namespace latsamp

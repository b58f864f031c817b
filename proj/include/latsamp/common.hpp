#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace latsamp {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using IntPoint = std::vector<std::int64_t>;

// Coordinate-wise nearest integer; ties at half-integers round away from zero.
// std::llround has exactly that tie rule, so the choice is deterministic.
inline IntPoint round_nearest(const Vec& x) {
  IntPoint z(static_cast<std::size_t>(x.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) throw std::invalid_argument("round_nearest: non-finite input");
    z[static_cast<std::size_t>(i)] = std::llround(x[i]);
  }
  return z;
}

// Same rounding applied in place on doubles; used where the result feeds arithmetic.
inline Vec round_nearest_vec(const Vec& x) {
  Vec z(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i])) throw std::invalid_argument("round_nearest: non-finite input");
    z[i] = static_cast<double>(std::llround(x[i]));
  }
  return z;
}

inline Vec to_vec(const IntPoint& z) {
  Vec x(static_cast<Eigen::Index>(z.size()));
  for (std::size_t i = 0; i < z.size(); ++i) x[static_cast<Eigen::Index>(i)] = static_cast<double>(z[i]);
  return x;
}

}  // namespace latsamp

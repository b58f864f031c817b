#include "latsamp/lattice.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace latsamp {

GeneratorMatrix GeneratorMatrix::from(Mat B) {
  if (B.rows() != B.cols() || B.rows() == 0)
    throw std::invalid_argument("GeneratorMatrix: matrix must be square and nonempty");
  Eigen::JacobiSVD<Mat> svd(B);
  const auto& sv = svd.singularValues();
  if (!(sv(sv.size() - 1) > 1e-12 * sv(0)))
    throw std::invalid_argument("GeneratorMatrix: matrix is singular");
  GeneratorMatrix g;
  g.dim = static_cast<int>(B.rows());
  g.abs_det = std::abs(Eigen::PartialPivLU<Mat>(B).determinant());
  g.entries = std::move(B);
  return g;
}

GeneratorMatrix identity_generator(int d) {
  if (d <= 0) throw std::invalid_argument("identity_generator: dimension must be positive");
  return GeneratorMatrix::from(Mat::Identity(d, d));
}

namespace {
// Integer entries; the basis is this matrix divided by sqrt(8).
constexpr int kLeechRows[24][24] = {
    {8, 4, 4, 4, 4, 4, 4, 2, 4, 4, 4, 2, 4, 2, 2, 2, 4, 2, 2, 2, 0, 0, 0, -3},
    {0, 4, 0, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 0, 2, 2, 0, 0, 1},
    {0, 0, 4, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 2, 0, 0, 2, 0, 0, 2, 0, 0, 1},
    {0, 0, 0, 4, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 2, 0, 2, 0, 0, 1},
    {0, 0, 0, 0, 4, 0, 0, 2, 0, 0, 0, 0, 0, 2, 2, 2, 0, 2, 2, 2, 2, 0, 0, 1},
    {0, 0, 0, 0, 0, 4, 0, 2, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 4, 2, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 2, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 2, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 0, 2, 0, 2, 2, 2, 0, 2, 2, 2, 2, 2, 2, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 0, 2, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 2, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 2, 2, 2, 0, 0, 0, 0, 2, 2, 2, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 4, 2, 2, 2, 2, 2, 2, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 2, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 2, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 1},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};
}  // namespace

GeneratorMatrix leech_generator() {
  Mat B(24, 24);
  const double scale = 1.0 / std::sqrt(8.0);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < 24; ++j) B(i, j) = scale * kLeechRows[i][j];
  return GeneratorMatrix::from(std::move(B));
}

GeneratorMatrix load_generator(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_generator: cannot open " + path);
  int d = 0;
  if (!(in >> d) || d <= 0) throw std::runtime_error("load_generator: bad dimension line in " + path);
  Mat B(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (!(in >> B(i, j))) throw std::runtime_error("load_generator: truncated matrix in " + path);
  return GeneratorMatrix::from(std::move(B));
}

Vec lattice_map(const GeneratorMatrix& B, const IntPoint& z) {
  if (static_cast<int>(z.size()) != B.dim)
    throw std::invalid_argument("lattice_map: dimension mismatch");
  return B.entries * to_vec(z);
}

Gso gram_schmidt(const Mat& B) {
  const Eigen::Index d = B.cols();
  Gso g;
  g.btilde = Mat(B.rows(), d);
  g.mu = Mat::Identity(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    Vec v = B.col(i);
    for (Eigen::Index j = 0; j < i; ++j) {
      const double m = B.col(i).dot(g.btilde.col(j)) / g.btilde.col(j).squaredNorm();
      g.mu(i, j) = m;
      v -= m * g.btilde.col(j);
    }
    g.btilde.col(i) = v;
  }
  return g;
}

}  // namespace latsamp

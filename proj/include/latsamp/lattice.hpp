#pragma once

#include <string>

#include "latsamp/common.hpp"

namespace latsamp {

// Full-rank basis B whose columns generate the lattice {Bz : z integer}.
struct GeneratorMatrix {
  int dim = 0;
  Mat entries;
  double abs_det = 0.0;  // cached |det(B)|

  // Validates full rank (smallest singular value > 1e-12 relative) and caches the
  // determinant magnitude from a partial-pivot LU factorization.
  static GeneratorMatrix from(Mat B);
};

GeneratorMatrix identity_generator(int d);

// The 24-dimensional even unimodular lattice basis, stored as exact integers with
// a single 1/sqrt(8) scale. Upper-triangular; |det| = 1.
GeneratorMatrix leech_generator();

// Plain-text format: first line d, then d rows of d whitespace-separated reals.
GeneratorMatrix load_generator(const std::string& path);

Vec lattice_map(const GeneratorMatrix& B, const IntPoint& z);

// Column Gram-Schmidt: b_i = btilde_i + sum_{j<i} mu(i,j) btilde_j, with the
// btilde columns pairwise orthogonal. mu is unit lower triangular.
struct Gso {
  Mat btilde;
  Mat mu;
};
Gso gram_schmidt(const Mat& B);

}  // namespace latsamp

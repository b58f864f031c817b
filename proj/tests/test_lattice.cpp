#include "doctest.h"
#include "latsamp/lattice.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

using namespace latsamp;

TEST_SUITE("lattice") {

TEST_CASE("round_nearest basics and tie rule") {
  Vec x(2);
  x << 0.4, -0.6;
  CHECK(round_nearest(x) == IntPoint{0, -1});
  x << 0.5, -1.5;
  CHECK(round_nearest(x) == IntPoint{1, -2});
  Vec y(3);
  y << 1.2, 2.7, -3.49;
  CHECK(round_nearest(y) == IntPoint{1, 3, -3});
}

TEST_CASE("round_nearest is idempotent on integers and rejects non-finite input") {
  Vec x(3);
  x << -7, 0, 12;
  const IntPoint z = round_nearest(x);
  CHECK(round_nearest(to_vec(z)) == z);
  x << 1.0, std::nan(""), 0.0;
  CHECK_THROWS_AS(round_nearest(x), std::invalid_argument);
}

TEST_CASE("identity basis round-trips integer points") {
  const auto I = identity_generator(3);
  const IntPoint z{1, -2, 0};
  const Vec x = lattice_map(I, z);
  CHECK(round_nearest(x) == z);
  CHECK(I.abs_det == doctest::Approx(1.0));
}

TEST_CASE("diagonal basis scales coordinates") {
  Mat D = Mat::Zero(2, 2);
  D(0, 0) = 2.0;
  D(1, 1) = 3.0;
  const auto B = GeneratorMatrix::from(D);
  const Vec x = lattice_map(B, IntPoint{1, 1});
  CHECK(x[0] == doctest::Approx(2.0));
  CHECK(x[1] == doctest::Approx(3.0));
  CHECK(B.abs_det == doctest::Approx(6.0));
}

TEST_CASE("embedded 24-dim basis: entries, determinant, last column") {
  const auto L = leech_generator();
  const double s = 1.0 / std::sqrt(8.0);
  CHECK(L.dim == 24);
  CHECK(L.entries(0, 0) == doctest::Approx(8.0 * s).epsilon(1e-14));
  CHECK(L.entries(23, 23) == doctest::Approx(s).epsilon(1e-14));
  CHECK(std::abs(L.abs_det - 1.0) <= 1e-10);
  // upper-triangular
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < i; ++j) CHECK(L.entries(i, j) == 0.0);
  IntPoint e24(24, 0);
  e24[23] = 1;
  const Vec col = lattice_map(L, e24);
  CHECK(col[0] == doctest::Approx(-3.0 * s).epsilon(1e-14));
  CHECK(col.squaredNorm() == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("singular matrix is rejected") {
  Mat S = Mat::Ones(2, 2);
  CHECK_THROWS_AS(GeneratorMatrix::from(S), std::invalid_argument);
}

TEST_CASE("dimension mismatch is rejected") {
  const auto I = identity_generator(2);
  CHECK_THROWS_AS(lattice_map(I, IntPoint{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("file loader round-trips a matrix") {
  const char* path = "test_generator_roundtrip.txt";
  {
    std::ofstream out(path);
    out << "2\n1.5 0.25\n0 -2\n";
  }
  const auto B = load_generator(path);
  std::remove(path);
  CHECK(B.dim == 2);
  CHECK(B.entries(0, 1) == doctest::Approx(0.25));
  CHECK(B.abs_det == doctest::Approx(3.0));
  CHECK_THROWS_AS(load_generator("does_not_exist.txt"), std::runtime_error);
}

TEST_CASE("gram_schmidt orthogonalizes and reconstructs the basis") {
  const auto L = leech_generator();
  const Gso g = gram_schmidt(L.entries);
  for (int i = 0; i < 24; ++i)
    for (int j = 0; j < i; ++j) {
      const double dot = g.btilde.col(i).dot(g.btilde.col(j));
      const double scale = g.btilde.col(i).norm() * g.btilde.col(j).norm();
      CHECK(std::abs(dot) <= 1e-10 * scale);
    }
  // b_i = btilde_i + sum_{j<i} mu(i,j) btilde_j
  Mat rebuilt = Mat::Zero(24, 24);
  for (int i = 0; i < 24; ++i) {
    Vec v = g.btilde.col(i);
    for (int j = 0; j < i; ++j) v += g.mu(i, j) * g.btilde.col(j);
    rebuilt.col(i) = v;
  }
  CHECK((rebuilt - L.entries).cwiseAbs().maxCoeff() <= 1e-10);
}

}  // TEST_SUITE

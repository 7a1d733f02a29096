#pragma once

// shared helpers for the test suites

#include <random>

#include "holodd/linalg.hpp"

namespace holodd_test {

inline constexpr double pi = 3.14159265358979323846;

inline holodd::cmatrix random_hermitian(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  holodd::cmatrix g(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) g(r, c) = holodd::complexd(gauss(rng), gauss(rng));
  return 0.5 * (g + g.adjoint().eval());
}

inline holodd::cmatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  holodd::cmatrix g(rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) g(r, c) = holodd::complexd(gauss(rng), gauss(rng));
  return g;
}

inline holodd::cvector random_state(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  holodd::cvector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = holodd::complexd(gauss(rng), gauss(rng));
  v.normalize();
  return v;
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double max_abs_diff(const holodd::cmatrix& a, const holodd::cmatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace holodd_test

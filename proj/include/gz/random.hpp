#pragma once

#include <cmath>
#include <numbers>
#include <random>

#include "gz/types.hpp"

namespace gz {

/// Uniform on the closed unit disk.
inline Complex random_unit_disk(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double r = std::sqrt(u(rng));
  const double phi = 2.0 * std::numbers::pi * u(rng);
  return std::polar(r, phi);
}

/// Entries independently uniform on the unit disk.
inline Matrix random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = random_unit_disk(rng);
  return m;
}

inline Vector random_vector(Eigen::Index n, std::mt19937_64& rng) {
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = random_unit_disk(rng);
  return v;
}

/// Scales m so that its Frobenius norm is at most `bound`.
inline Matrix clamp_norm(Matrix m, double bound) {
  const double nrm = m.norm();
  if (nrm > bound) m *= bound / nrm;
  return m;
}

}  // namespace gz

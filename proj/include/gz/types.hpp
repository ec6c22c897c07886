#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace gz {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using ComplexList = std::vector<Complex>;

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

}  // namespace gz

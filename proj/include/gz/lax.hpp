#pragma once

#include <functional>
#include <vector>

#include "gz/types.hpp"

namespace gz {

using TimeMatrixFunction = std::function<Matrix(double)>;

/// Samples of a solution of d beta / dt = [beta, alpha] on a grid.
struct LaxPath {
  std::vector<double> grid;
  std::vector<Matrix> alpha;
  std::vector<Matrix> beta;
  /// max_t ||d beta/dt - [beta, alpha]|| with a fourth-order difference quotient.
  double residual = 0.0;
  /// max_t of the largest coefficient change of det(z - beta(t)).
  double drift = 0.0;
  /// max difference against the same problem on 2N steps (negative if not computed).
  double richardson = -1.0;
};

/// Classical RK4 on a uniform grid of N steps.
LaxPath lax_integrate(const TimeMatrixFunction& alpha, const Matrix& beta_a, double a, double b, int steps,
                      bool richardson = true);

/// Fourth-order derivative samples on a uniform grid (second order on short or
/// non-uniform grids).
std::vector<Matrix> differentiate(const std::vector<double>& grid, const std::vector<Matrix>& values);

double lax_residual(const LaxPath& path);
double isospectral_drift(const LaxPath& path);

/// alpha -> g alpha g^{-1} - g' g^{-1}, beta -> g beta g^{-1}, with g' by differences.
LaxPath gauge_apply(const std::vector<Matrix>& g, const LaxPath& path);
LaxPath gauge_apply(const TimeMatrixFunction& g, const LaxPath& path);

struct GaugeFix {
  Matrix g_b;
  /// Ad(g(b)) beta(b).
  Matrix X;
  std::vector<Matrix> g_path;
  /// max_t ||Ad(g(t)) beta(t) - X||.
  double drift = 0.0;
  /// Largest condition number of g(t) along the grid.
  double condition = 1.0;
};

/// Solves g' = g alpha, g(a) = I by RK4 (cubic interpolation of alpha at half
/// steps). Throws ValidationError if the path residual exceeds residual_tol and
/// NumericalError if g(t) becomes numerically singular.
GaugeFix gauge_fix_regular(const LaxPath& path, double residual_tol = 1e-6);

struct LaxTangent {
  std::vector<Matrix> alpha;
  std::vector<Matrix> beta;
};

/// Trapezoid rule for the integral of tr(da1 db2 - da2 db1).
Complex lax_symplectic(const LaxPath& path, const LaxTangent& t1, const LaxTangent& t2);

}  // namespace gz

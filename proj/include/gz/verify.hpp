#pragma once

#include <algorithm>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gz/types.hpp"

namespace gz::verify {

using ScalarFunction = std::function<Complex(std::span<const Complex>)>;
using MatrixFunction = std::function<Complex(const Matrix&)>;

enum class FdMethod {
  /// Wirtinger d/dz from real and imaginary central differences; works for any smooth f.
  Central,
  /// Trapezoid rule on a small circle (Cauchy integral). Spectrally accurate for
  /// holomorphic f, exact for polynomials of degree below the node count.
  Contour,
};

struct FdOptions {
  FdMethod method = FdMethod::Contour;
  /// Central step is step * (1 + |x_j|).
  double step = 1e-6;
  /// Contour radius is radius * (1 + |x_j|). Roundoff scales like eps |f| / radius
  /// while the truncation error is spectral, so a wide circle is the accurate choice.
  double radius = 1e-2;
  int contour_nodes = 16;
};

/// d f / d x_j for j = 0..d-1. Throws NumericalError on non-finite evaluations.
Vector fd_gradient(const ScalarFunction& f, std::span<const Complex> x, const FdOptions& opts = {});

/// Gradient with respect to the trace pairing: df(B)[X] = tr(grad * X),
/// so grad(j, i) = d f / d B(i, j).
Matrix matrix_gradient(const MatrixFunction& f, const Matrix& b, const FdOptions& opts = {});

/// tr(B [grad f, grad g]). With this sign d f / dt = {f, H} along the flow of H,
/// and the flow of (1/i) tr(B_(m))^i is B -> Ad(exp(t pad(B_(m))^{i-1})) B.
Complex lie_poisson_bracket(const MatrixFunction& f, const MatrixFunction& g, const Matrix& b,
                            const FdOptions& opts = {});
Complex lie_poisson_bracket_from_gradients(const Matrix& grad_f, const Matrix& grad_g, const Matrix& b);

/// A coordinate chart with a Poisson tensor P(x); {f, g} = sum_ab df_a P_ab dg_b.
struct Chart {
  int dimension = 0;
  std::vector<std::string> names;
  std::function<Matrix(std::span<const Complex>)> tensor;
};

/// Bracket in an explicit chart with finite-difference gradients. Checks antisymmetry of P.
Complex chart_poisson_bracket(const Chart& chart, const ScalarFunction& f, const ScalarFunction& g,
                              std::span<const Complex> x, const FdOptions& opts = {});

// Point-space distances. Additional point types supply the same pair of free functions.
inline double point_norm(const Matrix& a) { return a.norm(); }
inline double point_distance(const Matrix& a, const Matrix& b) { return (a - b).norm(); }

/// ||f1(f2(x)) - f2(f1(x))|| / (1 + ||x||).
template <class P, class F1, class F2>
double commute_defect(const F1& flow1, const F2& flow2, const P& x) {
  const P a = flow1(flow2(x));
  const P b = flow2(flow1(x));
  return point_distance(a, b) / (1.0 + point_norm(x));
}

/// max_j |I_j(flow(x)) - I_j(x)| / (1 + |I_j(x)|).
template <class P, class F, class Inv>
double conservation_defect(const F& flow, const Inv& invariants, const P& x) {
  const std::vector<Complex> before = invariants(x);
  const std::vector<Complex> after = invariants(flow(x));
  double worst = 0.0;
  for (std::size_t j = 0; j < before.size(); ++j)
    worst = std::max(worst, std::abs(after[j] - before[j]) / (1.0 + std::abs(before[j])));
  return worst;
}

struct VerificationReport {
  std::string test;
  int samples = 0;
  double max_defect = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  void record(double defect) {
    ++samples;
    max_defect = std::max(max_defect, defect);
  }
  VerificationReport& finish() {
    pass = max_defect <= tolerance;
    return *this;
  }
};

}  // namespace gz::verify

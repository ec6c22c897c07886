#pragma once

#include "gz/gzcore.hpp"
#include "gz/types.hpp"

namespace gz {

/// A pair (B, b) with b cyclic for B. Construct through vn_validate.
struct VnPoint {
  Matrix B;
  Vector b;
};

/// Accepts (B, b) iff the Krylov matrix (b, Bb, ..., B^{n-1} b) has full rank.
VnPoint vn_validate(const Matrix& b_mat, const Vector& b);

struct VnChart {
  Matrix krylov;        // (b, Bb, ..., B^{n-1} b), invertible
  ComplexList traces;   // (tr B, ..., tr B^n)
};
VnChart vn_iso(const VnPoint& p);

/// (B, b) -> (Ad(h) B, h b) for each index in lexicographic order, with
/// h = exp(z pad((B_(m))^{i-1})). Indices with m = n rescale b by polynomials in B.
VnPoint vn_gz_flow(const VnPoint& p, const GZGroupElement& lambda);

/// Relative threshold on |det g| for a point of T*GL(n).
inline constexpr double kInvertibilityTol = 1e-12;

/// (g, B) in the right trivialisation T*GL(n) = GL(n) x gl(n).
struct CotangentPoint {
  Matrix g;
  Matrix B;
};

CotangentPoint cotangent_validate(const Matrix& g, const Matrix& b);

/// -g^{-1} B g, the moment map of the right action.
Matrix right_moment(const CotangentPoint& x);

/// tr(rho1 b2 - rho2 b1 - B [rho1, rho2]) for right-invariant frame coefficients.
Complex tgl_symplectic(const CotangentPoint& x, const Matrix& rho1, const Matrix& b1, const Matrix& rho2,
                       const Matrix& b2);

enum class Side { Left, Right };

/// Left:  (g, B) -> (h g, Ad(h) B), h = exp(z pad((B_(m))^{i-1})).
/// Right: (g, B) -> (g exp(-z pad((C_(m))^{i-1})), B), C = -g^{-1} B g.
CotangentPoint tgl_flow(const CotangentPoint& x, Side side, GZIndex idx, Complex z);

/// All left-side index flows, then all right-side ones, each family in lexicographic order.
CotangentPoint tilde_a_flow(const CotangentPoint& x, const GZGroupElement& left, const GZGroupElement& right);

double point_norm(const VnPoint& p);
double point_distance(const VnPoint& a, const VnPoint& b);
double point_norm(const CotangentPoint& x);
double point_distance(const CotangentPoint& a, const CotangentPoint& b);

}  // namespace gz

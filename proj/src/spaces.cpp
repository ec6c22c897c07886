#include "gz/spaces.hpp"

#include <cmath>

#include "gz/error.hpp"
#include "gz/matpoly.hpp"

namespace gz {

VnPoint vn_validate(const Matrix& b_mat, const Vector& b) {
  if (b_mat.rows() != b_mat.cols() || b.size() != b_mat.rows())
    throw_domain("vn_validate: dimensions of B and b disagree");
  const int rank = krylov_rank(b_mat, b);
  if (rank != b_mat.rows())
    throw ValidationError("vn_validate: b is not cyclic for B (Krylov rank " + std::to_string(rank) + " < " +
                          std::to_string(b_mat.rows()) + ")");
  return {b_mat, b};
}

VnChart vn_iso(const VnPoint& p) {
  const auto n = p.B.rows();
  VnChart out{krylov_matrix(p.B, p.b), ComplexList(static_cast<std::size_t>(n))};
  Matrix power = p.B;
  for (Eigen::Index k = 0; k < n; ++k) {
    out.traces[static_cast<std::size_t>(k)] = power.trace();
    power = power * p.B;
  }
  return out;
}

VnPoint vn_gz_flow(const VnPoint& p, const GZGroupElement& lambda) {
  const int n = static_cast<int>(p.B.rows());
  if (lambda.n != n || static_cast<int>(lambda.params.size()) != gz_count(n))
    throw_domain("vn_gz_flow: group element has wrong size");
  VnPoint out = p;
  for (const GZIndex idx : gz_indices(n)) {
    const Complex z = lambda[idx];
    if (z == Complex(0.0)) continue;
    out.b = gz_group_factor(out.B, idx, z) * out.b;
    out.B = gz_flow_single(out.B, idx, z);
  }
  return out;
}

CotangentPoint cotangent_validate(const Matrix& g, const Matrix& b) {
  if (g.rows() != g.cols() || b.rows() != b.cols() || g.rows() != b.rows())
    throw_domain("cotangent_validate: g and B must be square of equal size");
  const double scale = std::pow(std::max(1.0, g.norm()), static_cast<double>(g.rows()));
  if (std::abs(g.determinant()) <= kInvertibilityTol * scale)
    throw ValidationError("cotangent_validate: g is not invertible");
  return {g, b};
}

Matrix right_moment(const CotangentPoint& x) {
  return -x.g.partialPivLu().solve(x.B * x.g);
}

Complex tgl_symplectic(const CotangentPoint& x, const Matrix& rho1, const Matrix& b1, const Matrix& rho2,
                       const Matrix& b2) {
  return (rho1 * b2 - rho2 * b1 - x.B * commutator(rho1, rho2)).trace();
}

CotangentPoint tgl_flow(const CotangentPoint& x, Side side, GZIndex idx, Complex z) {
  const int n = static_cast<int>(x.B.rows());
  check_index(idx, n);
  if (side == Side::Left) {
    // B moves by the same closed form as the GZ flow on gl(n).
    return {gz_group_factor(x.B, idx, z) * x.g, gz_flow_single(x.B, idx, z)};
  }
  const Matrix c = right_moment(x);
  return {x.g * gz_group_factor(c, idx, -z), x.B};
}

CotangentPoint tilde_a_flow(const CotangentPoint& x, const GZGroupElement& left, const GZGroupElement& right) {
  const int n = static_cast<int>(x.B.rows());
  if (left.n != n || right.n != n || static_cast<int>(left.params.size()) != gz_count(n) ||
      static_cast<int>(right.params.size()) != gz_count(n))
    throw_domain("tilde_a_flow: group elements have wrong size");
  CotangentPoint out = x;
  for (const GZIndex idx : gz_indices(n))
    if (left[idx] != Complex(0.0)) out = tgl_flow(out, Side::Left, idx, left[idx]);
  for (const GZIndex idx : gz_indices(n))
    if (right[idx] != Complex(0.0)) out = tgl_flow(out, Side::Right, idx, right[idx]);
  return out;
}

double point_norm(const VnPoint& p) { return std::sqrt(p.B.squaredNorm() + p.b.squaredNorm()); }

double point_distance(const VnPoint& a, const VnPoint& b) {
  return std::sqrt((a.B - b.B).squaredNorm() + (a.b - b.b).squaredNorm());
}

double point_norm(const CotangentPoint& x) { return std::sqrt(x.g.squaredNorm() + x.B.squaredNorm()); }

double point_distance(const CotangentPoint& a, const CotangentPoint& b) {
  return std::sqrt((a.g - b.g).squaredNorm() + (a.B - b.B).squaredNorm());
}

}  // namespace gz

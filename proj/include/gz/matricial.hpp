#pragma once

#include <random>
#include <string>
#include <vector>

#include "gz/polynomial.hpp"
#include "gz/types.hpp"

namespace gz {

/// Degrees (k_1, ..., k_n) of a based rational map into the full flag manifold.
struct MultiDegree {
  std::vector<int> k;

  int n() const { return static_cast<int>(k.size()); }
  /// k_i for 1-based i, with k_0 = k_{n+1} = 0.
  int at(int i) const { return (i < 1 || i > n()) ? 0 : k[static_cast<std::size_t>(i - 1)]; }
  int total() const;
  /// min(k_i, k_{i+1}): size of the i-th factor of the gauge group.
  int link(int i) const { return std::min(at(i), at(i + 1)); }
  void check() const;
};

/// Blocks of a generalised companion matrix of size k with an m x m X-block:
/// rows 1..m carry X and the last-column entries b; row m+1 carries a and c_1;
/// the remaining rows have a unit subdiagonal and last-column entries c_2..c_{k-m}.
struct CompanionBlocks {
  Matrix X;
  Vector a;  // length m (empty when m == k)
  Vector b;  // length m (empty when m == k)
  Vector c;  // length k - m
};

Matrix generalized_companion(const CompanionBlocks& blocks);
CompanionBlocks split_companion(const Matrix& b, int m);
/// Largest deviation of the structural entries (fixed zeros and ones) from their values.
double companion_shape_defect(const Matrix& b, int m);

/// The nilpotent shift with ones on the subdiagonal.
Matrix shift_matrix(int k);

struct UWPair {
  int i = 0;  // 1-based; present exactly when k_i == k_{i+1} >= 1
  Vector u;
  Vector w;
};

/// Tuple (B_i^-, B_i^+, g_i, u_i, w_i). Vectors of matrices are indexed by i - 1.
struct MatricialData {
  MultiDegree k;
  std::vector<Matrix> B_minus;
  std::vector<Matrix> B_plus;
  std::vector<Matrix> g;
  std::vector<UWPair> uw;

  const UWPair* uw_for(int i) const;
  UWPair* uw_for(int i);
};

/// The same shape carries tangent vectors (dB^-, dB^+, dg, du, dw).
using MatricialTangent = MatricialData;

enum class Violation { Shape, CompanionForm, BlockMatching, RankOneGap, Conjugacy, Invertibility };
std::string to_string(Violation v);

struct ValidationIssue {
  Violation kind;
  int i = 0;
  double defect = 0.0;
  std::string detail;
};

inline constexpr double kMatricialTol = 1e-8;

/// Every violated condition, reported separately. Empty means valid.
std::vector<ValidationIssue> md_check(const MatricialData& f, double tol = kMatricialTol);
/// Throws ValidationError listing md_check's findings; returns f otherwise.
const MatricialData& md_validate(const MatricialData& f, double tol = kMatricialTol);

/// h_i in GL(min(k_i, k_{i+1})) for i = 1..n-1, each embedded as blockdiag(h_i, 1).
MatricialData gk_act(const MatricialData& f, const std::vector<Matrix>& h);

/// lambda[i-1] = (lambda_{i1}, ..., lambda_{i k_i}) are the coefficients of
/// p_i(z) = sum_j lambda_ij z^j; g_i -> exp(p_i'(B_i^-)) g_i.
MatricialData ak_act(const MatricialData& f, const std::vector<ComplexList>& lambda);

/// q_i = det(z - B_i^-).
std::vector<Polynomial> polar(const MatricialData& f);

/// sum_i tr(dg_i g_i^{-1} ^ dB_i^- - B_i^- (dg_i g_i^{-1} ^ dg_i g_i^{-1})) - sum dw_j^T ^ du_j.
/// Tangents must satisfy the linearised defining conditions at f.
Complex md_symplectic(const MatricialData& f, const MatricialTangent& t1, const MatricialTangent& t2,
                      double tol = kMatricialTol);
/// Largest violation of the linearised conditions by a tangent vector.
double tangent_constraint_defect(const MatricialData& f, const MatricialTangent& t);

/// The rank-one-gap model with k = (1, 1) in the local coordinates (Y, p, u, w):
/// poles z_{1,2} = (Y -/+ u w) / 2, so z_2 - z_1 = u w. The matricial condition
/// B_1^+ - B_2^- = u_1 w_1 then holds with u_1 = -u, w_1 = w.
MatricialData rat11_from_local_model(Complex y, Complex p, Complex u, Complex w);

/// Solves for (a, c) so that the generalised companion matrix with blocks
/// (X, a, b, c) has characteristic polynomial `target` (monic, degree m + len).
/// Requires b cyclic for X.
CompanionBlocks complete_companion(const Matrix& x, const Vector& b, const Polynomial& target);

/// A random valid point of the model for degrees k (entries of order one).
MatricialData random_matricial(const MultiDegree& k, std::mt19937_64& rng);

/// Invertible g with g * from * g^{-1} = to, for regular matrices sharing a
/// characteristic polynomial. Throws NumericalError if no cyclic vector is found.
Matrix regular_conjugator(const Matrix& from, const Matrix& to);

}  // namespace gz

#pragma once

#include <span>
#include <vector>

#include "gz/polynomial.hpp"
#include "gz/types.hpp"

namespace gz {

/// Singular values above rows*cols-max * sigma_max * kRankRelTol count toward rank.
inline constexpr double kRankRelTol = 1e-10;
/// Default clustering tolerance, relative to (1 + max |point|).
inline constexpr double kClusterTol = 1e-8;

/// Upper-left m x m block, 1 <= m <= n.
Matrix leading_minor(const Matrix& a, int m);

/// det(zI - A) by the Faddeev-LeVerrier recursion.
Polynomial charpoly(const Matrix& a);

/// adj(A), from the same recursion (no inversion, valid for singular A).
Matrix adjugate(const Matrix& a);

/// Matrix exponential by scaling and squaring with a degree-13 Pade approximant.
Matrix matexp(const Matrix& a);

/// Roots of p as eigenvalues of its companion matrix, with multiplicity.
ComplexList roots(const Polynomial& p);

/// Companion matrix with unit subdiagonal and last column (beta_n, ..., beta_1)^T,
/// so that charpoly(companion_of(p)) == p.
Matrix companion_of(const Polynomial& p);

enum class NewtonDirection { PowerSumsToCoeffs, CoeffsToPowerSums };

/// Newton's identities. A coefficient list (c_0, ..., c_{n-1}) stands for the
/// monic z^n + c_{n-1} z^{n-1} + ... + c_0; a power-sum list is (p_1, ..., p_n).
ComplexList newton_convert(std::span<const Complex> values, NewtonDirection direction);

Polynomial power_sums_to_charpoly(std::span<const Complex> power_sums);
ComplexList charpoly_to_power_sums(const Polynomial& monic);

/// Singular values strictly above rel_tol * max(rows, cols) * sigma_max.
int numerical_rank(const Matrix& m, double rel_tol = kRankRelTol);

/// (b, Bb, ..., B^{n-1} b) as columns.
Matrix krylov_matrix(const Matrix& b_mat, const Vector& b);
int krylov_rank(const Matrix& b_mat, const Vector& b, double rel_tol = kRankRelTol);

struct Cluster {
  Complex representative;
  int multiplicity = 0;
  std::vector<int> members;  // indices into the input
};

/// Single-linkage clustering: two points join when |p - q| <= tol * (1 + max_k |p_k|).
/// Points are visited in (re, im) order; representatives are cluster means.
std::vector<Cluster> cluster_points(std::span<const Complex> points, double tol = kClusterTol);

/// Matrix with every entry finite.
bool all_finite(const Matrix& a);

/// Frobenius norm scale used for relative thresholds: max(1, ||A||_F).
double scale_of(const Matrix& a);

}  // namespace gz

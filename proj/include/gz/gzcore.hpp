#pragma once

#include <span>
#include <string>
#include <vector>

#include "gz/matpoly.hpp"
#include "gz/polynomial.hpp"
#include "gz/types.hpp"

namespace gz {

/// Minor size m and power/coefficient index i, 1 <= i <= m <= n.
struct GZIndex {
  int m = 1;
  int i = 1;
  bool operator==(const GZIndex&) const = default;
};

/// Number of indices with m <= n, i.e. n(n+1)/2.
constexpr int gz_count(int n) { return n * (n + 1) / 2; }
/// Position of (m, i) in lexicographic order.
constexpr int gz_flat(GZIndex idx) { return idx.m * (idx.m - 1) / 2 + (idx.i - 1); }
GZIndex gz_unflat(int flat);
std::vector<GZIndex> gz_indices(int n);
void check_index(GZIndex idx, int n);

enum class GZBasis { TracePower, CharPoly };
std::string to_string(GZBasis b);
GZBasis basis_from_string(const std::string& s);

struct GZCoordinates {
  int n = 0;
  GZBasis basis = GZBasis::TracePower;
  ComplexList values;  // length n(n+1)/2, lexicographic (m, i)

  Complex at(GZIndex idx) const { return values.at(static_cast<std::size_t>(gz_flat(idx))); }
  bool operator==(const GZCoordinates&) const = default;
};

/// Parameters of the abelian group acting through the minors. Entries with
/// m = n act trivially on gl(n); `restricted` marks elements meant for the
/// subgroup with m < n.
struct GZGroupElement {
  int n = 0;
  ComplexList params;
  bool restricted = false;

  static GZGroupElement zero(int n) { return {n, ComplexList(static_cast<std::size_t>(gz_count(n)), 0.0), false}; }
  static GZGroupElement single(int n, GZIndex idx, Complex z);
  Complex& operator[](GZIndex idx) { return params.at(static_cast<std::size_t>(gz_flat(idx))); }
  Complex operator[](GZIndex idx) const { return params.at(static_cast<std::size_t>(gz_flat(idx))); }
};

/// tr(B_(m))^i (trace-power basis) or the z^{i-1} coefficient of det(z - B_(m)).
GZCoordinates gz_map(const Matrix& b, GZBasis basis = GZBasis::TracePower);
GZCoordinates convert_basis(const GZCoordinates& c, GZBasis target);
/// det(z - B_(m)) for m = 1..n, read back from charpoly-basis coordinates.
std::vector<Polynomial> minor_charpolys(const GZCoordinates& c);

/// (B_(m))^{i-1} zero-padded into the upper-left corner of an n x n matrix.
Matrix gz_generator(const Matrix& b, GZIndex idx);
/// [gz_generator(B, idx), B]: the velocity of the one-parameter flow at z = 0.
Matrix gz_vector_field(const Matrix& b, GZIndex idx);
/// exp(z * gz_generator(B, idx)); equals blockdiag(exp(z (B_(m))^{i-1}), I).
Matrix gz_group_factor(const Matrix& b, GZIndex idx, Complex z);

/// Ad(exp(z pad((B_(m))^{i-1}))) B for one index.
Matrix gz_flow_single(const Matrix& b, GZIndex idx, Complex z);
/// Composite flow, indices applied in lexicographic order. Indices with m = n
/// are accepted and leave B unchanged.
Matrix gz_flow(const Matrix& b, const GZGroupElement& lambda);

struct RegularityResult {
  bool strongly_regular = false;
  int rank = 0;
  int required = 0;
};
/// Rank of the span of the n(n-1)/2 vector fields with m < n.
RegularityResult strongly_regular(const Matrix& b, double rel_tol = kRankRelTol);

/// Default relative tolerance for grouping polynomial roots.
inline constexpr double kStratumTol = 1e-6;

struct StratumRoot {
  Complex root;
  std::vector<int> multiplicities;  // order of vanishing of q_1..q_n at root
};
struct StratumSignature {
  std::vector<StratumRoot> roots;
  double tolerance = kStratumTol;
};

StratumSignature stratum_signature(std::span<const Polynomial> polys, double tol = kStratumTol);
StratumSignature stratum_signature(const GZCoordinates& c, double tol = kStratumTol);

enum class FiberMode { RationalMaps, Matrices };
std::string to_string(FiberMode m);
FiberMode fiber_mode_from_string(const std::string& s);

struct FiberOrbitData {
  int t = 0;
  int s = 0;
  long long count = 1;        // 2^t orbits of maximal dimension
  int total_degree = 0;       // |k|
  int cstar_factors = 0;      // orbit shape (C*)^s x C^{|k| - s}
  int c_factors = 0;
  std::vector<int> s_per_root;
  std::vector<int> t_per_root;
  StratumSignature signature;
};

/// Orbit count and shape for the fiber over the given monic polynomials.
/// In matrices mode the polynomials are chi_1..chi_n with deg chi_m = m.
FiberOrbitData fiber_orbit_data(std::span<const Polynomial> polys, FiberMode mode, double tol = kStratumTol);

/// 2^t with t = #{j : k_j != 0 and k_{j+1} != 0}.
long long sr_orbit_count_zero_fiber(std::span<const int> k);

}  // namespace gz

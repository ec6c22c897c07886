#pragma once

#include <random>
#include <string>
#include <vector>

#include "gz/matricial.hpp"

namespace gz {

/// Relative threshold for the nonzero tests below.
inline constexpr double kSigmaTol = 1e-10;

/// sigma(i) in {-1, 0, +1} for i = 1..n-1, stored at index i - 1.
struct SigmaMap {
  std::vector<int> values;
  /// Entries whose deciding quantity lay within two orders of magnitude of the threshold.
  std::vector<std::string> warnings;

  bool has_zero() const;
};

/// All B_i^+- nilpotent (characteristic polynomial z^{k_i} up to tol * scale).
bool is_nilpotent_fiber(const MatricialData& f, double tol = 1e-8);

/// Canonical position: for k_i > k_{i+1} the matrix B_{i+1}^- is the shift,
/// otherwise B_i^+ is. Requires every k_i >= 1.
bool in_canonical_position(const MatricialData& f, double tol = 1e-8);

/// Moves nilpotent-fiber data into canonical position with a G_k element.
/// Throws DomainError when a matrix to be normalised is not regular nilpotent.
MatricialData to_canonical(const MatricialData& f);

/// sigma_F on canonical nilpotent data; DomainError otherwise.
SigmaMap sigma_of(const MatricialData& f, double tol = kSigmaTol);

/// One canonical representative per sigma in {-1, +1}^{n-1}, in lexicographic
/// order of sigma with -1 first. Requires every k_i >= 1.
std::vector<MatricialData> enumerate_sr(const MultiDegree& k);

/// The canonical representative for a given sigma (entries +-1, length n-1).
MatricialData canonical_representative(const MultiDegree& k, const std::vector<int>& sigma);

/// Linearised isotropy: unknowns are the coefficients mu of p_i' and eta_i in gl(m_i).
struct IsotropyResult {
  int unknowns = 0;
  int nullity = 0;       // dimension of the full solution space
  int mu_dimension = 0;  // its projection onto the A_k directions
};
IsotropyResult isotropy_dimension(const MatricialData& f);

struct StrongRegularity {
  bool strongly_regular = false;
  SigmaMap sigma;
  IsotropyResult isotropy;
  /// sigma criterion and linearisation agree.
  bool consistent = false;
};

/// Accepts nilpotent-fiber data in any G_k gauge; canonicalises first if needed.
StrongRegularity md_strongly_regular(const MatricialData& f);

/// Max coefficient of left^T adj(z - X) right, recovered by sampling at
/// Chebyshev points and interpolating. Zero iff the polynomial vanishes.
double adjugate_pairing_defect(const Matrix& x, const Vector& left, const Vector& right);

/// Largest pairing defect a adj(z - X) b or w^T adj(z - X) u over the boundaries
/// of canonical nilpotent data.
double pairing_identity_defect(const MatricialData& f);

/// Random valid nilpotent-fiber data in canonical position with dense (a, b)
/// blocks; unequal boundaries solve for a from a random b.
MatricialData random_canonical_nilpotent(const MultiDegree& k, std::mt19937_64& rng);

}  // namespace gz

#pragma once

// Canonical chart on the open stratum: distinct poles z_l and residual values
// rho_l = p_i(z_l), flattened over (i, j). The symplectic form is
//   omega = sum_l d rho_l / rho_l ^ d z_l,
// and the Poisson tensor is P = -Omega^{-1}, giving {z_l, rho_k} = -delta_lk rho_k.
// In the variables r_l = z_l, s_l = 1 / rho_l this reads {r_l, s_k} = +delta_lk s_k.
// Coordinates are ordered (z_1, ..., z_L, rho_1, ..., rho_L).

#include <functional>
#include <random>
#include <span>
#include <string>

#include "gz/matricial.hpp"
#include "gz/types.hpp"
#include "gz/verify.hpp"

namespace gz {

struct OpenStratumChart {
  MultiDegree k;
  ComplexList poles;  // length |k|, ordered by i then j
  ComplexList rho;    // same indexing, nonzero

  int size() const { return static_cast<int>(poles.size()); }
  int dimension() const { return 2 * size(); }
  ComplexList point() const;
};

/// Throws DomainError on coincident poles (relative tol) or vanishing rho.
void chart_validate(const OpenStratumChart& c, double tol = 1e-8);

/// A function of the chart coordinates with an optional analytic gradient.
struct ChartFunction {
  std::string name;
  verify::ScalarFunction value;
  std::function<Vector(std::span<const Complex>)> gradient;  // empty: use finite differences
};

ChartFunction chart_r(int size, int l);    // z_l
ChartFunction chart_s(int size, int l);    // 1 / rho_l
ChartFunction chart_rho(int size, int l);  // rho_l

/// Omega(a, b) = omega(e_a, e_b).
Matrix chart_symplectic_matrix(const OpenStratumChart& c);
/// Closed-form Poisson tensor.
Matrix chart_poisson_tensor(const OpenStratumChart& c);

/// df^T P dg with the closed-form tensor.
/// Functions without an analytic gradient are differentiated with `opts`.
Complex chart_bracket(const OpenStratumChart& c, const ChartFunction& f, const ChartFunction& g,
                      const verify::FdOptions& opts = {});

/// Generic chart whose tensor is the numerical inverse -Omega^{-1}; independent of the closed form.
verify::Chart sympl_chart(const MultiDegree& k);
/// Bracket through sympl_chart with finite-difference gradients.
Complex chart_bracket_fd(const OpenStratumChart& c, const ChartFunction& f, const ChartFunction& g,
                         const verify::FdOptions& opts = {});

/// Poles in the disk of radius 2, pairwise at least 0.05 apart; |rho| in [0.5, 2].
OpenStratumChart random_chart(const MultiDegree& k, std::mt19937_64& rng);

}  // namespace gz

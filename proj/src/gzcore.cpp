#include "gz/gzcore.hpp"

#include <cmath>
#include <limits>

#include "gz/error.hpp"

namespace gz {

GZIndex gz_unflat(int flat) {
  int m = 1;
  while (gz_count(m) <= flat) ++m;
  return {m, flat - gz_count(m - 1) + 1};
}

std::vector<GZIndex> gz_indices(int n) {
  std::vector<GZIndex> out;
  out.reserve(static_cast<std::size_t>(gz_count(n)));
  for (int m = 1; m <= n; ++m)
    for (int i = 1; i <= m; ++i) out.push_back({m, i});
  return out;
}

void check_index(GZIndex idx, int n) {
  if (idx.i < 1 || idx.i > idx.m || idx.m > n)
    throw_domain("GZ index (" + std::to_string(idx.m) + "," + std::to_string(idx.i) + ") invalid for n = " +
                 std::to_string(n));
}

std::string to_string(GZBasis b) { return b == GZBasis::TracePower ? "tr-power" : "charpoly"; }

GZBasis basis_from_string(const std::string& s) {
  if (s == "tr-power") return GZBasis::TracePower;
  if (s == "charpoly") return GZBasis::CharPoly;
  throw_domain("unknown GZ basis '" + s + "'");
}

GZGroupElement GZGroupElement::single(int n, GZIndex idx, Complex z) {
  check_index(idx, n);
  GZGroupElement g = zero(n);
  g[idx] = z;
  return g;
}

GZCoordinates gz_map(const Matrix& b, GZBasis basis) {
  if (b.rows() != b.cols()) throw_domain("gz_map: matrix is not square");
  const int n = static_cast<int>(b.rows());
  GZCoordinates out{n, basis, ComplexList(static_cast<std::size_t>(gz_count(n)))};
  for (int m = 1; m <= n; ++m) {
    const Matrix minor = b.topLeftCorner(m, m);
    if (basis == GZBasis::TracePower) {
      Matrix power = minor;
      for (int i = 1; i <= m; ++i) {
        out.values[static_cast<std::size_t>(gz_flat({m, i}))] = power.trace();
        power = power * minor;
      }
    } else {
      const Polynomial chi = charpoly(minor);
      for (int i = 1; i <= m; ++i) out.values[static_cast<std::size_t>(gz_flat({m, i}))] = chi[i - 1];
    }
  }
  return out;
}

GZCoordinates convert_basis(const GZCoordinates& c, GZBasis target) {
  if (c.basis == target) return c;
  GZCoordinates out{c.n, target, ComplexList(c.values.size())};
  const auto dir = target == GZBasis::CharPoly ? NewtonDirection::PowerSumsToCoeffs : NewtonDirection::CoeffsToPowerSums;
  for (int m = 1; m <= c.n; ++m) {
    const auto first = static_cast<std::size_t>(gz_flat({m, 1}));
    const ComplexList conv = newton_convert(std::span<const Complex>(c.values.data() + first, static_cast<std::size_t>(m)), dir);
    std::copy(conv.begin(), conv.end(), out.values.begin() + static_cast<std::ptrdiff_t>(first));
  }
  return out;
}

std::vector<Polynomial> minor_charpolys(const GZCoordinates& c) {
  const GZCoordinates cp = convert_basis(c, GZBasis::CharPoly);
  std::vector<Polynomial> out;
  for (int m = 1; m <= cp.n; ++m) {
    ComplexList coeffs(static_cast<std::size_t>(m) + 1, 1.0);
    for (int i = 1; i <= m; ++i) coeffs[static_cast<std::size_t>(i - 1)] = cp.at({m, i});
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

Matrix gz_generator(const Matrix& b, GZIndex idx) {
  const int n = static_cast<int>(b.rows());
  check_index(idx, n);
  Matrix p = Matrix::Zero(n, n);
  const Matrix minor = b.topLeftCorner(idx.m, idx.m);
  Matrix power = Matrix::Identity(idx.m, idx.m);
  for (int k = 1; k < idx.i; ++k) power = power * minor;
  p.topLeftCorner(idx.m, idx.m) = power;
  return p;
}

Matrix gz_vector_field(const Matrix& b, GZIndex idx) { return commutator(gz_generator(b, idx), b); }

Matrix gz_group_factor(const Matrix& b, GZIndex idx, Complex z) {
  const int n = static_cast<int>(b.rows());
  check_index(idx, n);
  Matrix h = Matrix::Identity(n, n);
  const Matrix block = gz_generator(b, idx).topLeftCorner(idx.m, idx.m);
  h.topLeftCorner(idx.m, idx.m) = matexp(z * block);
  return h;
}

Matrix gz_flow_single(const Matrix& b, GZIndex idx, Complex z) {
  const int n = static_cast<int>(b.rows());
  check_index(idx, n);
  if (idx.m == n || z == Complex(0.0)) return b;
  // h = blockdiag(e, I) with e = exp(z (B_(m))^{i-1}); e commutes with B_(m), so that block stays put.
  const int m = idx.m;
  const Matrix block = gz_generator(b, idx).topLeftCorner(m, m);
  const Matrix e = matexp(z * block);
  const Matrix e_inv = matexp(-z * block);
  Matrix out = b;
  out.topRightCorner(m, n - m) = e * b.topRightCorner(m, n - m);
  out.bottomLeftCorner(n - m, m) = b.bottomLeftCorner(n - m, m) * e_inv;
  return out;
}

Matrix gz_flow(const Matrix& b, const GZGroupElement& lambda) {
  const int n = static_cast<int>(b.rows());
  if (b.rows() != b.cols()) throw_domain("gz_flow: matrix is not square");
  if (lambda.n != n || static_cast<int>(lambda.params.size()) != gz_count(n))
    throw_domain("gz_flow: group element has wrong size");
  Matrix out = b;
  for (const GZIndex idx : gz_indices(n)) out = gz_flow_single(out, idx, lambda[idx]);
  return out;
}

RegularityResult strongly_regular(const Matrix& b, double rel_tol) {
  if (b.rows() != b.cols()) throw_domain("strongly_regular: matrix is not square");
  const int n = static_cast<int>(b.rows());
  const int required = n * (n - 1) / 2;
  if (required == 0) return {true, 0, 0};
  Matrix stack(n * n, required);
  int col = 0;
  for (int m = 1; m < n; ++m)
    for (int i = 1; i <= m; ++i) {
      const Matrix v = gz_vector_field(b, {m, i});
      stack.col(col++) = Eigen::Map<const Vector>(v.data(), n * n);
    }
  const int rank = numerical_rank(stack, rel_tol);
  return {rank == required, rank, required};
}

namespace {

// c is accepted as a root of order >= m of q when the Taylor coefficients
// q^(i)(c) / i!, i < m, are within a small multiple of rounding error.
bool plausible_multiple_root(const Polynomial& q, Complex c, int m) {
  constexpr double kBackward = 1e3 * std::numeric_limits<double>::epsilon();
  ComplexList abs_coeffs;
  for (const Complex& a : q.coefficients()) abs_coeffs.push_back(std::abs(a));
  Polynomial d = q;
  Polynomial bound(abs_coeffs);
  double factorial = 1.0;
  for (int i = 0; i < m; ++i) {
    if (i > 0) factorial *= i;
    if (std::abs(d(c)) / factorial > kBackward * std::abs(bound(std::abs(c))) / factorial) return false;
    d = d.derivative();
    bound = bound.derivative();
  }
  return true;
}

struct RootGroup {
  std::vector<int> members;
  Complex mean;
};

}  // namespace

StratumSignature stratum_signature(std::span<const Polynomial> polys, double tol) {
  const int n = static_cast<int>(polys.size());
  ComplexList all;
  std::vector<int> owner;
  double max_abs = 0.0;
  for (int j = 0; j < n; ++j) {
    const Polynomial& q = polys[static_cast<std::size_t>(j)];
    if (!q.is_monic()) throw_domain("stratum_signature: polynomial q_" + std::to_string(j + 1) + " is not monic");
    for (const Complex& r : roots(q)) {
      all.push_back(r);
      owner.push_back(j);
      max_abs = std::max(max_abs, std::abs(r));
    }
  }
  // Multiple roots away from the origin split by about eps^(1/m). Groups found
  // at `tol` are joined by single linkage up to a cap, and the dendrogram is
  // cut at the largest subtrees whose merged mean is a root of every q_j to
  // the merged order.
  struct Node {
    std::vector<int> members;
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;
  std::vector<int> active;
  for (const Cluster& c : cluster_points(all, tol)) {
    active.push_back(static_cast<int>(nodes.size()));
    nodes.push_back({c.members});
  }
  auto linkage = [&](const Node& x, const Node& y) {
    double d = std::numeric_limits<double>::infinity();
    for (int p : x.members)
      for (int q : y.members) d = std::min(d, std::abs(all[static_cast<std::size_t>(p)] - all[static_cast<std::size_t>(q)]));
    return d;
  };
  const double cap = 1e-2 * (1.0 + max_abs);
  for (;;) {
    double best = cap;
    std::size_t pa = 0, pb = 0;
    bool found = false;
    for (std::size_t a = 0; a < active.size(); ++a)
      for (std::size_t b = a + 1; b < active.size(); ++b) {
        const double d = linkage(nodes[static_cast<std::size_t>(active[a])], nodes[static_cast<std::size_t>(active[b])]);
        if (d <= best) {
          best = d;
          pa = a;
          pb = b;
          found = true;
        }
      }
    if (!found) break;
    Node joined;
    joined.left = active[pa];
    joined.right = active[pb];
    joined.members = nodes[static_cast<std::size_t>(joined.left)].members;
    const auto& rm = nodes[static_cast<std::size_t>(joined.right)].members;
    joined.members.insert(joined.members.end(), rm.begin(), rm.end());
    active.erase(active.begin() + static_cast<std::ptrdiff_t>(pb));
    active[pa] = static_cast<int>(nodes.size());
    nodes.push_back(std::move(joined));
  }
  auto mean_of = [&](const std::vector<int>& members) {
    Complex m = 0.0;
    for (int p : members) m += all[static_cast<std::size_t>(p)];
    return m / static_cast<double>(members.size());
  };
  // The mean of an m-fold cluster is refined by Newton's method on q^(m-1),
  // which has a simple root there.
  auto centre_of = [&](const std::vector<int>& members, const std::vector<int>& counts) {
    const Complex start = mean_of(members);
    const auto top = std::max_element(counts.begin(), counts.end());
    if (*top < 2) return start;
    Polynomial d = polys[static_cast<std::size_t>(top - counts.begin())];
    for (int i = 1; i < *top; ++i) d = d.derivative();
    const Polynomial dd = d.derivative();
    Complex c = start;
    for (int it = 0; it < 50; ++it) {
      const Complex slope = dd(c);
      if (slope == Complex(0.0)) break;
      const Complex step = d(c) / slope;
      c -= step;
      if (std::abs(step) <= 4 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(c))) break;
    }
    return std::isfinite(c.real()) && std::isfinite(c.imag()) && std::abs(c - start) <= cap ? c : start;
  };
  auto counts_of = [&](const std::vector<int>& members) {
    std::vector<int> counts(static_cast<std::size_t>(n), 0);
    for (int p : members) ++counts[static_cast<std::size_t>(owner[static_cast<std::size_t>(p)])];
    return counts;
  };
  auto passes = [&](const std::vector<int>& members, Complex& centre) {
    const std::vector<int> counts = counts_of(members);
    centre = centre_of(members, counts);
    for (int j = 0; j < n; ++j)
      if (counts[static_cast<std::size_t>(j)] > 0 &&
          !plausible_multiple_root(polys[static_cast<std::size_t>(j)], centre, counts[static_cast<std::size_t>(j)]))
        return false;
    return true;
  };
  std::vector<RootGroup> groups;
  std::vector<int> stack(active.rbegin(), active.rend());
  while (!stack.empty()) {
    const Node& node = nodes[static_cast<std::size_t>(stack.back())];
    stack.pop_back();
    Complex centre;
    if (node.left < 0) {
      groups.push_back({node.members, mean_of(node.members)});
    } else if (passes(node.members, centre)) {
      groups.push_back({node.members, centre});
    } else {
      stack.push_back(node.right);
      stack.push_back(node.left);
    }
  }
  std::stable_sort(groups.begin(), groups.end(), [](const RootGroup& x, const RootGroup& y) {
    return x.mean.real() < y.mean.real() || (x.mean.real() == y.mean.real() && x.mean.imag() < y.mean.imag());
  });

  StratumSignature sig;
  sig.tolerance = tol;
  for (const RootGroup& g : groups) {
    StratumRoot sr{g.mean, std::vector<int>(static_cast<std::size_t>(n), 0)};
    for (int member : g.members) ++sr.multiplicities[static_cast<std::size_t>(owner[static_cast<std::size_t>(member)])];
    sig.roots.push_back(std::move(sr));
  }
  return sig;
}

StratumSignature stratum_signature(const GZCoordinates& c, double tol) {
  const std::vector<Polynomial> polys = minor_charpolys(c);
  return stratum_signature(polys, tol);
}

std::string to_string(FiberMode m) { return m == FiberMode::RationalMaps ? "rational-maps" : "matrices"; }

FiberMode fiber_mode_from_string(const std::string& s) {
  if (s == "rational-maps") return FiberMode::RationalMaps;
  if (s == "matrices") return FiberMode::Matrices;
  throw_domain("unknown fiber mode '" + s + "'");
}

FiberOrbitData fiber_orbit_data(std::span<const Polynomial> polys, FiberMode mode, double tol) {
  const int n = static_cast<int>(polys.size());
  FiberOrbitData out;
  for (int j = 0; j < n; ++j) {
    const int deg = polys[static_cast<std::size_t>(j)].degree();
    if (mode == FiberMode::Matrices && deg != j + 1)
      throw_domain("fiber_orbit_data: chi_" + std::to_string(j + 1) + " has degree " + std::to_string(deg) +
                   ", expected " + std::to_string(j + 1));
    if (deg < 0) throw_domain("fiber_orbit_data: zero polynomial");
    out.total_degree += deg;
  }
  out.signature = stratum_signature(polys, tol);
  for (const StratumRoot& r : out.signature.roots) {
    int s_i = 0;
    int t_i = 0;
    for (int j = 0; j < n; ++j) {
      const bool here = r.multiplicities[static_cast<std::size_t>(j)] > 0;
      if (here) ++s_i;
      // q_{n+1} == 1 never vanishes, so only j + 1 <= n contributes.
      if (here && j + 1 < n && r.multiplicities[static_cast<std::size_t>(j + 1)] > 0) ++t_i;
    }
    out.s_per_root.push_back(s_i);
    out.t_per_root.push_back(t_i);
    out.s += s_i;
    out.t += t_i;
  }
  out.count = 1LL << out.t;
  out.cstar_factors = out.s;
  out.c_factors = out.total_degree - out.s;
  return out;
}

long long sr_orbit_count_zero_fiber(std::span<const int> k) {
  int t = 0;
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (k[j] < 0) throw_domain("sr_orbit_count_zero_fiber: negative degree");
    if (j + 1 < k.size() && k[j] != 0 && k[j + 1] != 0) ++t;
  }
  return 1LL << t;
}

}  // namespace gz
